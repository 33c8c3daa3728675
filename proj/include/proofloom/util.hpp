#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace proofloom::util {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

bool ends_with_sentence_punct(std::string_view s);
// Appends '.' when the text lacks sentence-final punctuation.
std::string ensure_sentence(std::string s);
std::string strip_final_punct(std::string s);
std::string strip_outer_quotes(std::string s);

std::vector<std::string> split_lines(std::string_view s);

// "1. first\n2. second" -- the list shape used for multi-item prompt bindings.
std::string number_lines(const std::vector<std::string>& items);
// Recovers the items from numbered lines; unnumbered non-empty lines are kept as-is.
std::vector<std::string> parse_numbered_lines(std::string_view text);

uint64_t fnv1a64(std::string_view s);
std::string hex64(uint64_t v);

std::string base64_encode(std::string_view bytes);

}  // namespace proofloom::util
