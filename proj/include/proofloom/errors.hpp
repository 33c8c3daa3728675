#pragma once

#include <stdexcept>
#include <string>

namespace proofloom {

// Base for all engine errors. The CLI maps subclasses to exit codes:
// ConfigError -> 1, IoError/SchemaError -> 2, ProviderError -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Filesystem and dataset-layout problems (missing files, malformed records).
struct IoError : Error {
  using Error::Error;
};

// A document violates its schema. Messages carry the offending path.
struct SchemaError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

// Backend failure that survived the retry policy.
struct ProviderError : Error {
  using Error::Error;
};

// Transient transport failure; eligible for retry.
struct TransportError : ProviderError {
  using ProviderError::ProviderError;
};

// The request payload itself is unusable (e.g. unresolvable frame).
struct InputError : ProviderError {
  using ProviderError::ProviderError;
};

// Model output could not be parsed into the expected shape.
struct ResponseParseError : Error {
  using Error::Error;
};

// Per-proof provider-call budget spent.
struct BudgetExhausted : Error {
  using Error::Error;
};

struct DecompositionError : Error {
  using Error::Error;
};

struct ScoringError : Error {
  using Error::Error;
};

struct ImportError : Error {
  using Error::Error;
};

}  // namespace proofloom
