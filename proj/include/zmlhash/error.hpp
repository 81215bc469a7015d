#pragma once

#include <stdexcept>

namespace zmlhash {

// Error taxonomy shared by all modules. The CLI maps these to a
// stage-tagged message and a nonzero exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; message carries the line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Label name unknown to, or inconsistent with, the vocabulary.
class VocabularyError : public Error {
 public:
  using Error::Error;
};

// Invalid or out-of-range configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operation precondition violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Non-finite value where a finite one is required.
class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace zmlhash
