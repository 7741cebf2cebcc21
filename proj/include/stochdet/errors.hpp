#pragma once

#include <stdexcept>
#include <string>

namespace stochdet {

// Base class for all library errors. The CLI maps the three categories
// below onto distinct exit codes.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration or arguments (CLI exit code 2).
class ConfigError : public Error {
public:
  using Error::Error;
};

// Malformed or inconsistent input data (CLI exit code 3).
class DataError : public Error {
public:
  using Error::Error;
};

// Numeric failure, e.g. a diverged training loss (CLI exit code 4).
class NumericError : public Error {
public:
  using Error::Error;
};

// --- data errors ---

class ParseError : public DataError {
public:
  using DataError::DataError;
};

class IntegrityError : public DataError {
public:
  using DataError::DataError;
};

class MixedImages : public DataError {
public:
  using DataError::DataError;
};

class EmptyRuns : public DataError {
public:
  using DataError::DataError;
};

class EmptyBatch : public DataError {
public:
  using DataError::DataError;
};

class EmptyInput : public DataError {
public:
  using DataError::DataError;
};

class MismatchedImageIds : public DataError {
public:
  using DataError::DataError;
};

class UnknownClass : public DataError {
public:
  using DataError::DataError;
};

class ZeroWeightMass : public DataError {
public:
  using DataError::DataError;
};

// --- config errors ---

class StepOutOfRange : public ConfigError {
public:
  using ConfigError::ConfigError;
};

// --- numeric errors ---

class DivergedLoss : public NumericError {
public:
  using NumericError::NumericError;
};

}  // namespace stochdet
