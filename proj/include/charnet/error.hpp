#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charnet {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed book file. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed genre map.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A metric was asked for outside its domain (graph too small, empty input).
class DomainError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class DegenerateDistributionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InsufficientTailError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UndefinedCorrelationError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace charnet
