#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input could not be parsed. Carries a 1-based line/column when known.
class ParseError : public Error {
public:
  ParseError(std::string source, std::size_t line, std::size_t column,
             const std::string &message)
      : Error(source + ":" + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        source_(std::move(source)), line_(line), column_(column) {}

  const std::string &source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

/// A requested group would exceed the configured order cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A construction request that does not name a supported group.
class UnsupportedFamily : public Error {
public:
  using Error::Error;
};

/// Presentation or generator data that does not define a valid p-group.
class InvalidGroup : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug or corrupt input.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace cgl
