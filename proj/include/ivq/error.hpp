#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ivq {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Table entry out of range, ragged rows, or unreadable table text.
class MalformedTable : public Error {
public:
  using Error::Error;
};

/// A table failed one of the quandle identities.
class AxiomError : public Error {
public:
  using Error::Error;
};

/// A closure, completion or enumeration outgrew its configured bound.
class Overflow : public Error {
public:
  explicit Overflow(std::size_t limit)
      : Error("overflow: more than " + std::to_string(limit) + " elements"),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t limit_;
};

class SizeLimit : public Error {
public:
  using Error::Error;
};

class DegreeMismatch : public Error {
public:
  using Error::Error;
};

class NotConnected : public Error {
public:
  using Error::Error;
};

class NotSimple : public Error {
public:
  using Error::Error;
};

class InvalidEnvelope : public Error {
public:
  using Error::Error;
};

class EmptyQuandle : public Error {
public:
  using Error::Error;
};

class ToleranceViolation : public Error {
public:
  using Error::Error;
};

class InconsistentArcs : public Error {
public:
  using Error::Error;
};

class UndeclaredGenerator : public Error {
public:
  using Error::Error;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Bad construction specifier or command-line usage.
class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace ivq
