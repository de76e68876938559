#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace neutro {

/// Error categories. The numeric values double as CLI exit codes and as the
/// status codes of the C interface.
enum class ErrorKind : int {
  Usage = 1,
  Parse = 2,
  Shape = 3,
  SizeGuard = 4,
  NotFound = 5,
  Domain = 6,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error(ErrorKind::Usage, message) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorKind::Parse, message + " (at position " + std::to_string(position) + ")"),
        detail_(message),
        position_(position) {}

  /// Message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string detail_;
  std::size_t position_;
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& message) : Error(ErrorKind::Shape, message) {}
};

class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& message) : Error(ErrorKind::SizeGuard, message) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& message) : Error(ErrorKind::NotFound, message) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error(ErrorKind::Domain, message) {}
};

}  // namespace neutro
