#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kemeny {

enum class ErrorKind {
  Parse,
  Disconnected,
  NotATree,
  InvalidArgument,
  ResourceLimit,
  PathTooShort,
  NotABridgeConfig,
  RouteRequiresTree,
  TheoremViolation,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  enum class Reason { Empty, BadHeader, BadToken, SelfLoop, DuplicateEdge, LabelOutOfRange };

  ParseError(Reason reason, std::size_t line, const std::string& detail);

  Reason reason() const noexcept { return reason_; }
  /// 1-based line of the offending input; 0 when the whole input is at fault.
  std::size_t line() const noexcept { return line_; }

 private:
  Reason reason_;
  std::size_t line_;
};

const char* to_string(ParseError::Reason reason) noexcept;

}  // namespace kemeny
