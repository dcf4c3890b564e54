#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svlie {

enum class ErrorCode {
  InvalidBasis,
  ZeroInput,
  NotHomogeneous,
  NotSkew,
  ZeroDegree,
  WitnessMismatch,
  WindowTooSmall,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class ParseErrorKind { Syntax, Parity, MalformedRational };

// Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
             const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace svlie
