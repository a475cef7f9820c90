#pragma once

#include <stdexcept>
#include <string>

namespace pdlab {

enum class ErrorCode {
  invalid_argument,
  parse,
  cap_exceeded,
  precondition,
  io,
  unknown_name,
};

/// Single exception type for the library; the code drives C API status mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pdlab
