#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sclat {

enum class ErrorKind {
  ill_formed_input,
  base_mismatch,
  argument,
  ingestion,
  precondition,
  syntax,
  semantic,
  refusal,
  internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure; position is a byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::syntax, message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// Runtime check of a claimed mathematical invariant.
inline void require_invariant(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::internal, "invariant violated: " + what);
}

}  // namespace sclat
