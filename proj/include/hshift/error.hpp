#pragma once

#include <stdexcept>
#include <string>

namespace hshift {

enum class ErrorKind {
  invalid_argument,
  alphabet_mismatch,
  parse,
  resource_cap,
  precision_insufficient,
  precondition,
  search_failure,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace hshift
