#pragma once

#include <stdexcept>
#include <string>

namespace gel {

enum class ErrorKind {
  InvalidOrder,
  InvalidSpec,
  InvalidGraph,
  Capacity,
  RegularityViolation,
  NumericFailure,
  Undecidable,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gel
