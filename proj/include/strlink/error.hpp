#pragma once

#include <stdexcept>
#include <string>

namespace strlink {

// Failure classes; the CLI maps them onto exit codes 1, 2 and 3.
enum class ErrorKind {
  Input,          // malformed text, invalid diagram, illegal move site
  ResourceLimit,  // crossing cap exceeded, solver did not converge
  Precondition,   // e.g. nonzero linking numbers where mu3 needs them to vanish
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void input_error(const std::string& what) {
  throw Error(ErrorKind::Input, what);
}

[[noreturn]] inline void precondition_error(const std::string& what) {
  throw Error(ErrorKind::Precondition, what);
}

[[noreturn]] inline void resource_error(const std::string& what) {
  throw Error(ErrorKind::ResourceLimit, what);
}

}  // namespace strlink
