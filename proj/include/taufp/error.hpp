#pragma once

#include <stdexcept>
#include <string>

namespace taufp {

// Failure categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  InvalidInput = 2,
  BudgetExceeded = 3,
  Consistency = 1,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidInput, what);
}

[[noreturn]] inline void budget_exceeded(const std::string& what) {
  throw Error(ErrorKind::BudgetExceeded, what);
}

[[noreturn]] inline void inconsistent(const std::string& what) {
  throw Error(ErrorKind::Consistency, what);
}

}  // namespace taufp
