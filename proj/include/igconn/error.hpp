#pragma once

#include <stdexcept>
#include <string>

namespace igconn {

// Every failure raised by the library derives from Error; the kind tells the
// command-line layer which exit code to use.
enum class ErrorKind {
  input,         // malformed data or a violated structural invariant
  precondition,  // an operation was called outside its domain
  resource_cap,  // a configured size cap was exceeded
  budget,        // a search ran out of nodes; the answer is unknown
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::precondition, what) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what)
      : Error(ErrorKind::resource_cap, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::budget, what) {}
};

}  // namespace igconn
