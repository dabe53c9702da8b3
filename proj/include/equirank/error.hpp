#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equirank {

// Exit codes of the command-line tool. Every library error maps onto one.
enum class ExitCode : int {
  kOk = 0,
  kSpecError = 2,
  kBudget = 3,
  kPropertyFailure = 4,
  kInternal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what, ExitCode exit)
      : std::runtime_error(what), code_(std::move(code)), exit_(exit) {}

  // Stable machine-readable identifier, e.g. "size-limit".
  const std::string& code() const noexcept { return code_; }
  ExitCode exit_code() const noexcept { return exit_; }

 private:
  std::string code_;
  ExitCode exit_;
};

// Malformed input: bad group spec, invalid table, precondition violated by
// caller-supplied data.
class SpecError : public Error {
 public:
  SpecError(std::string code, const std::string& what)
      : Error(std::move(code), what, ExitCode::kSpecError) {}
};

// A mathematical precondition failed (stabilizer containment, invariance...).
class DomainError : public Error {
 public:
  DomainError(std::string code, const std::string& what)
      : Error(std::move(code), what, ExitCode::kSpecError) {}
};

class BudgetError : public Error {
 public:
  BudgetError(std::string code, const std::string& what)
      : Error(std::move(code), what, ExitCode::kBudget) {}
};

// A structure theorem or cross-check disagreed with a computed value.
class PropertyError : public Error {
 public:
  PropertyError(std::string code, const std::string& what)
      : Error(std::move(code), what, ExitCode::kPropertyFailure) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error("internal-assertion", what, ExitCode::kInternal) {}
};

inline void check_internal(bool cond, std::string_view what) {
  if (!cond) throw InternalError(std::string(what));
}

}  // namespace equirank
