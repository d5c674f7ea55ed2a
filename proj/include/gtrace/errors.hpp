#pragma once

#include <stdexcept>
#include <string>

namespace gtrace {

/// Malformed or inconsistent input: bad documents, dangling references,
/// operations applied outside their domain.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size budget (e.g. number of boundary paths) would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t budget, std::size_t reached)
      : std::runtime_error(what), budget_(budget), reached_(reached) {}
  std::size_t budget() const { return budget_; }
  std::size_t reached() const { return reached_; }

 private:
  std::size_t budget_;
  std::size_t reached_;
};

}  // namespace gtrace
