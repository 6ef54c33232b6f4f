#pragma once

#include <chrono>
#include <optional>

namespace frobsat {

/// Cooperative wall-clock budget for long Gröbner computations. A budget is
/// installed for the current thread by ScopedBudget; the engine polls
/// check_budget() and throws Error(BudgetExceeded) once it has expired.
class ScopedBudget {
 public:
  explicit ScopedBudget(std::chrono::milliseconds limit);
  ~ScopedBudget();
  ScopedBudget(const ScopedBudget&) = delete;
  ScopedBudget& operator=(const ScopedBudget&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_budget();

}  // namespace frobsat
