#include "frobsat/budget.hpp"

#include "frobsat/error.hpp"

namespace frobsat {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> t_deadline;
}

ScopedBudget::ScopedBudget(std::chrono::milliseconds limit) : previous_(t_deadline) {
  auto deadline = std::chrono::steady_clock::now() + limit;
  if (!t_deadline || deadline < *t_deadline) t_deadline = deadline;
}

ScopedBudget::~ScopedBudget() { t_deadline = previous_; }

void check_budget() {
  if (t_deadline && std::chrono::steady_clock::now() > *t_deadline)
    throw Error(ErrorKind::BudgetExceeded, "wall-clock budget exceeded");
}

}  // namespace frobsat
