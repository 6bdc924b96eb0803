#include "hopfchern/budget.hpp"

namespace hopfchern {

namespace {

thread_local std::optional<std::chrono::steady_clock::time_point> t_deadline;
thread_local unsigned t_polls = 0;

}  // namespace

TimeBudget::TimeBudget(double seconds) : previous_(t_deadline) {
  if (seconds > 0) {
    auto limit = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    if (!t_deadline || limit < *t_deadline) t_deadline = limit;
  }
}

TimeBudget::~TimeBudget() { t_deadline = previous_; }

void poll_budget() {
  if (!t_deadline || (++t_polls & 0xFFu) != 0) return;
  if (std::chrono::steady_clock::now() > *t_deadline) throw BudgetExceeded();
}

}  // namespace hopfchern
