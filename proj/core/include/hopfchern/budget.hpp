#pragma once

// Cooperative per-thread time limits. Long-running kernels call
// poll_budget(), which throws BudgetExceeded once the innermost active
// TimeBudget on the calling thread has expired.

#include <chrono>
#include <optional>
#include <stdexcept>

namespace hopfchern {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

class TimeBudget {
 public:
  /// Non-positive seconds means no limit.
  explicit TimeBudget(double seconds);
  ~TimeBudget();
  TimeBudget(const TimeBudget&) = delete;
  TimeBudget& operator=(const TimeBudget&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void poll_budget();

}  // namespace hopfchern
