#ifndef GEOPROVE_BUDGET_HPP
#define GEOPROVE_BUDGET_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace geo {

struct ResourceBudget {
  std::int64_t wall_clock_ms = 300000;   // 5 minutes per problem
  std::int64_t term_ceiling = 2000000;   // live polynomial terms
  std::int64_t fact_ceiling = 1000000;   // DD fact store
  std::int64_t round_ceiling = 100;      // DD saturation rounds
};

class BudgetExceeded : public std::runtime_error {
 public:
  enum Kind { time, terms, facts, rounds, cancelled };
  BudgetExceeded(Kind k, const std::string& what)
      : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Shared cooperative cancellation and budget state for one engine run.
// check() is called at engine checkpoints (between pseudo-division steps,
// saturation batches); it throws BudgetExceeded when a wall-clock deadline
// passed, a ceiling tripped, or a cancellation was requested.
class ExecControl {
 public:
  explicit ExecControl(const ResourceBudget& budget)
      : budget_(budget),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(budget.wall_clock_ms)) {}

  const ResourceBudget& budget() const { return budget_; }

  void request_cancel() { cancel_.store(true, std::memory_order_relaxed); }
  bool cancel_requested() const {
    return cancel_.load(std::memory_order_relaxed);
  }

  void check(std::int64_t live_terms = 0) const {
    if (cancel_requested())
      throw BudgetExceeded(BudgetExceeded::cancelled, "cancelled");
    if (live_terms > budget_.term_ceiling)
      throw BudgetExceeded(BudgetExceeded::terms,
                           "term ceiling exceeded (" +
                               std::to_string(live_terms) + " live terms)");
    if (std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceeded(BudgetExceeded::time, "wall clock budget exhausted");
  }

 private:
  ResourceBudget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::atomic<bool> cancel_{false};
};

}  // namespace geo

#endif
