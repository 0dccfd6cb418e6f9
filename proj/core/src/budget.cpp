#include "loccol/budget.hpp"

namespace loccol {

BudgetMeter::BudgetMeter(const Budget& budget)
    : budget_(budget), start_(std::chrono::steady_clock::now()) {}

bool BudgetMeter::tick() {
  if (exhausted_) return false;
  ++nodes_;
  if (budget_.nodes && nodes_ > *budget_.nodes) {
    exhausted_ = true;
  } else if (budget_.time && (nodes_ & 1023) == 0 && elapsed() > *budget_.time) {
    exhausted_ = true;
  }
  return !exhausted_;
}

std::chrono::milliseconds BudgetMeter::elapsed() const {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start_);
}

}  // namespace loccol
