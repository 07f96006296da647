#pragma once

#include <cstdint>
#include <vector>

namespace insitu {

// Deterministic operation tally used to check the per-step cost model of the
// streaming solvers.
//
// Unit convention: one complex multiply-add (y += a*x, or |x|^2 accumulation)
// counts as one mul_add. Reciprocals are counted in `divisions`, square roots
// in `sqrts`. Loop overhead and comparisons are not counted.
class OpCounter {
 public:
  void add_mul_adds(std::uint64_t n) noexcept { mul_adds_ += n; }
  void add_divisions(std::uint64_t n) noexcept { divisions_ += n; }
  void add_sqrts(std::uint64_t n) noexcept { sqrts_ += n; }

  std::uint64_t mul_adds() const noexcept { return mul_adds_; }
  std::uint64_t divisions() const noexcept { return divisions_; }
  std::uint64_t sqrts() const noexcept { return sqrts_; }
  std::uint64_t total() const noexcept { return mul_adds_ + divisions_ + sqrts_; }

  /// Closes the current step: records the ops spent since the previous mark
  /// and returns that amount.
  std::uint64_t mark_step() {
    const std::uint64_t now = total();
    const std::uint64_t used = now - at_last_mark_;
    at_last_mark_ = now;
    per_step_.push_back(used);
    return used;
  }

  const std::vector<std::uint64_t>& per_step() const noexcept { return per_step_; }

  void reset() { *this = OpCounter{}; }

 private:
  std::uint64_t mul_adds_ = 0;
  std::uint64_t divisions_ = 0;
  std::uint64_t sqrts_ = 0;
  std::uint64_t at_last_mark_ = 0;
  std::vector<std::uint64_t> per_step_;
};

}  // namespace insitu
