#pragma once

#include <cstdint>
#include <vector>

#include "bern/rational.hpp"

namespace bern {

// Highest index the recurrence oracle accepts. The cost is quadratic in the
// index with ever larger rationals; the zeta engine has no such ceiling.
inline constexpr std::uint64_t kOracleCeiling = 2000;

// B(0..max_index) from sum_{j=0}^{m} C(m+1, j) B_j = 0, all exact.
// Deliberately shares nothing with the zeta engine.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::uint64_t max_index);

  std::uint64_t max_index() const { return values_.size() - 1; }
  const ExactRational& operator[](std::uint64_t i) const { return values_.at(i); }

  // Grows the table; no-op when already large enough.
  void extend_to(std::uint64_t max_index);

  // Re-evaluates the defining recurrence for every m <= max_index.
  bool self_check() const;

 private:
  std::vector<ExactRational> values_;
};

// Exact B(n) by the recurrence, memoized across calls. Throws
// OracleLimitError when n > kOracleCeiling.
ExactRational bernoulli_recurrence(std::uint64_t n);

}  // namespace bern
