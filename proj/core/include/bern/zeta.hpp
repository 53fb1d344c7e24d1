#pragma once

#include <cstdint>

#include "bern/bigfloat.hpp"
#include "bern/precision.hpp"
#include "bern/stage_timer.hpp"

namespace bern {

struct ZetaEvaluation {
  ApproxReal value;
  std::uint64_t phase1_primes = 0;      // primes in the exact product
  std::uint64_t phase1_last_prime = 0;
  std::uint64_t phase2_primes = 0;      // first-order corrections applied
  std::uint64_t last_correction_prime = 0;  // 0 when phase 2 applied nothing
  std::uint64_t stop_prime = 0;         // prime that ended the correction loop
};

// zeta(n) by the Euler product, in two phases:
//   1. T1 = prod p^n and T2 = prod (p^n - 1) over p <= plan.phase1_bound as
//      exact integers, then z = T1 / T2 in one full-precision division;
//   2. z += z / p^n for each prime up to plan.phase2_bound, the quotient
//      taken at max(d - n log10 p, 9) digits.
// With threads > 1 the phase-2 primes are split into contiguous blocks whose
// partial products are multiplied in block order; the result may differ from
// the single-threaded one in the last guard bits only.
ZetaEvaluation zeta_euler(std::uint64_t n, const PrecisionPlan& plan, unsigned threads = 1,
                          StageTimer* timer = nullptr);

// Independent reference: partial Dirichlet sum plus an Euler-Maclaurin tail,
// good to `digits` decimal digits. Test oracle; digits <= 1000.
ApproxReal zeta_series_reference(std::uint64_t n, std::uint64_t digits);

}  // namespace bern
