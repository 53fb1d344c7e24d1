#pragma once

#include <mpfr.h>

#include <cstdint>

namespace bern {

// Working precision and prime cutoffs for one evaluation of B(n).
//
// Primes p <= phase1_bound enter the exact product; every prime in
// (phase1_bound, phase2_bound] contributes one first-order correction. The
// correction loop stops at phase2_stop, the first prime whose term p^-n
// falls below one unit in the last of the d digits.
struct PrecisionPlan {
  std::uint64_t n = 0;
  std::uint64_t decimal_digits = 0;  // d
  std::uint64_t guard_digits = 0;
  std::uint64_t phase1_bound = 0;    // floor(10^(d/(2n))) + 1
  std::uint64_t phase2_bound = 0;    // last prime p with p^n <= 10^d
  std::uint64_t phase2_stop = 0;     // next_prime(phase2_bound)

  // ceil(d * log2 10) + kGuardBits.
  mpfr_prec_t working_bits() const;
};

// Smallest working precision any plan uses.
inline constexpr std::uint64_t kMinDigits = 9;

// Largest phase-2 cutoff a plan may ask the prime sieve for.
inline constexpr std::uint64_t kMaxPhase2Bound = 1'000'000'000ULL;

// ln Gamma(x) for x >= 1 at machine precision (shifted Stirling series).
double ln_gamma_stirling(double x);

// Number of decimal digits of n.
std::uint64_t decimal_length(std::uint64_t n);

// d = 4 + floor((lnGamma(n+1) - n ln(2 pi)) / ln 10) + len(n) + guard_digits.
// Throws std::invalid_argument for odd n or n < 2.
std::uint64_t estimate_digits(std::uint64_t n, std::uint64_t guard_digits = 0);

// Plan with d = max(estimate_digits(n, guard_digits), kMinDigits).
PrecisionPlan make_plan(std::uint64_t n, std::uint64_t guard_digits = 0);

// Same cutoff rules for a caller-chosen working precision.
PrecisionPlan plan_for_digits(std::uint64_t n, std::uint64_t digits);

// A plan whose correction loop runs until the whole neglected tail,
// bounded by p^-n + p^(1-n)/(n-1) from the stop prime on, is below
// 10^-digits. Equal to plan_for_digits() when n is large against the
// cutoff prime; much longer for small n. Throws LimitError when the cutoff
// would exceed kMaxPhase2Bound.
PrecisionPlan make_tail_bounded_plan(std::uint64_t n, std::uint64_t digits);

// Exact decision of p^n > 10^digits.
bool power_exceeds(std::uint64_t p, std::uint64_t n, std::uint64_t digits);

}  // namespace bern
