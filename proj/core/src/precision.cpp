#include "bern/precision.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bern/bigfloat.hpp"
#include "bern/error.hpp"
#include "bern/primes.hpp"

namespace bern {
namespace {

void require_even_index(std::uint64_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("precision plan needs an even index >= 2, got " + std::to_string(n));
  }
}

// Cutoffs that depend only on (n, d).
PrecisionPlan cutoffs(std::uint64_t n, std::uint64_t digits, std::uint64_t guard) {
  PrecisionPlan plan;
  plan.n = n;
  plan.decimal_digits = digits;
  plan.guard_digits = guard;

  const double half_exponent = 0.5 * static_cast<double>(digits) * std::log(10.0) / static_cast<double>(n);
  const double phase1 = std::exp(half_exponent);
  if (!(phase1 < static_cast<double>(kMaxPhase2Bound))) {
    throw LimitError("phase-1 cutoff exceeds the supported prime range");
  }
  plan.phase1_bound = static_cast<std::uint64_t>(std::trunc(phase1)) + 1;

  const long double log10_bound = static_cast<long double>(digits) / static_cast<long double>(n);
  if (log10_bound > std::log10(static_cast<long double>(kMaxPhase2Bound))) {
    throw LimitError("phase-2 cutoff 10^" + std::to_string(static_cast<double>(log10_bound)) +
                     " exceeds the supported prime range");
  }
  std::uint64_t p = static_cast<std::uint64_t>(std::pow(10.0L, log10_bound)) + 2;
  // Walk down to the last prime p with p^n <= 10^d.
  while (p >= 2 && (!is_prime(p) || power_exceeds(p, n, digits))) --p;
  plan.phase2_bound = std::max<std::uint64_t>(p, plan.phase1_bound);
  plan.phase2_stop = next_prime(plan.phase2_bound);
  return plan;
}

}  // namespace

mpfr_prec_t PrecisionPlan::working_bits() const { return bits_for_digits(decimal_digits) + kGuardBits; }

double ln_gamma_stirling(double x) {
  if (!(x >= 1.0)) throw std::domain_error("ln_gamma_stirling: x must be >= 1");
  // Shift into the range where five series terms reach double precision.
  double shift = 0.0;
  while (x < 16.0) {
    shift += std::log(x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12 - inv2 * (1.0 / 360 - inv2 * (1.0 / 1260 - inv2 * (1.0 / 1680 - inv2 / 1188))));
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
}

std::uint64_t decimal_length(std::uint64_t n) {
  std::uint64_t len = 1;
  while (n >= 10) {
    n /= 10;
    ++len;
  }
  return len;
}

std::uint64_t estimate_digits(std::uint64_t n, std::uint64_t guard_digits) {
  require_even_index(n);
  const double nd = static_cast<double>(n);
  const double log10_magnitude =
      (ln_gamma_stirling(nd + 1.0) - nd * std::log(2.0 * std::numbers::pi)) / std::log(10.0);
  const long long base = 4 + static_cast<long long>(std::floor(log10_magnitude)) +
                         static_cast<long long>(decimal_length(n));
  return static_cast<std::uint64_t>(std::max(base, 0LL)) + guard_digits;
}

PrecisionPlan make_plan(std::uint64_t n, std::uint64_t guard_digits) {
  const std::uint64_t d = std::max(estimate_digits(n, guard_digits), kMinDigits);
  return cutoffs(n, d, guard_digits);
}

PrecisionPlan plan_for_digits(std::uint64_t n, std::uint64_t digits) {
  require_even_index(n);
  if (digits < kMinDigits) throw std::invalid_argument("plan_for_digits: digits must be >= 9");
  return cutoffs(n, digits, 0);
}

PrecisionPlan make_tail_bounded_plan(std::uint64_t n, std::uint64_t digits) {
  PrecisionPlan plan = plan_for_digits(n, digits);
  // tail(p) = p^-n (1 + p/(n-1)) bounds every term from p onward.
  const long double nl = static_cast<long double>(n);
  auto log10_tail = [&](std::uint64_t p) {
    const long double lp = std::log10(static_cast<long double>(p));
    return -nl * lp + std::log10(1.0L + static_cast<long double>(p) / (nl - 1.0L));
  };
  const long double target = -static_cast<long double>(digits);
  if (log10_tail(plan.phase2_stop) <= target) return plan;

  // Solve (n-1) log10 p - log10(1/(n-1) + 1/p) >= digits roughly, then walk.
  long double lo = std::log10(static_cast<long double>(plan.phase2_stop));
  long double hi = std::log10(static_cast<long double>(kMaxPhase2Bound));
  if (log10_tail(kMaxPhase2Bound) > target) {
    throw LimitError("Euler-product tail cannot reach 10^-" + std::to_string(digits) +
                     " for n = " + std::to_string(n) + " below the supported prime range");
  }
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (log10_tail(static_cast<std::uint64_t>(std::pow(10.0L, mid))) > target) lo = mid; else hi = mid;
  }
  std::uint64_t stop = static_cast<std::uint64_t>(std::pow(10.0L, hi));
  while (!is_prime(stop) || log10_tail(stop) > target) ++stop;
  std::uint64_t last = stop - 1;
  while (!is_prime(last)) --last;
  plan.phase2_bound = last;
  plan.phase2_stop = stop;
  return plan;
}

bool power_exceeds(std::uint64_t p, std::uint64_t n, std::uint64_t digits) {
  if (p <= 1) return false;
  const long double lhs = static_cast<long double>(n) * std::log10(static_cast<long double>(p));
  const long double rhs = static_cast<long double>(digits);
  const long double slack = 1e-9L * std::max(1.0L, rhs);
  if (lhs > rhs + slack) return true;
  if (lhs < rhs - slack) return false;
  mpz_class power, ten;
  mpz_ui_pow_ui(power.get_mpz_t(), p, n);
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, digits);
  return power > ten;
}

}  // namespace bern
