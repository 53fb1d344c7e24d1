#include "bern/bernoulli.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bern/error.hpp"
#include "bern/factorial.hpp"
#include "bern/pi.hpp"
#include "bern/primes.hpp"
#include "bern/vsc.hpp"
#include "bern/zeta.hpp"

namespace bern {
namespace {

// Decimal digits matching kGuardBits, requested from two_pi on top of d.
constexpr std::uint64_t kPiGuardDigits = 20;

// Rounding is certified when the float lands this close to an integer.
constexpr double kConsistencyBound = 0.25;

// Bits of the certified d digits that must lie below the binary point.
// Without them the margin test reads noise and can pass by chance.
constexpr mpfr_exp_t kFractionBits = 8;

// base^e by square-and-multiply at out's precision.
void power_by_squaring(BigFloat& out, const BigFloat& base, std::uint64_t e) {
  BigFloat square(out.bits());
  mpfr_set(square.get(), base.get(), MPFR_RNDN);
  mpfr_set_ui(out.get(), 1, MPFR_RNDN);
  while (e > 0) {
    if (e & 1) mpfr_mul(out.get(), out.get(), square.get(), MPFR_RNDN);
    e >>= 1;
    if (e > 0) mpfr_sqr(square.get(), square.get(), MPFR_RNDN);
  }
}

struct MagnitudePass {
  ApproxReal magnitude;
  std::uint64_t last_correction_prime = 0;
  std::uint64_t stop_prime = 0;
};

MagnitudePass magnitude_pass(std::uint64_t n, const PrecisionPlan& plan, MagnitudeMode mode,
                             const EngineOptions& options, StageTimer* timer) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("bern_magnitude: n must be even and >= 2, got " + std::to_string(n));
  }
  check_preflight(plan, options);
  const mpfr_prec_t bits = plan.working_bits();

  MagnitudePass out{ApproxReal{BigFloat(bits, 1), plan.decimal_digits}};
  BigFloat& z = out.magnitude.value;
  if (mode == MagnitudeMode::euler_product) {
    ZetaEvaluation zeta = zeta_euler(n, plan, options.threads, timer);
    z = zeta.value.value;
    out.last_correction_prime = zeta.last_correction_prime;
    out.stop_prime = zeta.stop_prime;
  }

  const ApproxReal tau = two_pi(plan.decimal_digits + kPiGuardDigits, options.pi_cache);
  BigFloat tau_w(bits);
  mpfr_set(tau_w.get(), tau.value.get(), MPFR_RNDN);
  if (timer) timer->mark("2*Pi");

  const mpz_class fact = factorial(n, options.threads);
  if (timer) timer->mark("factorial");

  BigFloat tau_n(bits);
  power_by_squaring(tau_n, tau_w, n);
  if (timer) timer->mark("(2*Pi)^n");

  mpfr_mul_2ui(z.get(), z.get(), 1, MPFR_RNDN);
  mpfr_mul_z(z.get(), z.get(), fact.get_mpz_t(), MPFR_RNDN);
  mpfr_div(z.get(), z.get(), tau_n.get(), MPFR_RNDN);
  if (timer) timer->mark("multiply and divide");
  return out;
}

}  // namespace

std::uint64_t preflight_cost(const PrecisionPlan& plan) {
  const std::uint64_t primes = prime_count(plan.phase1_bound);
  return plan.decimal_digits * std::max<std::uint64_t>(primes, 1);
}

void check_preflight(const PrecisionPlan& plan, const EngineOptions& options) {
  const std::uint64_t cost = preflight_cost(plan);
  if (cost > options.max_digits) {
    throw LimitError("B(" + std::to_string(plan.n) + ") needs " + std::to_string(plan.decimal_digits) +
                     " digits over " + std::to_string(prime_count(plan.phase1_bound)) +
                     " phase-1 primes (cost " + std::to_string(cost) + "), above the ceiling of " +
                     std::to_string(options.max_digits));
  }
}

ApproxReal bern_magnitude(std::uint64_t n, const PrecisionPlan& plan, MagnitudeMode mode,
                          const EngineOptions& options) {
  return magnitude_pass(n, plan, mode, options, nullptr).magnitude;
}

BernoulliResult bernoulli(std::int64_t n, const EngineOptions& options) {
  if (n < 0) throw std::invalid_argument("argument must be >= 0");
  BernoulliResult result;
  result.n = static_cast<std::uint64_t>(n);
  if (n == 0) {
    result.value = ExactRational(1);
    return result;
  }
  if (n == 1) {
    result.value = ExactRational(-1, 2);
    return result;
  }
  if (n % 2 == 1) return result;  // 0/1

  const auto un = static_cast<std::uint64_t>(n);
  // B(n) < 0 exactly when 4 | n.
  const bool negative = un % 4 == 0;

  std::uint64_t guard = 0;
  for (unsigned attempt = 0; attempt <= options.max_retries; ++attempt) {
    PrecisionPlan plan = make_plan(un, guard);
    if (attempt == 0 && options.first_pass_shortfall > 0) {
      const std::uint64_t d = plan.decimal_digits > options.first_pass_shortfall + kMinDigits
                                  ? plan.decimal_digits - options.first_pass_shortfall
                                  : kMinDigits;
      plan = plan_for_digits(un, d);
    }

    StageTimer timer;
    MagnitudePass pass = magnitude_pass(un, plan, MagnitudeMode::euler_product, options, &timer);

    const VscFraction vsc = vsc_fraction(un);
    timer.mark("divisors of n loop");

    // w = sigma z - f should sit within a quarter of the integer B(n) - f.
    BigFloat w(plan.working_bits());
    mpfr_set(w.get(), pass.magnitude.value.get(), MPFR_RNDN);
    if (negative) mpfr_neg(w.get(), w.get(), MPFR_RNDN);
    mpfr_sub_q(w.get(), w.get(), vsc.fraction.value().get_mpq_t(), MPFR_RNDN);

    const bool covered = mpfr_get_exp(pass.magnitude.value.get()) + kFractionBits <=
                         bits_for_digits(plan.decimal_digits);

    mpz_class integer_part;
    mpfr_get_z(integer_part.get_mpz_t(), w.get(), MPFR_RNDN);
    mpfr_sub_z(w.get(), w.get(), integer_part.get_mpz_t(), MPFR_RNDN);
    const double margin = covered ? std::fabs(mpfr_get_d(w.get(), MPFR_RNDN)) : 1.0;

    if (margin < kConsistencyBound) {
      result.value = ExactRational(integer_part * vsc.denominator + vsc.fraction.numerator(), vsc.denominator);
      result.plan_used = plan;
      result.retries = attempt;
      result.timings = timer.stages();
      result.consistency_margin = margin;
      result.last_correction_prime = pass.last_correction_prime;
      result.stop_prime = pass.stop_prime;
      return result;
    }
    guard = guard == 0 ? 32 : guard * 2;
  }
  throw ConsistencyError("B(" + std::to_string(n) + "): rounding not certified after " +
                         std::to_string(options.max_retries) + " retries");
}

}  // namespace bern
