#include <gtest/gtest.h>

#include <mpfr.h>

#include <cmath>
#include <string>

#include "bern/precision.hpp"
#include "bern/stage_timer.hpp"
#include "bern/zeta.hpp"

namespace bern {
namespace {

constexpr const char* kZeta2 = "1.64493406684822643647241516664602518921894990120679843773556";
constexpr const char* kZeta4 = "1.08232323371113819151600369654116790277475095191872690768298";
constexpr const char* kZeta10 = "1.00099457512781808533714595890031901700601953156447751725779";

double log10_rel_gap(const BigFloat& a, const BigFloat& b) {
  BigFloat diff(std::max(a.bits(), b.bits()));
  mpfr_sub(diff.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_div(diff.get(), diff.get(), b.get(), MPFR_RNDN);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
  if (mpfr_zero_p(diff.get())) return -1e9;
  long exp = 0;
  const double mant = mpfr_get_d_2exp(&exp, diff.get(), MPFR_RNDN);
  return std::log10(mant) + exp * std::log10(2.0);
}

double log10_rel_error(const BigFloat& x, const char* expected) {
  BigFloat e(x.bits() + 64);
  mpfr_set_str(e.get(), expected, 10, MPFR_RNDN);
  return log10_rel_gap(x, e);
}

TEST(ZetaEuler, TenToThirtyDigits) {
  const auto plan = make_tail_bounded_plan(10, 30);
  const auto z = zeta_euler(10, plan);
  EXPECT_LT(log10_rel_error(z.value.value, kZeta10), -30);
}

TEST(ZetaEuler, RejectsMismatchedPlan) {
  EXPECT_THROW(zeta_euler(12, make_plan(10)), std::invalid_argument);
}

TEST(ZetaEuler, PhaseStructureForTwentyThousand) {
  StageTimer timer;
  const auto z = zeta_euler(20000, make_plan(20000), 1, &timer);
  EXPECT_EQ(z.phase1_last_prime, 31u);  // last prime <= 35
  EXPECT_EQ(z.phase1_primes, 11u);
  EXPECT_EQ(z.last_correction_prime, 1171u);
  EXPECT_EQ(z.stop_prime, 1181u);
  ASSERT_EQ(timer.stages().size(), 3u);
  EXPECT_EQ(timer.stages()[0].label, "small prime loop");
  EXPECT_EQ(timer.stages()[1].label, "full prec. division");
  EXPECT_EQ(timer.stages()[2].label, "big prime loop");
}

TEST(ZetaEuler, ExceedsOneAndDecreasesInN) {
  BigFloat prev(64);
  mpfr_set_inf(prev.get(), 1);
  for (std::uint64_t n = 2; n <= 200; n += 2) {
    const auto z = zeta_euler(n, make_plan(n));
    ASSERT_GT(mpfr_cmp_ui(z.value.value.get(), 1), 0) << n;
    ASSERT_LT(mpfr_cmp(z.value.value.get(), prev.get()), 0) << n;
    prev = BigFloat(z.value.value.bits());
    mpfr_set(prev.get(), z.value.value.get(), MPFR_RNDN);
  }
}

TEST(ZetaEuler, ThreadCountDoesNotChangeContractDigits) {
  for (std::uint64_t n : {100u, 1000u, 4000u}) {
    const auto plan = make_plan(n);
    const auto a = zeta_euler(n, plan, 1);
    const auto b = zeta_euler(n, plan, 4);
    EXPECT_LT(log10_rel_gap(a.value.value, b.value.value),
              -static_cast<double>(plan.decimal_digits))
        << n;
    EXPECT_EQ(a.last_correction_prime, b.last_correction_prime);
  }
}

TEST(ZetaEuler, AgreesWithSeriesReference) {
  for (std::uint64_t n = 8; n <= 60; n += 2) {
    const auto z = zeta_euler(n, make_tail_bounded_plan(n, 40));
    const auto r = zeta_series_reference(n, 40);
    ASSERT_LT(log10_rel_gap(z.value.value, r.value), -39) << n;
  }
}

TEST(ZetaSeriesReference, KnownValues) {
  EXPECT_LT(log10_rel_error(zeta_series_reference(2, 15).value, kZeta2), -15);
  EXPECT_LT(log10_rel_error(zeta_series_reference(4, 50).value, kZeta4), -50);
  EXPECT_LT(log10_rel_error(zeta_series_reference(10, 55).value, kZeta10), -55);
  EXPECT_THROW(zeta_series_reference(2, 1001), std::invalid_argument);
}

}  // namespace
}  // namespace bern
