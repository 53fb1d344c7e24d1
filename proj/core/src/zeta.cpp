#include "bern/zeta.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "bern/oracle.hpp"
#include "bern/primes.hpp"

namespace bern {
namespace {

void require_even_index(std::uint64_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("zeta_euler: n must be even and >= 2, got " + std::to_string(n));
  }
}

// Product of f(x) over [first, last) by recursive halving.
template <typename It, typename F>
mpz_class product_tree(It first, It last, F f) {
  const auto count = std::distance(first, last);
  if (count == 0) return 1;
  if (count == 1) return f(*first);
  It mid = first + count / 2;
  return product_tree(first, mid, f) * product_tree(mid, last, f);
}

// The same product split into `parts` contiguous blocks evaluated in
// parallel and combined in block order.
template <typename F>
mpz_class parallel_product(const std::vector<std::uint64_t>& xs, unsigned parts, F f) {
  if (parts <= 1 || xs.size() < 2 * parts) return product_tree(xs.begin(), xs.end(), f);
  std::vector<std::future<mpz_class>> futures;
  const std::size_t block = (xs.size() + parts - 1) / parts;
  for (std::size_t lo = 0; lo < xs.size(); lo += block) {
    const std::size_t hi = std::min(lo + block, xs.size());
    futures.push_back(std::async(std::launch::async,
                                 [&, lo, hi] { return product_tree(xs.begin() + lo, xs.begin() + hi, f); }));
  }
  std::vector<mpz_class> partial;
  for (auto& fut : futures) partial.push_back(fut.get());
  return product_tree(partial.begin(), partial.end(), [](const mpz_class& v) { return v; });
}

mpfr_prec_t correction_bits(std::uint64_t n, std::uint64_t p, std::uint64_t digits) {
  const long double magnitude = static_cast<long double>(n) * std::log10(static_cast<long double>(p));
  const long double reduced = static_cast<long double>(digits) - std::floor(magnitude);
  const auto kept = static_cast<std::uint64_t>(std::max<long double>(reduced, kMinDigits));
  return bits_for_digits(kept) + kGuardBits;
}

// acc <- acc * prod(1 + p^-n) over primes, one first-order step per prime.
void apply_corrections(BigFloat& acc, std::uint64_t n, std::uint64_t digits,
                       const std::uint64_t* first, const std::uint64_t* last) {
  BigFloat power(MPFR_PREC_MIN);
  BigFloat term(MPFR_PREC_MIN);
  for (; first != last; ++first) {
    const mpfr_prec_t bits = correction_bits(n, *first, digits);
    mpfr_set_prec(power.get(), bits);
    mpfr_set_prec(term.get(), bits);
    mpfr_ui_pow_ui(power.get(), *first, n, MPFR_RNDN);
    mpfr_div(term.get(), acc.get(), power.get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
  }
}

}  // namespace

ZetaEvaluation zeta_euler(std::uint64_t n, const PrecisionPlan& plan, unsigned threads, StageTimer* timer) {
  require_even_index(n);
  if (plan.n != n) throw std::invalid_argument("zeta_euler: plan was made for a different index");
  const mpfr_prec_t bits = plan.working_bits();

  ZetaEvaluation out{ApproxReal{BigFloat(bits), plan.decimal_digits}};

  // Phase 1: exact integer products.
  const std::vector<std::uint64_t> small = primes_up_to(plan.phase1_bound);
  out.phase1_primes = small.size();
  out.phase1_last_prime = small.empty() ? 0 : small.back();

  mpz_class primorial = product_tree(small.begin(), small.end(), [](std::uint64_t p) { return mpz_class(p); });
  mpz_class numerator;
  mpz_pow_ui(numerator.get_mpz_t(), primorial.get_mpz_t(), n);
  mpz_class denominator = parallel_product(small, threads, [n](std::uint64_t p) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), p, n);
    return mpz_class(v - 1);
  });
  if (timer) timer->mark("small prime loop");

  BigFloat& z = out.value.value;
  mpfr_set_z(z.get(), numerator.get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(z.get(), z.get(), denominator.get_mpz_t(), MPFR_RNDN);
  if (timer) timer->mark("full prec. division");

  // Phase 2: first-order corrections at decaying precision.
  std::vector<std::uint64_t> big;
  PrimeStream stream;
  while (auto p = stream.next()) {
    if (*p <= plan.phase1_bound) continue;
    if (*p > plan.phase2_bound) {
      out.stop_prime = *p;
      break;
    }
    big.push_back(*p);
  }
  out.phase2_primes = big.size();
  out.last_correction_prime = big.empty() ? 0 : big.back();

  const std::uint64_t digits = plan.decimal_digits;
  if (threads <= 1 || big.size() < 2 * static_cast<std::size_t>(threads)) {
    apply_corrections(z, n, digits, big.data(), big.data() + big.size());
  } else {
    const std::size_t block = (big.size() + threads - 1) / threads;
    std::vector<std::future<BigFloat>> futures;
    for (std::size_t lo = 0; lo < big.size(); lo += block) {
      const std::size_t hi = std::min(lo + block, big.size());
      futures.push_back(std::async(std::launch::async, [&, lo, hi] {
        BigFloat acc(bits, 1);
        apply_corrections(acc, n, digits, big.data() + lo, big.data() + hi);
        return acc;
      }));
    }
    for (auto& fut : futures) {
      const BigFloat factor = fut.get();
      mpfr_mul(z.get(), z.get(), factor.get(), MPFR_RNDN);
    }
  }
  if (timer) timer->mark("big prime loop");
  return out;
}

ApproxReal zeta_series_reference(std::uint64_t n, std::uint64_t digits) {
  if (n < 2) throw std::invalid_argument("zeta_series_reference: n must be >= 2");
  if (digits > 1000) throw std::invalid_argument("zeta_series_reference: digits must be <= 1000");
  const std::uint64_t want = std::max<std::uint64_t>(digits, 1);
  const mpfr_prec_t bits = bits_for_digits(want + 10) + kGuardBits;
  const std::uint64_t cutoff = want + n + 10;  // N; the tail expansion converges for N > (n + 2j) / 2pi

  BigFloat sum(bits, 0);
  BigFloat term(bits);
  for (std::uint64_t k = 1; k < cutoff; ++k) {
    mpfr_ui_pow_ui(term.get(), k, n, MPFR_RNDN);
    mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }

  // Tail from N: N^(1-n)/(n-1) + N^-n/2 + sum_j B_2j/(2j)! n(n+1)...(n+2j-2) N^(-n-2j+1).
  BigFloat inv_n(bits);
  mpfr_set_ui(inv_n.get(), static_cast<unsigned long>(cutoff), MPFR_RNDN);
  mpfr_ui_div(inv_n.get(), 1, inv_n.get(), MPFR_RNDN);

  BigFloat power(bits);  // N^-n
  mpfr_pow_ui(power.get(), inv_n.get(), n, MPFR_RNDN);
  mpfr_mul_ui(term.get(), power.get(), static_cast<unsigned long>(cutoff), MPFR_RNDN);
  mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(n - 1), MPFR_RNDN);
  mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  mpfr_div_ui(term.get(), power.get(), 2, MPFR_RNDN);
  mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);

  BigFloat threshold(bits, 1);
  mpfr_div_2ui(threshold.get(), threshold.get(), static_cast<unsigned long>(bits_for_digits(want + 8)), MPFR_RNDN);

  // coeff tracks n(n+1)...(n+2j-2) / (2j)! * N^(-n-2j+1).
  BigFloat coeff(bits);
  mpfr_mul_ui(coeff.get(), power.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_mul(coeff.get(), coeff.get(), inv_n.get(), MPFR_RNDN);
  mpfr_div_ui(coeff.get(), coeff.get(), 2, MPFR_RNDN);
  BigFloat bern_value(bits);
  for (std::uint64_t j = 1; 2 * j <= kOracleCeiling; ++j) {
    if (j > 1) {
      // multiply by (n+2j-3)(n+2j-2) / ((2j-1)(2j)) / N^2
      mpfr_mul_ui(coeff.get(), coeff.get(), static_cast<unsigned long>(n + 2 * j - 3), MPFR_RNDN);
      mpfr_mul_ui(coeff.get(), coeff.get(), static_cast<unsigned long>(n + 2 * j - 2), MPFR_RNDN);
      mpfr_div_ui(coeff.get(), coeff.get(), static_cast<unsigned long>((2 * j - 1) * (2 * j)), MPFR_RNDN);
      mpfr_mul(coeff.get(), coeff.get(), inv_n.get(), MPFR_RNDN);
      mpfr_mul(coeff.get(), coeff.get(), inv_n.get(), MPFR_RNDN);
    }
    mpfr_set_q(bern_value.get(), bernoulli_recurrence(2 * j).value().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), coeff.get(), bern_value.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    if (mpfr_cmpabs(term.get(), threshold.get()) < 0) break;
  }
  return ApproxReal{std::move(sum), digits};
}

}  // namespace bern
