#include "bern/vsc.hpp"

#include <stdexcept>
#include <string>

#include "bern/primes.hpp"

namespace bern {

std::vector<std::uint64_t> vsc_primes(std::uint64_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("vsc_primes: n must be even and >= 2, got " + std::to_string(n));
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : divisors(n)) {
    if (is_prime(d + 1)) out.push_back(d + 1);
  }
  return out;
}

VscData vsc_data(std::uint64_t n) {
  VscData data;
  data.n = n;
  data.primes = vsc_primes(n);

  data.denominator = 1;
  for (std::uint64_t p : data.primes) data.denominator *= p;

  // Sum of 1/p over the common denominator D, kept as an integer numerator.
  mpz_class numerator = 0;
  for (std::uint64_t p : data.primes) numerator += data.denominator / p;
  data.harmonic_sum = ExactRational(numerator, data.denominator);

  // frac(sum) = (numerator mod D) / D, never zero since D > 1 is squarefree.
  mpz_class rem = numerator % data.denominator;
  data.fraction = ExactRational(data.denominator - rem, data.denominator);
  return data;
}

VscFraction vsc_fraction(std::uint64_t n) {
  VscData data = vsc_data(n);
  return {std::move(data.fraction), std::move(data.denominator)};
}

}  // namespace bern
