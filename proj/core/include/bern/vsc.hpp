#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "bern/rational.hpp"

namespace bern {

// Von Staudt-Clausen data for an even index n: B(n) + sum(1/p) is an
// integer, the sum running over primes p with (p - 1) | n.
struct VscData {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> primes;  // increasing
  mpz_class denominator;              // product of primes, squarefree
  ExactRational harmonic_sum;         // sum of 1/p
  ExactRational fraction;             // in (0, 1); B(n) - fraction is an integer
};

// { p prime : (p - 1) | n }. Throws std::invalid_argument unless n is even
// and >= 2.
std::vector<std::uint64_t> vsc_primes(std::uint64_t n);

VscData vsc_data(std::uint64_t n);

struct VscFraction {
  ExactRational fraction;
  mpz_class denominator;
};

VscFraction vsc_fraction(std::uint64_t n);

}  // namespace bern
