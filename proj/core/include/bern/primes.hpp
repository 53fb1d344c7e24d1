#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bern {

// Deterministic for every 64-bit input (Miller-Rabin on the first twelve
// prime bases).
bool is_prime(std::uint64_t m);

// Smallest prime strictly greater than p. Throws std::overflow_error when no
// such prime fits in 64 bits.
std::uint64_t next_prime(std::uint64_t p);

// All positive divisors of n, increasing. Throws std::invalid_argument for 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Prime factorization by trial division as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Every prime <= limit, via a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Number of primes <= limit.
std::uint64_t prime_count(std::uint64_t limit);

// Increasing stream of primes starting at 2. Sieves one segment at a time
// and switches to next_prime() past the sieving ceiling.
class PrimeStream {
 public:
  explicit PrimeStream(std::optional<std::uint64_t> limit = std::nullopt);

  // Next prime, or nullopt once the next prime would exceed the limit.
  std::optional<std::uint64_t> next();

  // Last prime yielded; 1 before the first call.
  std::uint64_t current() const { return current_; }

  static constexpr std::uint64_t kSieveCeiling = 1'000'000'000'000ULL;

 private:
  void refill();

  std::optional<std::uint64_t> limit_;
  std::uint64_t current_ = 1;
  std::uint64_t segment_low_ = 0;  // next unsieved value
  std::vector<std::uint64_t> buffer_;
  std::size_t cursor_ = 0;
  std::vector<std::uint32_t> base_primes_;
  std::uint64_t base_limit_ = 0;
};

}  // namespace bern
