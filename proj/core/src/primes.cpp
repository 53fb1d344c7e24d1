#include "bern/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace bern {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Composite witness test for odd m > 2 with m - 1 = d * 2^s.
bool is_witness(std::uint64_t a, std::uint64_t d, unsigned s, std::uint64_t m) {
  std::uint64_t x = pow_mod(a, d, m);
  if (x == 1 || x == m - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, m);
    if (x == m - 1) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> simple_sieve(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

constexpr std::uint64_t kSegmentSize = 1 << 18;

// Sieves [low, high) with base primes covering sqrt(high - 1) and appends
// the primes found to out.
void sieve_segment(std::uint64_t low, std::uint64_t high,
                   const std::vector<std::uint32_t>& base, std::vector<std::uint64_t>& out) {
  std::vector<char> composite(high - low, 0);
  for (std::uint32_t p : base) {
    const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
    if (pp >= high) break;
    std::uint64_t start = std::max(pp, (low + p - 1) / p * p);
    for (std::uint64_t j = start; j < high; j += p) composite[j - low] = 1;
  }
  for (std::uint64_t v = std::max<std::uint64_t>(low, 2); v < high; ++v) {
    if (!composite[v - low]) out.push_back(v);
  }
}

}  // namespace

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (m % p == 0) return m == p;
  }
  std::uint64_t d = m - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    if (is_witness(a, d, s, m)) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t p) {
  // Largest prime below 2^64.
  constexpr std::uint64_t kLargestPrime = 18446744073709551557ULL;
  if (p >= kLargestPrime) throw std::overflow_error("next_prime: no 64-bit prime above input");
  if (p < 2) return 2;
  std::uint64_t c = (p % 2 == 0) ? p + 1 : p + 2;
  while (!is_prime(c)) c += 2;
  return c;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  for (std::uint64_t p = 3; p <= n / p; p += 2) strip(p);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t existing = out.size();
    std::uint64_t power = 1;
    for (unsigned k = 0; k < e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  if (limit >= PrimeStream::kSieveCeiling) {
    throw std::length_error("primes_up_to: limit beyond sieving ceiling");
  }
  const auto base = simple_sieve(isqrt(limit));
  for (std::uint64_t low = 0; low <= limit; low += kSegmentSize) {
    sieve_segment(low, std::min(low + kSegmentSize, limit + 1), base, out);
  }
  return out;
}

std::uint64_t prime_count(std::uint64_t limit) {
  std::uint64_t count = 0;
  PrimeStream stream(limit);
  while (stream.next()) ++count;
  return count;
}

PrimeStream::PrimeStream(std::optional<std::uint64_t> limit) : limit_(limit) {}

void PrimeStream::refill() {
  buffer_.clear();
  cursor_ = 0;
  while (buffer_.empty() && segment_low_ < kSieveCeiling) {
    const std::uint64_t high = std::min(segment_low_ + kSegmentSize, kSieveCeiling);
    const std::uint64_t need = isqrt(high - 1);
    if (need > base_limit_) {
      // Grow geometrically so re-sieving the base is rare.
      base_limit_ = std::max(need, base_limit_ * 2);
      base_primes_ = simple_sieve(base_limit_);
    }
    sieve_segment(segment_low_, high, base_primes_, buffer_);
    segment_low_ = high;
  }
}

std::optional<std::uint64_t> PrimeStream::next() {
  std::uint64_t candidate;
  if (cursor_ < buffer_.size() || (current_ + 1 < kSieveCeiling && (refill(), !buffer_.empty()))) {
    candidate = buffer_[cursor_++];
  } else {
    candidate = next_prime(current_);
  }
  if (limit_ && candidate > *limit_) return std::nullopt;
  current_ = candidate;
  return candidate;
}

}  // namespace bern
