#include "bern/factorial.hpp"

#include <algorithm>
#include <future>
#include <vector>

namespace bern {
namespace {

// Below this span the product is accumulated in a machine word first.
constexpr std::uint64_t kLeafSpan = 16;

mpz_class leaf_product(std::uint64_t lo, std::uint64_t hi) {
  mpz_class out = 1;
  unsigned long word = 1;
  for (std::uint64_t k = lo; k <= hi; ++k) {
    if (word > (~0UL) / k) {
      out *= word;
      word = 1;
    }
    word *= static_cast<unsigned long>(k);
  }
  out *= word;
  return out;
}

mpz_class combine(std::vector<mpz_class> parts) {
  while (parts.size() > 1) {
    std::vector<mpz_class> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] * parts[i + 1]);
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return parts.empty() ? mpz_class(1) : parts.front();
}

}  // namespace

mpz_class range_product(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return 1;
  if (hi - lo < kLeafSpan) return leaf_product(lo, hi);
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return range_product(lo, mid) * range_product(mid + 1, hi);
}

mpz_class factorial(std::uint64_t n, unsigned threads) {
  if (threads <= 1 || n < 1024) return range_product(1, n);
  std::vector<std::future<mpz_class>> futures;
  const std::uint64_t block = (n + threads - 1) / threads;
  for (std::uint64_t lo = 1; lo <= n; lo += block) {
    const std::uint64_t hi = std::min(n, lo + block - 1);
    futures.push_back(std::async(std::launch::async, [lo, hi] { return range_product(lo, hi); }));
  }
  std::vector<mpz_class> parts;
  for (auto& f : futures) parts.push_back(f.get());
  return combine(std::move(parts));
}

}  // namespace bern
