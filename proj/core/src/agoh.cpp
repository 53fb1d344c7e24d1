#include "bern/agoh.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bern/primes.hpp"

namespace bern {

AgohVerdict agoh_check(std::uint64_t m, const EngineOptions& engine) {
  if (m < 2) throw std::invalid_argument("agoh_check: m must be >= 2");
  AgohVerdict verdict;
  verdict.m = m;
  verdict.is_prime = is_prime(m);

  const ExactRational b = bernoulli(static_cast<std::int64_t>(m - 1), engine).value;
  const ExactRational product = ExactRational(static_cast<long>(m)) * b;  // a/b, reduced

  const mpz_class modulus(static_cast<unsigned long>(m));
  if (gcd(product.denominator(), modulus) != 1) return verdict;  // undefined residue

  mpz_class inverse;
  mpz_invert(inverse.get_mpz_t(), product.denominator().get_mpz_t(), modulus.get_mpz_t());
  mpz_class residue = product.numerator() % modulus;  // may be negative
  residue = (residue * inverse) % modulus;
  if (residue < 0) residue += modulus;

  verdict.residue = residue.get_ui();
  verdict.congruence_holds = *verdict.residue == m - 1;
  return verdict;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> read_agoh_checkpoint(const std::filesystem::path& path) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::uint64_t start = 0;
    std::uint64_t end = 0;
    std::string tag;
    if (ls >> start >> end >> tag && tag == "verified" && start <= end) out.emplace_back(start, end);
  }
  return out;
}

AgohScanReport agoh_scan(std::uint64_t max, const AgohScanOptions& options) {
  if (max < 2) throw std::invalid_argument("agoh_scan: max must be >= 2");
  const std::uint64_t block = std::max<std::uint64_t>(options.block_size, 1);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> done;
  if (options.resume && options.checkpoint) done = read_agoh_checkpoint(*options.checkpoint);
  std::sort(done.begin(), done.end());

  // Work list: [2, max] minus the union of verified ranges, cut into blocks.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pending;
  AgohScanReport report;
  auto add_gap = [&](std::uint64_t lo, std::uint64_t hi) {
    for (; lo <= hi; lo += block) {
      pending.emplace_back(lo, std::min(hi, lo + block - 1));
      if (hi - lo < block) break;
    }
  };
  std::uint64_t cursor = 2;
  for (const auto& [lo, hi] : done) {
    if (cursor > max) break;
    if (hi < cursor) continue;
    if (lo > cursor) add_gap(cursor, std::min(lo - 1, max));
    const std::uint64_t covered_to = std::min(hi, max);
    if (covered_to >= std::max(lo, cursor)) report.candidates_resumed += covered_to - std::max(lo, cursor) + 1;
    cursor = std::max(cursor, covered_to + 1);
  }
  if (cursor <= max) add_gap(cursor, max);

  std::mutex merge_mutex;
  std::ofstream checkpoint;
  if (options.checkpoint) checkpoint.open(*options.checkpoint, std::ios::app);

  std::atomic<std::size_t> next_range{0};
  auto scan_ranges = [&] {
    for (std::size_t i = next_range++; i < pending.size(); i = next_range++) {
      const auto [lo, hi] = pending[i];
      std::vector<AgohVerdict> bad;
      std::uint64_t held = 0;
      std::uint64_t primes = 0;
      for (std::uint64_t m = lo; m <= hi; ++m) {
        const AgohVerdict v = agoh_check(m, options.engine);
        held += v.congruence_holds;
        primes += v.is_prime;
        if (!v.conforms()) bad.push_back(v);
      }
      std::lock_guard lock(merge_mutex);
      report.congruences_held += held;
      report.primes_seen += primes;
      report.candidates_checked += hi - lo + 1;
      report.violations.insert(report.violations.end(), bad.begin(), bad.end());
      if (checkpoint.is_open() && bad.empty()) {
        checkpoint << lo << ' ' << hi << " verified\n";
        checkpoint.flush();
      }
    }
  };

  std::exception_ptr failure;
  auto worker = [&] {
    try {
      scan_ranges();
    } catch (...) {
      std::lock_guard lock(merge_mutex);
      if (!failure) failure = std::current_exception();
      next_range = pending.size();
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(pending.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  report.candidates_checked += report.candidates_resumed;
  std::sort(report.violations.begin(), report.violations.end(),
            [](const AgohVerdict& a, const AgohVerdict& b) { return a.m < b.m; });
  return report;
}

}  // namespace bern
