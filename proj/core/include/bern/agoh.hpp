#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "bern/bernoulli.hpp"

namespace bern {

// Outcome of testing m * B(m-1) == -1 (mod m).
struct AgohVerdict {
  std::uint64_t m = 0;
  bool congruence_holds = false;
  bool is_prime = false;
  // a * b^-1 mod m for m B(m-1) = a/b; nullopt when gcd(b, m) != 1.
  std::optional<std::uint64_t> residue;

  // The conjecture predicts congruence_holds == is_prime.
  bool conforms() const { return congruence_holds == is_prime; }
};

// Throws std::invalid_argument for m < 2.
AgohVerdict agoh_check(std::uint64_t m, const EngineOptions& engine = {});

struct AgohScanOptions {
  unsigned threads = 1;
  std::uint64_t block_size = 256;  // candidates per checkpointed range
  std::optional<std::filesystem::path> checkpoint;
  bool resume = false;  // skip ranges already recorded in the checkpoint
  EngineOptions engine;
};

struct AgohScanReport {
  std::vector<AgohVerdict> violations;  // ordered by m
  std::uint64_t candidates_checked = 0;  // includes resumed ranges
  std::uint64_t candidates_resumed = 0;
  std::uint64_t congruences_held = 0;    // over freshly checked candidates
  std::uint64_t primes_seen = 0;         // over freshly checked candidates
};

// Checks every m in [2, max]. Each range finished without a violation is
// appended to the checkpoint as "start end verified"; ranges containing a
// violation are never recorded, so a resumed scan reports them again.
AgohScanReport agoh_scan(std::uint64_t max, const AgohScanOptions& options = {});

// Ranges recorded as verified in a checkpoint file, in file order.
std::vector<std::pair<std::uint64_t, std::uint64_t>> read_agoh_checkpoint(
    const std::filesystem::path& path);

}  // namespace bern
