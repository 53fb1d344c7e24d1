#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "bern/bigfloat.hpp"
#include "bern/precision.hpp"
#include "bern/rational.hpp"
#include "bern/stage_timer.hpp"

namespace bern {

struct EngineOptions {
  unsigned threads = 1;
  std::optional<std::filesystem::path> pi_cache;
  // Ceiling on the pre-flight cost d * (number of phase-1 primes).
  std::uint64_t max_digits = 10'000'000;
  // Guard-digit escalations (32, 64, 128, ...) tried before giving up.
  unsigned max_retries = 6;
  // Digits withheld from the first pass only. Used to exercise the retry
  // ladder; leave at 0 in production.
  std::uint64_t first_pass_shortfall = 0;
};

enum class MagnitudeMode {
  euler_product,  // 2 zeta(n) n! / (2 pi)^n
  asymptotic,     // 2 n! / (2 pi)^n, zeta(n) taken as 1
};

// |B(n)| for even n >= 2 as a working-precision float.
ApproxReal bern_magnitude(std::uint64_t n, const PrecisionPlan& plan,
                          MagnitudeMode mode = MagnitudeMode::euler_product,
                          const EngineOptions& options = {});

struct BernoulliResult {
  std::uint64_t n = 0;
  ExactRational value;
  // Absent for n = 0, n = 1 and odd n, which need no computation.
  std::optional<PrecisionPlan> plan_used;
  unsigned retries = 0;
  std::vector<StageTiming> timings;
  double consistency_margin = 0.0;  // |sigma z - f - I| of the accepted pass
  std::uint64_t last_correction_prime = 0;
  std::uint64_t stop_prime = 0;
};

// Exact B(n). Throws std::invalid_argument for n < 0 ("argument must be
// >= 0"), LimitError when the pre-flight estimate exceeds the ceiling and
// ConsistencyError when no retry certifies the rounding.
BernoulliResult bernoulli(std::int64_t n, const EngineOptions& options = {});

// d * (number of primes <= phase1_bound).
std::uint64_t preflight_cost(const PrecisionPlan& plan);

// Throws LimitError when preflight_cost(plan) exceeds options.max_digits.
void check_preflight(const PrecisionPlan& plan, const EngineOptions& options);

}  // namespace bern
