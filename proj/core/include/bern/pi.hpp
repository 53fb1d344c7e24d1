#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "bern/bigfloat.hpp"

namespace bern {

// 2*pi by the Gauss-Legendre (arithmetic-geometric mean) iteration, at
// `bits` of binary precision.
BigFloat two_pi_agm(mpfr_prec_t bits);

// 2*pi good to `digits` decimal digits (digits >= 9), carried at
// bits_for_digits(digits) + kGuardBits. With a cache path, digits are read
// from the cache when it holds enough of them; otherwise they are computed
// and the cache is rewritten with the longer expansion. A cache that fails
// to parse or to match its checksum is ignored and replaced.
ApproxReal two_pi(std::uint64_t digits,
                  const std::optional<std::filesystem::path>& cache = std::nullopt);

// Cache layout: one header line "2*Pi <count> <checksum>", then a line
// holding the decimal expansion with exactly <count> significant digits,
// truncated. The checksum is the hex FNV-1a hash of the expansion line.
struct PiCacheContents {
  std::uint64_t digit_count;
  std::string expansion;  // "6.2831..."
};

// Parses a cache file; nullopt when absent or malformed.
std::optional<PiCacheContents> read_pi_cache(const std::filesystem::path& path);

}  // namespace bern
