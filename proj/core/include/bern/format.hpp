#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bern/bernoulli.hpp"
#include "bern/rational.hpp"

namespace bern {

enum class OutputMode { fraction, numerator, denominator, decimal, summary };

struct OutputFormat {
  OutputMode mode = OutputMode::fraction;
  std::uint64_t decimal_digits = 50;  // digits after the point in decimal mode
};

std::optional<OutputMode> parse_output_mode(std::string_view name);

// Exact long division, truncated toward zero after `digits` places:
// to_decimal(-5/66, 4) == "-0.0757".
std::string to_decimal(const ExactRational& value, std::uint64_t digits);

// Renders one value. Fraction mode is always "<num>/<den>"; summary mode
// elides a denominator of 1.
std::string render_value(const ExactRational& value, const OutputFormat& format);

// Multi-line description of a computed result: sign, digit counts,
// precision, retries, prime cutoffs.
std::string render_summary(const BernoulliResult& result);

// "n<TAB>numerator<TAB>denominator" in fraction mode; the numerator,
// denominator or decimal columns alone in the other modes.
std::string table_line(std::uint64_t n, const ExactRational& value, const OutputFormat& format);

}  // namespace bern
