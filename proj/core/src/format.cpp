#include "bern/format.hpp"

#include <sstream>
#include <stdexcept>

namespace bern {

std::optional<OutputMode> parse_output_mode(std::string_view name) {
  if (name == "fraction") return OutputMode::fraction;
  if (name == "numerator") return OutputMode::numerator;
  if (name == "denominator") return OutputMode::denominator;
  if (name == "decimal") return OutputMode::decimal;
  if (name == "summary") return OutputMode::summary;
  return std::nullopt;
}

std::string to_decimal(const ExactRational& value, std::uint64_t digits) {
  const mpz_class num = abs(value.numerator());
  const mpz_class& den = value.denominator();
  mpz_class whole;
  mpz_class rem;
  mpz_tdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  std::string out = value.sign() < 0 ? "-" : "";
  out += whole.get_str(10);
  if (digits == 0) return out;
  out += '.';
  // All remaining digits at once: floor(rem * 10^digits / den).
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class frac = rem * scale / den;
  std::string tail = frac.get_str(10);
  out += std::string(digits - tail.size(), '0') + tail;
  return out;
}

std::string render_value(const ExactRational& value, const OutputFormat& format) {
  switch (format.mode) {
    case OutputMode::fraction:
      return value.to_string();
    case OutputMode::numerator:
      return value.numerator().get_str(10);
    case OutputMode::denominator:
      return value.denominator().get_str(10);
    case OutputMode::decimal:
      return to_decimal(value, format.decimal_digits);
    case OutputMode::summary:
      return value.is_integer() ? value.numerator().get_str(10) : value.to_string();
  }
  throw std::logic_error("render_value: unknown mode");
}

std::string render_summary(const BernoulliResult& result) {
  // Values short enough to read are printed in full.
  constexpr std::size_t kInlineDigits = 80;
  const ExactRational& v = result.value;
  std::ostringstream out;
  out << "B(" << result.n << ")\n";
  out << "sign: " << (v.sign() < 0 ? "negative" : v.sign() > 0 ? "positive" : "zero") << '\n';
  out << "numerator digits: " << decimal_length(v.numerator()) << '\n';
  out << "denominator: " << v.denominator().get_str(10) << '\n';
  if (decimal_length(v.numerator()) <= kInlineDigits) {
    out << "value: " << render_value(v, {OutputMode::summary, 0}) << '\n';
  }
  if (result.plan_used) {
    const PrecisionPlan& plan = *result.plan_used;
    out << "working precision: " << plan.decimal_digits << " digits\n";
    out << "phase-1 primes up to: " << plan.phase1_bound << '\n';
    out << "last correction prime: " << result.last_correction_prime << '\n';
    out << "used primes up to and including: " << result.stop_prime << '\n';
    out << "retries: " << result.retries << '\n';
    out << "consistency margin: " << result.consistency_margin << '\n';
  }
  return out.str();
}

std::string table_line(std::uint64_t n, const ExactRational& value, const OutputFormat& format) {
  std::string line = std::to_string(n) + '\t';
  switch (format.mode) {
    case OutputMode::fraction:
      return line + value.numerator().get_str(10) + '\t' + value.denominator().get_str(10);
    case OutputMode::summary:
      throw std::invalid_argument("table output does not support summary mode");
    default:
      return line + render_value(value, format);
  }
}

}  // namespace bern
