#include "bern/rational.hpp"

#include <stdexcept>

namespace bern {

ExactRational::ExactRational(long value) : value_(value) {}

ExactRational::ExactRational(mpz_class numerator, mpz_class denominator) {
  if (denominator == 0) throw std::domain_error("ExactRational: zero denominator");
  value_.get_num() = std::move(numerator);
  value_.get_den() = std::move(denominator);
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) throw std::invalid_argument("ExactRational::parse: empty integer");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') {
        throw std::invalid_argument("ExactRational::parse: bad digit in '" + std::string(s) + "'");
      }
    }
    return mpz_class(std::string(s), 10);
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_int(text, true), mpz_class(1));
  return ExactRational(parse_int(text.substr(0, slash), true),
                       parse_int(text.substr(slash + 1), false));
}

std::string ExactRational::to_string() const {
  return numerator().get_str(10) + "/" + denominator().get_str(10);
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mpq_class(a.value_ + b.value_));
}
ExactRational operator-(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mpq_class(a.value_ - b.value_));
}
ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mpq_class(a.value_ * b.value_));
}
ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.value_ == 0) throw std::domain_error("ExactRational: division by zero");
  return ExactRational(mpq_class(a.value_ / b.value_));
}
ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-value_)); }

std::size_t decimal_length(const mpz_class& v) {
  if (v == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t len = mpz_sizeinbase(v.get_mpz_t(), 10);
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, len - 1);
  if (abs(v) < bound) --len;
  return len;
}

}  // namespace bern
