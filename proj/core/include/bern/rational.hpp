#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bern {

// Signed rational kept in lowest terms with a positive denominator.
// Zero is always 0/1.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value);  // NOLINT(google-explicit-constructor)
  ExactRational(mpz_class numerator, mpz_class denominator);
  explicit ExactRational(mpq_class value);

  // Accepts "a/b" or "a" with an optional leading '-'.
  static ExactRational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  // Always "<numerator>/<denominator>", including "0/1" and "n/1".
  std::string to_string() const;

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExactRational& a, const ExactRational& b) {
    return a.value_ < b.value_;
  }

 private:
  mpq_class value_{0};
};

// Number of decimal digits of |v|; 1 for zero.
std::size_t decimal_length(const mpz_class& v);

}  // namespace bern
