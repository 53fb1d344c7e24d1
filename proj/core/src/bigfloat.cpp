#include "bern/bigfloat.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace bern {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t bits, long value) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_significant(std::size_t digits) const {
  if (digits == 0) throw std::invalid_argument("to_significant: zero digits");
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, digits, value_, MPFR_RNDZ), mpfr_free_str);
  std::string mantissa(raw.get());
  std::string sign;
  if (!mantissa.empty() && mantissa[0] == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // value = 0.mantissa * 10^exp10
  std::string out;
  if (exp10 <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mantissa;
  } else if (static_cast<std::size_t>(exp10) >= mantissa.size()) {
    out = mantissa + std::string(static_cast<std::size_t>(exp10) - mantissa.size(), '0');
  } else {
    out = mantissa.substr(0, static_cast<std::size_t>(exp10)) + "." +
          mantissa.substr(static_cast<std::size_t>(exp10));
  }
  return sign + out;
}

mpfr_prec_t bits_for_digits(std::uint64_t digits) {
  // log2(10) rounded up in the last place so the ceiling never undershoots.
  constexpr long double kLog2Ten = 3.32192809488736234787L;
  const long double bits = std::ceil(static_cast<long double>(digits) * kLog2Ten);
  if (bits > static_cast<long double>(MPFR_PREC_MAX - 2 * kGuardBits)) {
    throw std::length_error("bits_for_digits: precision exceeds MPFR limits");
  }
  return static_cast<mpfr_prec_t>(bits) < MPFR_PREC_MIN ? MPFR_PREC_MIN
                                                        : static_cast<mpfr_prec_t>(bits);
}

}  // namespace bern
