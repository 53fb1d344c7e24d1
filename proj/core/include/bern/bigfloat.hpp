#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

namespace bern {

// Owning wrapper around an mpfr_t. Precision is fixed at construction;
// assignment from another BigFloat rounds into this object's precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(mpfr_prec_t bits, long value);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // Scientific-free decimal rendering with `digits` significant digits,
  // truncated toward zero, e.g. "6.28318530717958".
  std::string to_significant(std::size_t digits) const;

 private:
  mpfr_t value_;
};

// Binary precision that holds `digits` decimal digits: ceil(digits * log2 10).
mpfr_prec_t bits_for_digits(std::uint64_t digits);

// Extra bits carried beyond the decimal contract of every working value.
inline constexpr mpfr_prec_t kGuardBits = 64;

// A floating value together with the number of decimal digits it is
// good to.
struct ApproxReal {
  BigFloat value;
  std::uint64_t precision_digits;
};

}  // namespace bern
