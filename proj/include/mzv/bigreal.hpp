#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace mzv {

inline constexpr int kDefaultDigits = 60;

/// Binary precision used for a working precision of `digits` decimal digits.
mpfr_prec_t digits_to_bits(int digits);

/// Arbitrary-precision real carrying its working precision (decimal digits)
/// and a conservative absolute error bound. Binary operations run at the larger
/// of the two precisions and accumulate the operand bounds plus one rounding
/// unit of the result.
class BigReal {
 public:
  explicit BigReal(int digits = kDefaultDigits);
  BigReal(long value, int digits);
  static BigReal from_rational(const mpq_class& q, int digits);
  static BigReal from_integer(const mpz_class& z, int digits);
  /// Parses a decimal string. The error bound is set to one rounding unit.
  static BigReal from_string(std::string_view text, int digits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int digits() const { return digits_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  double error_bound() const { return error_; }
  void set_error_bound(double e) { error_ = e; }
  void widen_error(double e) { error_ += e; }

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(const mpq_class& q);
  BigReal operator-() const;

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator*(BigReal a, const mpq_class& q) { return a *= q; }
  friend BigReal operator*(const mpq_class& q, BigReal a) { return a *= q; }

  BigReal abs() const;
  BigReal sqrt() const;
  /// Nearest integer.
  mpz_class round() const;

  int sign() const { return mpfr_sgn(value_); }
  /// |x| < 10^{-(digits - 10)}.
  bool is_zero() const;
  /// |x| < 10^{exponent}.
  bool abs_below_pow10(long exponent) const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log10 |x|; -inf for zero.
  double log10_abs() const;

  /// Scientific notation with `significant` digits.
  std::string to_string(int significant) const;
  std::string to_string() const { return to_string(digits_); }
  /// Shortest decimal string that reads back to the identical binary value at
  /// this precision.
  std::string exact_string() const;

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.value_, b.value_); }
  /// Bit-level equality of values (ignores error bounds).
  bool identical(const BigReal& o) const { return mpfr_equal_p(value_, o.value_) && bits() == o.bits(); }

 private:
  void add_rounding_error();

  mpfr_t value_;
  int digits_;
  double error_ = 0.0;
};

}  // namespace mzv
