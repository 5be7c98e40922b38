#include "mzv/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mzv {

mpfr_prec_t digits_to_bits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

BigReal::BigReal(int digits) : digits_(digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, int digits) : BigReal(digits) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigReal BigReal::from_rational(const mpq_class& q, int digits) {
  BigReal out(digits);
  mpfr_set_q(out.value_, q.get_mpq_t(), MPFR_RNDN);
  out.add_rounding_error();
  return out;
}

BigReal BigReal::from_integer(const mpz_class& z, int digits) {
  BigReal out(digits);
  if (mpfr_set_z(out.value_, z.get_mpz_t(), MPFR_RNDN) != 0) out.add_rounding_error();
  return out;
}

BigReal BigReal::from_string(std::string_view text, int digits) {
  BigReal out(digits);
  std::string s(text);
  if (mpfr_set_str(out.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: " + s);
  }
  out.add_rounding_error();
  return out;
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_), error_(other.error_) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_), error_(other.error_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
    error_ = other.error_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  std::swap(error_, other.error_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

void BigReal::add_rounding_error() {
  if (mpfr_zero_p(value_)) return;
  // One unit in the last place: |x| * 2^{1 - prec}.
  long exp = 0;
  double mant = mpfr_get_d_2exp(&exp, value_, MPFR_RNDN);
  error_ += std::ldexp(std::fabs(mant), static_cast<int>(exp - bits() + 1));
}

namespace {

void match_precision(BigReal& a, const BigReal& b) {
  if (b.bits() > a.bits()) {
    mpfr_prec_round(a.raw(), b.bits(), MPFR_RNDN);
  }
}

}  // namespace

BigReal& BigReal::operator+=(const BigReal& o) {
  match_precision(*this, o);
  digits_ = std::max(digits_, o.digits_);
  error_ += o.error_;
  if (mpfr_add(value_, value_, o.value_, MPFR_RNDN) != 0) add_rounding_error();
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  match_precision(*this, o);
  digits_ = std::max(digits_, o.digits_);
  error_ += o.error_;
  if (mpfr_sub(value_, value_, o.value_, MPFR_RNDN) != 0) add_rounding_error();
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  match_precision(*this, o);
  digits_ = std::max(digits_, o.digits_);
  double a = std::fabs(to_double());
  double b = std::fabs(o.to_double());
  error_ = a * o.error_ + b * error_ + error_ * o.error_;
  if (mpfr_mul(value_, value_, o.value_, MPFR_RNDN) != 0) add_rounding_error();
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (mpfr_zero_p(o.value_)) throw std::domain_error("BigReal division by zero");
  match_precision(*this, o);
  digits_ = std::max(digits_, o.digits_);
  double a = std::fabs(to_double());
  double b = std::fabs(o.to_double());
  // |a/b - a'/b'| <= (e_a + |a/b| e_b) / (|b| - e_b)
  double denom = b - o.error_;
  error_ = denom > 0 ? (error_ + (a / b) * o.error_) / denom : HUGE_VAL;
  if (mpfr_div(value_, value_, o.value_, MPFR_RNDN) != 0) add_rounding_error();
  return *this;
}

BigReal& BigReal::operator*=(const mpq_class& q) {
  double scale = std::fabs(q.get_d());
  error_ *= scale;
  if (mpfr_mul_q(value_, value_, q.get_mpq_t(), MPFR_RNDN) != 0) add_rounding_error();
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigReal BigReal::abs() const {
  BigReal out(*this);
  mpfr_abs(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigReal BigReal::sqrt() const {
  if (sign() < 0) throw std::domain_error("BigReal sqrt of negative value");
  BigReal out(*this);
  double v = to_double();
  out.error_ = v > 0 ? error_ / (2.0 * std::sqrt(v)) : std::sqrt(error_);
  if (mpfr_sqrt(out.value_, value_, MPFR_RNDN) != 0) out.add_rounding_error();
  return out;
}

mpz_class BigReal::round() const {
  mpz_class out;
  mpfr_t tmp;
  mpfr_init2(tmp, bits());
  mpfr_round(tmp, value_);
  mpfr_get_z(out.get_mpz_t(), tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

bool BigReal::abs_below_pow10(long exponent) const {
  if (mpfr_zero_p(value_)) return true;
  mpfr_t bound;
  mpfr_init2(bound, 64);
  mpfr_set_si(bound, 10, MPFR_RNDN);
  mpfr_pow_si(bound, bound, exponent, MPFR_RNDN);
  bool below = mpfr_cmpabs(value_, bound) < 0;
  mpfr_clear(bound);
  return below;
}

bool BigReal::is_zero() const { return abs_below_pow10(-(digits_ - 10)); }

double BigReal::log10_abs() const {
  if (mpfr_zero_p(value_)) return -HUGE_VAL;
  long exp = 0;
  double mant = mpfr_get_d_2exp(&exp, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp) * 0.30102999566398120;
}

std::string BigReal::to_string(int significant) const {
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(significant), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp) - 1);
  return out;
}

std::string BigReal::exact_string() const {
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, 0, value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  return sign + "0." + mant + "e" + std::to_string(static_cast<long>(exp));
}

}  // namespace mzv
