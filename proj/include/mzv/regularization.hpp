#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

#include "mzv/index.hpp"

namespace mzv {

/// Exact rational linear combination of admissible multiple zeta values. The
/// empty index stands for the constant 1.
class MzvCombo {
 public:
  MzvCombo() = default;
  /// The single term coeff * zeta(k); k must be admissible.
  explicit MzvCombo(const Index& k, const mpq_class& coeff = 1);
  static MzvCombo one() { return MzvCombo(Index()); }

  const std::map<Index, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coefficient(const Index& k) const;

  void add_term(const Index& k, const mpq_class& coeff);

  MzvCombo& operator+=(const MzvCombo& other);
  MzvCombo& operator-=(const MzvCombo& other);
  MzvCombo& operator*=(const mpq_class& scalar);
  friend MzvCombo operator+(MzvCombo a, const MzvCombo& b) { return a += b; }
  friend MzvCombo operator-(MzvCombo a, const MzvCombo& b) { return a -= b; }
  friend MzvCombo operator*(MzvCombo a, const mpq_class& s) { return a *= s; }
  friend MzvCombo operator*(const mpq_class& s, MzvCombo a) { return a *= s; }
  MzvCombo operator-() const { return *this * mpq_class(-1); }

  bool operator==(const MzvCombo&) const = default;

  /// Largest weight among the terms (-1 for the zero combination).
  int max_weight() const;
  bool homogeneous(int weight) const;

  std::string to_string() const;

 private:
  std::map<Index, mpq_class> terms_;
};

/// Product of combinations, expanded through the stuffle product. Stuffles of
/// admissible indices are admissible, so the result needs no regularization.
MzvCombo combo_product(const MzvCombo& a, const MzvCombo& b);

/// Polynomial in the regularization variable T with MzvCombo coefficients.
class RegPoly {
 public:
  RegPoly() = default;
  explicit RegPoly(MzvCombo constant);
  static RegPoly t_power(int degree);

  const std::map<int, MzvCombo>& coefficients() const { return coeffs_; }
  MzvCombo coefficient(int degree) const;
  MzvCombo constant_term() const { return coefficient(0); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(int degree, const MzvCombo& c);

  RegPoly& operator+=(const RegPoly& other);
  RegPoly& operator-=(const RegPoly& other);
  RegPoly& operator*=(const mpq_class& scalar);
  friend RegPoly operator+(RegPoly a, const RegPoly& b) { return a += b; }
  friend RegPoly operator-(RegPoly a, const RegPoly& b) { return a -= b; }
  friend RegPoly operator*(RegPoly a, const mpq_class& s) { return a *= s; }
  friend RegPoly operator*(const RegPoly& a, const RegPoly& b);
  /// Multiplies by T.
  RegPoly shifted() const;

  bool operator==(const RegPoly&) const = default;

  std::string to_string() const;

 private:
  std::map<int, MzvCombo> coeffs_;
};

/// Series (stuffle) regularization with zeta*(1) = T. Admissible indices map
/// to themselves in degree 0.
RegPoly stuffle_regularize(const Index& k);

/// Integral (shuffle) regularization with Z(B) = T. Throws
/// std::invalid_argument unless w is empty or ends with B.
RegPoly shuffle_regularize(const Word& w);
inline RegPoly shuffle_regularize(const Index& k) { return shuffle_regularize(word_of_index(k)); }

/// Coefficient Z(w) of an arbitrary word in the associator: the shuffle
/// regularization extended to A-terminated words by Z(A) = 0, at T = 0.
MzvCombo associator_coefficient(const Word& w);

/// Sum over ordered surjections phi of stuffle_regularize(phi_* k) / #G_phi.
RegPoly natural_regularize(const Index& k);

}  // namespace mzv
