#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mzv {

using Exponent = std::vector<int>;

/// Sparse polynomial with rational coefficients in a fixed number of
/// variables x_1 .. x_n (0-based positions in the exponent vectors).
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const mpq_class& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Exponent& e, const mpq_class& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, mpq_class>& terms() const { return terms_; }
  mpq_class coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const mpq_class& c);
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool homogeneous(int d) const;
  MultiPoly homogeneous_part(int d) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const mpq_class& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const mpq_class& s) { return a *= s; }
  friend MultiPoly operator*(const mpq_class& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const { return *this * mpq_class(-1); }
  MultiPoly pow(int e) const;

  MultiPoly derivative(int i) const;
  MultiPoly times_variable(int i) const;
  /// Exact division by x_i; throws std::domain_error when x_i does not divide.
  MultiPoly divide_by_variable(int i) const;

  /// f(s_1, ..., s_n) for polynomials s_j sharing a common variable count.
  MultiPoly compose(const std::vector<MultiPoly>& substitutes) const;
  /// Same polynomial read in more variables (new ones unused).
  MultiPoly widened(int nvars) const;

  bool operator==(const MultiPoly& o) const = default;
  std::string to_string() const;

 private:
  int nvars_;
  std::map<Exponent, mpq_class> terms_;
};

/// All exponent vectors of n nonnegative entries summing to d.
std::vector<Exponent> monomials_of_degree(int n, int d);

/// Sum of partial derivatives; zero iff f is invariant under x_i -> x_i + t.
MultiPoly diagonal_derivative(const MultiPoly& f);
bool diagonal_translation_invariant(const MultiPoly& f);

}  // namespace mzv
