#pragma once

#include <map>
#include <stdexcept>

#include "mzv/bigreal.hpp"
#include "mzv/index.hpp"
#include "mzv/numeric.hpp"
#include "mzv/regularization.hpp"

namespace mzv {

/// Regularization scheme of a depth-n generating function
///   f_n(x) = sum_k c(k) x_1^{k_1-1} ... x_n^{k_n-1}.
/// kNatural: surjection-averaged stuffle values; kStuffle: stuffle constant
/// terms; kShuffle: shuffle constant terms.
enum class Scheme { kNatural, kStuffle, kShuffle };

Scheme parse_scheme(std::string_view name);
const char* scheme_name(Scheme s);

/// Coefficient of x^{k-1} in a scheme, as an exact combination.
MzvCombo series_coefficient(Scheme s, const Index& k);

/// Coefficients of a depth-n generating function for all indices of weight
/// at most max_weight. Depth 0 is the constant 1.
template <class V>
struct SeriesTrunc {
  int depth = 0;
  int max_weight = 0;
  std::map<Index, V> coefficients;

  const V& at(const Index& k) const {
    auto it = coefficients.find(k);
    if (it == coefficients.end()) throw std::out_of_range("series coefficient outside truncation: " + k.to_string());
    return it->second;
  }
};

SeriesTrunc<MzvCombo> build_series_symbolic(Scheme s, int n, int max_weight);
SeriesTrunc<BigReal> build_series_numeric(Scheme s, int n, int max_weight, Evaluator& ev);

struct ShuffleDefect {
  BigReal max_defect;
  Index worst;
  int checked = 0;
};

/// Largest coefficient-wise defect of
///   f_i(x_1..x_i) f_{n-i}(x_{i+1}..x_n) = sum over shuffles s of f_n|_s
/// over all monomials of weight at most max_weight.
ShuffleDefect series_shuffle_check(Scheme s, int n, int i, int max_weight, Evaluator& ev);

/// The same identity as exact combinations; returns the number of monomials
/// where the two sides differ.
int series_shuffle_mismatches(Scheme s, int n, int i, int max_weight);

}  // namespace mzv
