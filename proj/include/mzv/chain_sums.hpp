#pragma once

#include <cstddef>
#include <vector>

#include "mzv/index.hpp"

namespace mzv {

// Nested sums over a finite totally ordered set of points 0 .. count-1.
//
// strict_chain_sum:   sum over p_1 < ... < p_n of  prod_i f(p_i, k_i)
// weighted_chain_sum: sum over p_1 <= ... <= p_n where each maximal run of b
//                     equal points contributes  tie_weight(b) * f(p, sum of the
//                     run's parts)
//
// f(point, exponent) is the per-point term (e.g. 1/m^e); Scalar is any
// commutative ring with 0 and 1 constructible from int.

template <class Scalar, class Term>
Scalar strict_chain_sum(const Index& k, std::size_t count, Term&& f) {
  const int n = k.depth();
  std::vector<Scalar> acc(n + 1, Scalar(0));
  acc[0] = Scalar(1);
  for (std::size_t point = 0; point < count; ++point) {
    for (int j = n; j >= 1; --j) acc[j] += acc[j - 1] * f(point, k[j - 1]);
  }
  return acc[n];
}

template <class Scalar, class Term, class TieWeight>
Scalar weighted_chain_sum(const Index& k, std::size_t count, Term&& f, TieWeight&& tie_weight) {
  const int n = k.depth();
  std::vector<Scalar> acc(n + 1, Scalar(0));
  acc[0] = Scalar(1);
  std::vector<Scalar> weights;
  for (int b = 0; b <= n; ++b) weights.push_back(tie_weight(b));
  for (std::size_t point = 0; point < count; ++point) {
    // Descending j so that acc[j - b] still excludes this point.
    for (int j = n; j >= 1; --j) {
      int run_exponent = 0;
      for (int b = 1; b <= j; ++b) {
        run_exponent += k[j - b];
        acc[j] += acc[j - b] * weights[b] * f(point, run_exponent);
      }
    }
  }
  return acc[n];
}

}  // namespace mzv
