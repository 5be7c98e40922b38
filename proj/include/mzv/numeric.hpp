#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "mzv/bigreal.hpp"
#include "mzv/index.hpp"
#include "mzv/regularization.hpp"
#include "mzv/value_cache.hpp"

namespace mzv {

/// zeta(k) for admissible k, correct to within 10^{-(digits-5)}.
///
/// The iterated integral over [0,1] is split at 1/2 (Hölder convolution):
///   zeta(e_1..e_w) = sum_j  Li[dual(e_1..e_j)](1/2) * Li[e_{j+1}..e_w](1/2)
/// where dual reverses a word and swaps A <-> B. Every factor is a multiple
/// polylogarithm at 1/2 whose series converges like 2^{-n}.
/// Throws std::invalid_argument for non-admissible k.
BigReal eval_admissible(const Index& k, int digits = kDefaultDigits);

/// Li_{a_1..a_r}(1/2) = sum_{n_1 > ... > n_r > 0} 2^{-n_1} / (n_1^{a_1} ... n_r^{a_r}),
/// the integral over [0,1/2] of the word A^{a_1-1}B ... A^{a_r-1}B.
BigReal polylog_half(const Word& w, int digits);

/// Memoizing evaluator bound to one precision, optionally backed by a
/// persistent ValueCache. Safe for concurrent use.
class Evaluator {
 public:
  explicit Evaluator(int digits = kDefaultDigits, std::shared_ptr<ValueCache> cache = nullptr);

  int digits() const { return digits_; }
  BigReal zeta(const Index& k);
  BigReal combo(const MzvCombo& c);
  /// Numeric value of each T-coefficient.
  std::map<int, BigReal> regpoly(const RegPoly& p);

 private:
  int digits_;
  std::shared_ptr<ValueCache> cache_;
  std::shared_mutex mutex_;
  std::map<Index, BigReal> memo_;
};

BigReal eval_combo(const MzvCombo& c, int digits = kDefaultDigits);

/// Exact partial sum over nonzero integers |m_i| < M with 1/m_1 > ... > 1/m_n
/// of 1/(m_1^{k_1} ... m_n^{k_n}).
mpq_class direct_sum_F(const Index& k, int M);

/// Exact partial sum over nonzero integers |m_i| < M of w(m) / (m_1^{k_1} ... m_n^{k_n}),
/// w the cone weight.
mpq_class direct_sum_natural(const Index& k, int M);

/// Nonzero integers with |m| < M sorted by decreasing 1/m: 1, 2, ..., M-1, -(M-1), ..., -1.
std::vector<long> reciprocal_order(long M);

struct Extrapolation {
  BigReal value;
  /// |difference to the previous tableau entry|, a rough error indicator.
  BigReal change;
};

/// Richardson extrapolation of values sampled at M_0 * 2^j (j = 0, 1, ...),
/// assuming an expansion sum_{p >= 1} sum_{l <= log_power} c_{p,l} log(M)^l / M^p.
/// Each power p is eliminated log_power + 1 times.
Extrapolation richardson_extrapolate(std::span<const BigReal> samples, int log_power);

/// Extrapolated limit of direct_sum_F (resp. direct_sum_natural) from
/// M = 2^j, j_min <= j <= j_max.
Extrapolation extrapolate_direct_sum_F(const Index& k, int j_min, int j_max, int digits = kDefaultDigits);
Extrapolation extrapolate_direct_sum_natural(const Index& k, int j_min, int j_max, int digits = kDefaultDigits);

}  // namespace mzv
