#include "mzv/pslq.hpp"

#include <cmath>
#include <stdexcept>

namespace mzv {

PslqResult pslq(std::span<const BigReal> x, int digits, const mpz_class& max_norm, int max_iterations) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw std::invalid_argument("pslq: need at least two values");
  PslqResult result;
  const BigReal zero(digits);
  BigReal gamma = BigReal::from_rational(mpq_class(4, 3), digits).sqrt();

  // Partial norms s_j = sqrt(sum_{k >= j} x_k^2) of the normalized vector.
  std::vector<BigReal> s(n, zero);
  BigReal acc = zero;
  for (int j = n - 1; j >= 0; --j) {
    acc += x[j] * x[j];
    s[j] = acc.sqrt();
  }
  if (s[0].is_zero()) throw std::invalid_argument("pslq: zero vector");
  const BigReal scale = s[0];
  std::vector<BigReal> y(n, zero);
  for (int j = 0; j < n; ++j) y[j] = x[j] / scale;
  for (int j = 0; j < n; ++j) s[j] /= scale;
  for (int j = 0; j < n; ++j) {
    if (s[j].is_zero()) {
      // Trailing zeros: x_j itself is a relation.
      result.found = true;
      result.relation.assign(n, 0);
      result.relation[j] = 1;
      result.stop_reason = "relation";
      return result;
    }
  }

  std::vector<std::vector<BigReal>> h(n, std::vector<BigReal>(n - 1, zero));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < std::min(i + 1, n - 1); ++j) {
      if (i == j) h[i][j] = s[j + 1] / s[j];
      else h[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
    }
  }
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0)), b = a;
  for (int i = 0; i < n; ++i) a[i][i] = b[i][i] = 1;

  auto reduce = [&](int i, int jmax) {
    for (int j = jmax; j >= 0; --j) {
      if (h[j][j].is_zero()) continue;
      mpz_class t = (h[i][j] / h[j][j]).round();
      if (t == 0) continue;
      BigReal tr = BigReal::from_integer(t, digits);
      y[j] += tr * y[i];
      for (int k = 0; k <= j; ++k) h[i][k] -= tr * h[j][k];
      for (int k = 0; k < n; ++k) {
        a[i][k] -= t * a[j][k];
        b[k][j] += t * b[k][i];
      }
    }
  };
  for (int i = 1; i < n; ++i) reduce(i, std::min(i - 1, n - 2));

  // Relation threshold relative to the unit-normalized input.
  const long threshold_exp = -static_cast<long>(std::floor(0.8 * digits));
  double max_norm_d = max_norm.get_d();

  for (int iter = 1; iter <= max_iterations; ++iter) {
    result.iterations = iter;
    // Choose m maximizing gamma^m |h_mm|.
    int m = 0;
    BigReal best = zero;
    BigReal gpow = gamma;
    for (int i = 0; i < n - 1; ++i) {
      BigReal v = gpow * h[i][i].abs();
      if (i == 0 || v > best) {
        best = v;
        m = i;
      }
      gpow *= gamma;
    }
    std::swap(y[m], y[m + 1]);
    std::swap(a[m], a[m + 1]);
    std::swap(h[m], h[m + 1]);
    for (int k = 0; k < n; ++k) std::swap(b[k][m], b[k][m + 1]);
    if (m < n - 2) {
      BigReal t0 = (h[m][m] * h[m][m] + h[m][m + 1] * h[m][m + 1]).sqrt();
      if (t0.is_zero()) {
        result.stop_reason = "precision";
        break;
      }
      BigReal t1 = h[m][m] / t0, t2 = h[m][m + 1] / t0;
      for (int i = m; i < n; ++i) {
        BigReal t3 = h[i][m], t4 = h[i][m + 1];
        h[i][m] = t1 * t3 + t2 * t4;
        h[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (int i = m + 1; i < n; ++i) reduce(i, std::min(i - 1, m + 1));

    for (int j = 0; j < n; ++j) {
      if (y[j].abs_below_pow10(threshold_exp)) {
        result.found = true;
        result.relation.resize(n);
        for (int k = 0; k < n; ++k) result.relation[k] = b[k][j];
        result.stop_reason = "relation";
        return result;
      }
    }
    BigReal hmax = zero;
    bool degenerate = false;
    for (int j = 0; j < n - 1; ++j) {
      if (h[j][j].is_zero()) degenerate = true;
      if (h[j][j].abs() > hmax) hmax = h[j][j].abs();
    }
    if (degenerate) {
      result.stop_reason = "precision";
      return result;
    }
    result.norm_lower_bound = 1.0 / hmax.to_double();
    if (result.norm_lower_bound > max_norm_d) {
      result.stop_reason = "bound";
      return result;
    }
  }
  if (*result.stop_reason == '\0') result.stop_reason = "iterations";
  return result;
}

}  // namespace mzv
