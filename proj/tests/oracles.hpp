#pragma once

// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include <gmpxx.h>

#include "mzv/bigreal.hpp"
#include "mzv/index.hpp"

namespace oracle {

// All maps {1..n} -> {1..m} (as 1-based image vectors).
inline void for_each_map(int n, int m, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> img(n, 1);
  while (true) {
    f(img);
    int i = n - 1;
    while (i >= 0 && img[i] == m) img[i--] = 1;
    if (i < 0) return;
    ++img[i];
  }
}

inline bool monotone_surjective(const std::vector<int>& img, int m) {
  std::vector<bool> hit(m + 1, false);
  for (std::size_t i = 0; i < img.size(); ++i) {
    hit[img[i]] = true;
    if (i > 0 && img[i] < img[i - 1]) return false;
  }
  for (int j = 1; j <= m; ++j)
    if (!hit[j]) return false;
  return true;
}

inline std::int64_t count_monotone_surjections(int n, int m) {
  std::int64_t count = 0;
  for_each_map(n, m, [&](const std::vector<int>& img) { count += monotone_surjective(img, m); });
  return count;
}

// Number of permutations g of {1..n} with phi(g(i)) = phi(i) for all i.
inline std::int64_t count_stabilizer(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  std::vector<int> g(n);
  for (int i = 0; i < n; ++i) g[i] = i;
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = img[g[i]] == img[i];
    count += ok;
  } while (std::next_permutation(g.begin(), g.end()));
  return count;
}

// Fraction of a small sphere around x inside {1/t_1 > 1/t_2 > 1/t_3}: the
// region is locally cut out by the tied constraints, with normals
// grad(1/t_i - 1/t_{i+1}) = -e_i/x_i^2 + e_{i+1}/x_{i+1}^2.
inline double cone_weight_geometric3(const std::array<std::int64_t, 3>& x) {
  std::vector<std::array<double, 3>> normals;
  for (int i = 0; i < 2; ++i) {
    mpq_class a = mpq_class(1) / x[i], b = mpq_class(1) / x[i + 1];
    if (a < b) return 0.0;
    if (a == b) {
      std::array<double, 3> nv{0, 0, 0};
      nv[i] = -1.0 / (double(x[i]) * double(x[i]));
      nv[i + 1] = 1.0 / (double(x[i + 1]) * double(x[i + 1]));
      normals.push_back(nv);
    }
  }
  if (normals.empty()) return 1.0;
  if (normals.size() == 1) return 0.5;
  auto dot = [](const std::array<double, 3>& u, const std::array<double, 3>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  };
  double c = dot(normals[0], normals[1]) / std::sqrt(dot(normals[0], normals[0]) * dot(normals[1], normals[1]));
  double theta = std::acos(c);
  return (std::numbers::pi - theta) / (2 * std::numbers::pi);
}

// Nonzero integers with |m| < M.
inline std::vector<long> nonzero_range(long M) {
  std::vector<long> out;
  for (long m = -(M - 1); m <= M - 1; ++m)
    if (m != 0) out.push_back(m);
  return out;
}

inline void for_each_tuple(const std::vector<long>& values, int n,
                           const std::function<void(const std::vector<long>&)>& f) {
  std::vector<std::size_t> pos(n, 0);
  std::vector<long> t(n);
  if (values.empty()) return;
  while (true) {
    for (int i = 0; i < n; ++i) t[i] = values[pos[i]];
    f(t);
    int i = n - 1;
    while (i >= 0 && pos[i] + 1 == values.size()) pos[i--] = 0;
    if (i < 0) return;
    ++pos[i];
  }
}

inline mpq_class monomial_value(const mzv::Index& k, const std::vector<long>& m) {
  mpq_class v = 1;
  for (int i = 0; i < k.depth(); ++i) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), mpz_class(m[i]).get_mpz_t(), k[i]);
    v /= mpq_class(p);
  }
  return v;
}

// Enumerates every tuple; keeps those with strictly decreasing 1/m.
inline mpq_class direct_sum_F_brute(const mzv::Index& k, long M) {
  mpq_class total = 0;
  for_each_tuple(nonzero_range(M), k.depth(), [&](const std::vector<long>& m) {
    for (int i = 0; i + 1 < k.depth(); ++i)
      if (!(mpq_class(1) / m[i] > mpq_class(1) / m[i + 1])) return;
    total += monomial_value(k, m);
  });
  return total;
}

inline mpq_class direct_sum_weighted_brute(const mzv::Index& k, long M) {
  mpq_class total = 0;
  for_each_tuple(nonzero_range(M), k.depth(), [&](const std::vector<long>& m) {
    std::vector<std::int64_t> pt(m.begin(), m.end());
    mpq_class w = mzv::cone_weight(pt);
    if (w != 0) total += w * monomial_value(k, m);
  });
  return total;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  for (std::int64_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

inline std::int64_t power_mod(std::int64_t a, int e, std::int64_t p) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = r * a % p;
  return r;
}

// One-sided harmonic sum mod p by enumerating increasing tuples.
inline std::int64_t harmonic_mod_brute(const mzv::Index& k, std::int64_t p) {
  std::int64_t total = 0;
  std::vector<long> values;
  for (long m = 1; m < p; ++m) values.push_back(m);
  for_each_tuple(values, k.depth(), [&](const std::vector<long>& m) {
    for (int i = 0; i + 1 < k.depth(); ++i)
      if (!(m[i] < m[i + 1])) return;
    std::int64_t term = 1;
    for (int i = 0; i < k.depth(); ++i) term = term * power_mod(inverse_mod(m[i], p), k[i], p) % p;
    total = (total + term) % p;
  });
  return total;
}

// Cone-weighted symmetric sum mod p over 0 < |m_i| < p/2.
inline std::int64_t weighted_mod_brute(const mzv::Index& k, std::int64_t p) {
  std::int64_t total = 0;
  for_each_tuple(nonzero_range((p + 1) / 2), k.depth(), [&](const std::vector<long>& m) {
    std::vector<std::int64_t> pt(m.begin(), m.end());
    mpq_class w = mzv::cone_weight(pt);
    if (w == 0) return;
    std::int64_t term = (w.get_num().get_si() % p + p) % p * inverse_mod(w.get_den().get_si(), p) % p;
    for (int i = 0; i < k.depth(); ++i) term = term * power_mod(inverse_mod(m[i], p), k[i], p) % p;
    total = (total + term) % p;
  });
  return total;
}

// pi = 16 arctan(1/5) - 4 arctan(1/239).
inline mzv::BigReal machin_pi(int digits) {
  auto arctan_inv = [digits](long x) {
    mzv::BigReal sum(digits);
    mpz_class xpow = x, x2 = mpz_class(x) * x;
    for (long j = 0;; ++j) {
      mpq_class term(1, mpz_class(2 * j + 1) * xpow);
      if (mpz_sizeinbase(xpow.get_mpz_t(), 10) > static_cast<std::size_t>(digits + 20)) break;
      mzv::BigReal t = mzv::BigReal::from_rational(j % 2 == 0 ? term : mpq_class(-term), digits);
      sum += t;
      xpow *= x2;
    }
    return sum;
  };
  return arctan_inv(5) * mpq_class(16) - arctan_inv(239) * mpq_class(4);
}

}  // namespace oracle
