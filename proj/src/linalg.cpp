#include "mzv/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mzv {

namespace {

using IntegerMatrix = std::vector<IntegerVector>;

IntegerMatrix clear_denominators(const RationalMatrix& a, int ncols) {
  IntegerMatrix out;
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != ncols) throw std::invalid_argument("matrix row has wrong length");
    mpz_class l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector r(ncols);
    bool nonzero = false;
    for (int j = 0; j < ncols; ++j) {
      r[j] = row[j].get_num() * (l / row[j].get_den());
      nonzero = nonzero || r[j] != 0;
    }
    if (nonzero) out.push_back(std::move(r));
  }
  return out;
}

// Row echelon form in place; returns pivot columns in elimination order.
std::vector<int> bareiss_echelon(IntegerMatrix& a, const std::vector<int>& columns) {
  std::vector<int> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (int c : columns) {
    if (r == a.size()) break;
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const mpz_class lead = a[i][c];
      for (int j : columns) {
        mpz_class t = a[r][c] * a[i][j] - lead * a[r][j];
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) throw std::logic_error("Bareiss step not exact");
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

IntegerVector primitive(std::vector<mpq_class> v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntegerVector out(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& x : out) {
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  }
  for (auto& x : out) x = sign * x / g;
  return out;
}

}  // namespace

std::vector<IntegerVector> nullspace(const RationalMatrix& a, int ncols, PivotOrder order) {
  IntegerMatrix m = clear_denominators(a, ncols);
  std::vector<int> columns(ncols);
  std::iota(columns.begin(), columns.end(), 0);
  if (order == PivotOrder::kRightToLeft) std::reverse(columns.begin(), columns.end());
  std::vector<int> pivots = bareiss_echelon(m, columns);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<IntegerVector> basis;
  for (int free : columns) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(ncols, 0);
    v[free] = 1;
    // Back substitution, last pivot row first.
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      int c = pivots[r];
      mpq_class s = 0;
      for (int j = 0; j < ncols; ++j) {
        if (j != c && m[r][j] != 0) s += mpq_class(m[r][j]) * v[j];
      }
      v[c] = -s / mpq_class(m[r][c]);
    }
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

int rank(const RationalMatrix& a, int ncols) {
  IntegerMatrix m = clear_denominators(a, ncols);
  std::vector<int> columns(ncols);
  std::iota(columns.begin(), columns.end(), 0);
  return static_cast<int>(bareiss_echelon(m, columns).size());
}

bool same_span(const std::vector<IntegerVector>& a, const std::vector<IntegerVector>& b, int dim) {
  auto to_rational = [](const std::vector<IntegerVector>& vs) {
    RationalMatrix m;
    for (const auto& v : vs) {
      std::vector<mpq_class> row;
      for (const auto& x : v) row.emplace_back(x);
      m.push_back(std::move(row));
    }
    return m;
  };
  RationalMatrix ma = to_rational(a), mb = to_rational(b), both = ma;
  both.insert(both.end(), mb.begin(), mb.end());
  int ra = rank(ma, dim), rb = rank(mb, dim);
  return ra == rb && rank(both, dim) == ra;
}

}  // namespace mzv
