#include "mzv/dsh.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mzv {

MultiPoly act_matrix(const MultiPoly& f, const IntMatrix& g) {
  const int n = f.nvars();
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("act_matrix: size mismatch");
  IntMatrix inv = g.inverse();
  std::vector<MultiPoly> subs;
  for (int j = 0; j < n; ++j) {
    MultiPoly s(n);
    for (int i = 0; i < n; ++i) {
      if (inv(i, j) != 0) s += MultiPoly::variable(n, i) * mpq_class(static_cast<long>(inv(i, j)));
    }
    subs.push_back(std::move(s));
  }
  return f.compose(subs);
}

MultiPoly act_permutation(const MultiPoly& f, const Permutation& s) {
  const int n = f.nvars();
  if (s.size() != n) throw std::invalid_argument("act_permutation: size mismatch");
  Permutation inv = s.inverse();
  MultiPoly out(n);
  Exponent e(n);
  // Variable slot j of f receives x_{s^{-1}(j)}.
  for (const auto& [a, c] : f.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (int j = 0; j < n; ++j) e[inv(j + 1) - 1] = a[j];
    out.add_term(e, c);
  }
  return out;
}

MultiPoly act_groupring(const MultiPoly& f, const GroupRingElem& x) {
  MultiPoly out(f.nvars());
  for (const auto& [s, c] : x.terms()) out += act_permutation(f, s) * mpq_class(static_cast<long>(c));
  return out;
}

IntMatrix permutation_matrix(const Permutation& s) {
  IntMatrix m(s.size(), s.size());
  for (int j = 1; j <= s.size(); ++j) m(s(j) - 1, j - 1) = 1;
  return m;
}

IntMatrix iota(const Permutation& s) {
  const int n = s.size() - 1;
  if (n < 1) throw std::invalid_argument("iota: need a permutation of at least 2 points");
  Permutation inv = s.inverse();
  IntMatrix m(n, n);
  for (int i = 1; i <= n; ++i) {
    int src = inv(i);
    if (src <= n) m(i - 1, src - 1) = 1;
    else
      for (int j = 0; j < n; ++j) m(i - 1, j) = -1;
  }
  return m;
}

std::map<Permutation, IntMatrix> build_iota(int n) {
  std::map<Permutation, IntMatrix> out;
  for (const auto& s : all_permutations(n + 1)) out.emplace(s, iota(s));
  return out;
}

Permutation reversal_generator(int n) {
  std::vector<int> v(n + 1);
  for (int i = 1; i <= n - 1; ++i) v[i - 1] = n - i;
  v[n - 1] = n + 1;
  v[n] = n;
  return Permutation(std::move(v));
}

IntMatrix reversal_generator_image(int n) {
  IntMatrix p = upper_ones(n);
  return -(p.inverse() * antidiagonal(n) * p);
}

IntMatrix cycle_image(int n) {
  IntMatrix p = upper_ones(n), w0 = antidiagonal(n);
  return -(w0 * p.inverse() * w0 * p);
}

Permutation end_swap(int n) { return Permutation::transposition(n + 1, 1, n + 1); }

bool iota_is_injective_homomorphism(int n) {
  auto table = build_iota(n);
  std::set<IntMatrix> images;
  for (const auto& [s, ms] : table) {
    images.insert(ms);
    for (const auto& [t, mt] : table) {
      if (table.at(s * t) != ms * mt) return false;
    }
  }
  return images.size() == table.size();
}

bool groupring_identity_check(int n, bool include_swap) {
  const int m = n + 1;
  GroupRingElem one = GroupRingElem::one(m);
  GroupRingElem sh = shuffle_operator(n, 1).extended(m);
  GroupRingElem c(Permutation::cycle(m));
  GroupRingElem t = include_swap ? GroupRingElem(end_swap(n)) : one;
  return one + sh * c == c * (one + sh * t);
}

std::vector<MultiPoly> solve_conditions(const std::vector<MultiPoly>& ansatz, const LinearConditions& conditions,
                                        PivotOrder order) {
  if (ansatz.empty()) return {};
  // Column j holds the coefficients of every condition applied to ansatz[j].
  std::map<std::pair<std::size_t, Exponent>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> columns(ansatz.size());
  for (std::size_t j = 0; j < ansatz.size(); ++j) {
    auto images = conditions(ansatz[j]);
    for (std::size_t c = 0; c < images.size(); ++c) {
      for (const auto& [e, coeff] : images[c].terms()) {
        auto [it, _] = row_of.try_emplace({c, e}, row_of.size());
        columns[j].emplace_back(it->second, coeff);
      }
    }
  }
  RationalMatrix a(row_of.size(), std::vector<mpq_class>(ansatz.size()));
  for (std::size_t j = 0; j < ansatz.size(); ++j)
    for (const auto& [r, coeff] : columns[j]) a[r][j] += coeff;
  std::vector<MultiPoly> out;
  for (const auto& v : nullspace(a, static_cast<int>(ansatz.size()), order)) {
    MultiPoly f(ansatz[0].nvars());
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) f += ansatz[j] * mpq_class(v[j]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<MultiPoly> monomial_basis(int n, int d) {
  std::vector<MultiPoly> out;
  for (const auto& e : monomials_of_degree(n, d)) out.push_back(MultiPoly::monomial(e));
  return out;
}

std::vector<MultiPoly> compute_D(int n, int d, PivotOrder order) {
  if (n < 1 || d < 0) throw std::invalid_argument("compute_D: need n >= 1, d >= 0");
  IntMatrix p_inv = upper_ones(n).inverse();
  std::vector<GroupRingElem> shuffles;
  for (int i = 1; i <= n - 1; ++i) shuffles.push_back(shuffle_operator(n, i));
  auto conditions = [&](const MultiPoly& f) {
    std::vector<MultiPoly> out;
    MultiPoly g = act_matrix(f, p_inv);
    for (const auto& sh : shuffles) {
      out.push_back(act_groupring(f, sh));
      out.push_back(act_groupring(g, sh));
    }
    return out;
  };
  return solve_conditions(monomial_basis(n, d), conditions, order);
}

MultiPoly translation_difference(const MultiPoly& f) {
  const int n = f.nvars(), m = n + 1;
  std::vector<MultiPoly> shifted, plain;
  MultiPoly x1 = MultiPoly::variable(m, 0);
  for (int j = 1; j <= n; ++j) {
    MultiPoly xj = MultiPoly::variable(m, j);
    shifted.push_back(xj - x1);
    plain.push_back(xj);
  }
  return (f.compose(shifted) - f.compose(plain)).divide_by_variable(0);
}

MultiPoly rotate_variables(const MultiPoly& g) {
  const int m = g.nvars();
  std::vector<MultiPoly> subs;
  subs.push_back(MultiPoly::variable(m, m - 1));
  for (int j = 0; j + 1 < m; ++j) subs.push_back(MultiPoly::variable(m, j));
  return g.compose(subs);
}

std::vector<MultiPoly> prop66_kernel(int n, int d, PivotOrder order) {
  if (d % 2 != 0) throw std::invalid_argument("prop66_kernel: degree must be even");
  auto base = compute_D(n, d, order);
  auto conditions = [](const MultiPoly& f) {
    MultiPoly g = translation_difference(f);
    return std::vector<MultiPoly>{g - rotate_variables(g)};
  };
  return solve_conditions(base, conditions, order);
}

bool q_sign_holds(const MultiPoly& f, int d) {
  return act_matrix(f, q_matrix(f.nvars())) == f * mpq_class(d % 2 == 0 ? 1 : -1);
}

namespace {

std::vector<MultiPoly> swap_images(const MultiPoly& h) {
  const int m = h.nvars();
  std::vector<MultiPoly> out;
  for (int a = 1; a < m; ++a) out.push_back(h - act_permutation(h, Permutation::transposition(m, a, a + 1)));
  return out;
}

// Sums of the S_n-orbits of monomials of degree d (one per partition of d).
std::vector<MultiPoly> symmetric_basis(int n, int d) {
  std::set<Exponent> seen;
  std::vector<MultiPoly> out;
  for (const auto& e : monomials_of_degree(n, d)) {
    Exponent key = e;
    std::sort(key.rbegin(), key.rend());
    if (!seen.insert(key).second) continue;
    std::set<Exponent> orbit;
    Exponent x = key;
    std::sort(x.begin(), x.end());
    do {
      orbit.insert(x);
    } while (std::next_permutation(x.begin(), x.end()));
    MultiPoly f(n);
    for (const auto& y : orbit) f.add_term(y, 1);
    out.push_back(std::move(f));
  }
  return out;
}

// (f(x_1 - x_s, ..., x_n - x_s) - f(x_1, ..., x_n)) / x_s in n+1 variables,
// where the subtracted variable sits at position `pivot` and f reads the rest
// in order.
MultiPoly difference_at(const MultiPoly& f, int pivot) {
  const int n = f.nvars(), m = n + 1;
  MultiPoly xs = MultiPoly::variable(m, pivot);
  std::vector<MultiPoly> shifted, plain;
  for (int j = 0; j < m; ++j) {
    if (j == pivot) continue;
    MultiPoly xj = MultiPoly::variable(m, j);
    shifted.push_back(xj - xs);
    plain.push_back(xj);
  }
  return (f.compose(shifted) - f.compose(plain)).divide_by_variable(pivot);
}

bool all_translation_invariant(const std::vector<MultiPoly>& fs) {
  for (const auto& f : fs) {
    if (!diagonal_translation_invariant(f)) return false;
  }
  return true;
}

}  // namespace

LemmaCheck check_symmetric_translation(int n, int d) {
  auto conditions = [](const MultiPoly& f) {
    return std::vector<MultiPoly>{diagonal_derivative(f.times_variable(0).derivative(0))};
  };
  auto sols = solve_conditions(symmetric_basis(n, d), conditions);
  bool constant = true;
  for (const auto& f : sols) constant = constant && f.degree() <= 0;
  return {static_cast<int>(sols.size()), constant};
}

LemmaCheck check_symmetric_difference(int n, int d) {
  auto conditions = [](const MultiPoly& f) { return swap_images(difference_at(f, 0)); };
  auto sols = solve_conditions(monomial_basis(n, d), conditions);
  return {static_cast<int>(sols.size()), all_translation_invariant(sols)};
}

LemmaCheck check_invariant_difference(int n, int d) {
  auto conditions = [n](const MultiPoly& f) { return swap_images(difference_at(f, n)); };
  auto sols = solve_conditions(monomial_basis(n, d), conditions);
  return {static_cast<int>(sols.size()), all_translation_invariant(sols)};
}

LemmaCheck check_functional_equation(int n, int d) {
  auto conditions = [n](const MultiPoly& f) {
    const int m = n + 1;
    MultiPoly x1 = MultiPoly::variable(m, 0), xl = MultiPoly::variable(m, n);
    std::vector<MultiPoly> shifted, head, tail;
    for (int j = 1; j <= n; ++j) {
      shifted.push_back(MultiPoly::variable(m, j) - x1);
      tail.push_back(MultiPoly::variable(m, j));
      head.push_back(MultiPoly::variable(m, j - 1));
    }
    MultiPoly big_f = f.compose(shifted);
    return std::vector<MultiPoly>{xl * (big_f - f.compose(tail)) - x1 * (big_f - f.compose(head))};
  };
  auto sols = solve_conditions(monomial_basis(n, d), conditions);
  bool ok = true;
  for (const auto& f : sols) ok = ok && diagonal_translation_invariant(f.times_variable(n - 1).derivative(n - 1));
  return {static_cast<int>(sols.size()), ok};
}

bool generators_match_iota(int n) {
  const int m = n + 1;
  IntMatrix g0 = permutation_matrix(Permutation::cycle(m));
  IntMatrix g1 = IntMatrix::identity(m);
  for (int j = 0; j < m; ++j) g1(0, j) = -1;
  std::set<IntMatrix> group{IntMatrix::identity(m)};
  std::vector<IntMatrix> frontier{IntMatrix::identity(m)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& x : frontier) {
      for (const auto* g : {&g0, &g1}) {
        IntMatrix y = x * *g;
        if (group.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  std::set<IntMatrix> image;
  for (const auto& [_, mat] : build_iota(m)) image.insert(mat);
  return group == image;
}

}  // namespace mzv
