#include "mzv/series.hpp"

#include <string>

#include "mzv/group_ring.hpp"

namespace mzv {

Scheme parse_scheme(std::string_view name) {
  if (name == "natural") return Scheme::kNatural;
  if (name == "stuffle" || name == "*") return Scheme::kStuffle;
  if (name == "shuffle" || name == "sharp") return Scheme::kShuffle;
  throw std::invalid_argument("unknown scheme: " + std::string(name));
}

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kNatural: return "natural";
    case Scheme::kStuffle: return "stuffle";
    case Scheme::kShuffle: return "shuffle";
  }
  return "?";
}

MzvCombo series_coefficient(Scheme s, const Index& k) {
  switch (s) {
    case Scheme::kNatural: return natural_regularize(k).constant_term();
    case Scheme::kStuffle: return stuffle_regularize(k).constant_term();
    case Scheme::kShuffle: return shuffle_regularize(k).constant_term();
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<Index> indices_up_to(int n, int max_weight) {
  std::vector<Index> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (int w = n; w <= max_weight; ++w) {
    auto batch = indices_of_weight_depth(w, n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

// Index read at the shuffled positions: k'_j = k_{s^{-1}(j)}.
Index permuted(const Index& k, const Permutation& s) {
  Permutation inv = s.inverse();
  std::vector<int> parts(k.depth());
  for (int j = 1; j <= k.depth(); ++j) parts[j - 1] = k[inv(j) - 1];
  return Index(std::move(parts));
}

}  // namespace

SeriesTrunc<MzvCombo> build_series_symbolic(Scheme s, int n, int max_weight) {
  SeriesTrunc<MzvCombo> out{n, max_weight, {}};
  for (const auto& k : indices_up_to(n, max_weight)) out.coefficients.emplace(k, series_coefficient(s, k));
  return out;
}

SeriesTrunc<BigReal> build_series_numeric(Scheme s, int n, int max_weight, Evaluator& ev) {
  SeriesTrunc<BigReal> out{n, max_weight, {}};
  for (const auto& [k, c] : build_series_symbolic(s, n, max_weight).coefficients) out.coefficients.emplace(k, ev.combo(c));
  return out;
}

ShuffleDefect series_shuffle_check(Scheme s, int n, int i, int max_weight, Evaluator& ev) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("series_shuffle_check: need 1 <= i <= n-1");
  auto left = build_series_numeric(s, i, max_weight - (n - i), ev);
  auto right = build_series_numeric(s, n - i, max_weight - i, ev);
  auto full = build_series_numeric(s, n, max_weight, ev);
  auto shuffles = shuffle_permutations(n, i);
  ShuffleDefect out{BigReal(ev.digits()), Index(), 0};
  for (const auto& [k, _] : full.coefficients) {
    BigReal lhs = left.at(k.slice(0, i)) * right.at(k.slice(i, n));
    for (const auto& sigma : shuffles) lhs -= full.at(permuted(k, sigma));
    BigReal defect = lhs.abs();
    if (out.checked == 0 || defect > out.max_defect) {
      out.max_defect = defect;
      out.worst = k;
    }
    ++out.checked;
  }
  return out;
}

int series_shuffle_mismatches(Scheme s, int n, int i, int max_weight) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("series_shuffle_mismatches: need 1 <= i <= n-1");
  auto left = build_series_symbolic(s, i, max_weight - (n - i));
  auto right = build_series_symbolic(s, n - i, max_weight - i);
  auto full = build_series_symbolic(s, n, max_weight);
  auto shuffles = shuffle_permutations(n, i);
  int mismatches = 0;
  for (const auto& [k, _] : full.coefficients) {
    MzvCombo diff = combo_product(left.at(k.slice(0, i)), right.at(k.slice(i, n)));
    for (const auto& sigma : shuffles) diff -= full.at(permuted(k, sigma));
    if (!diff.is_zero()) ++mismatches;
  }
  return mismatches;
}

}  // namespace mzv
