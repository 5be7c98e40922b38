#include <doctest.h>

#include <cmath>

#include "mzv/numeric.hpp"
#include "mzv/regularization.hpp"

using namespace mzv;

namespace {

MzvCombo z(std::initializer_list<int> k, const mpq_class& c = 1) { return MzvCombo(Index(k), c); }

RegPoly tpoly(std::initializer_list<std::pair<int, MzvCombo>> terms) {
  RegPoly p;
  for (const auto& [d, c] : terms) p.add(d, c);
  return p;
}

std::vector<Word> b_words_of_length(int len) {
  std::vector<Word> out;
  if (len == 0) return {Word()};
  for (int mask = 0; mask < (1 << (len - 1)); ++mask) {
    std::string s;
    for (int i = 0; i < len - 1; ++i) s += (mask >> i & 1) ? 'B' : 'A';
    out.emplace_back(s + "B");
  }
  return out;
}

std::vector<Word> all_words_of_length(int len) {
  std::vector<Word> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::string s;
    for (int i = 0; i < len; ++i) s += (mask >> i & 1) ? 'B' : 'A';
    out.emplace_back(s);
  }
  return out;
}

}  // namespace

TEST_SUITE("regularization") {

TEST_CASE("combo arithmetic") {
  MzvCombo a = z({2}) + z({3}, mpq_class(1, 2));
  CHECK(a.coefficient(Index({3})) == mpq_class(1, 2));
  CHECK((a - a).is_zero());
  CHECK(a.max_weight() == 3);
  CHECK_FALSE(a.homogeneous(2));
  CHECK_THROWS(MzvCombo(Index({2, 1})));
  // zeta(2)^2 = 2 zeta(2,2) + zeta(4)
  CHECK(combo_product(z({2}), z({2})) == z({2, 2}, 2) + z({4}));
  CHECK(combo_product(MzvCombo::one(), z({3})) == z({3}));
}

TEST_CASE("stuffle regularization examples") {
  CHECK(stuffle_regularize(Index({1})) == RegPoly::t_power(1));
  CHECK(stuffle_regularize(Index({2, 3})) == RegPoly(z({2, 3})));
  CHECK(stuffle_regularize(Index()) == RegPoly(MzvCombo::one()));
  CHECK(stuffle_regularize(Index({2, 1})) == tpoly({{1, z({2})}, {0, -z({1, 2}) - z({3})}}));
  CHECK(stuffle_regularize(Index({1, 1})) ==
        tpoly({{2, MzvCombo::one() * mpq_class(1, 2)}, {0, z({2}, mpq_class(-1, 2))}}));
}

TEST_CASE("shuffle regularization examples") {
  CHECK(shuffle_regularize(Word("B")) == RegPoly::t_power(1));
  CHECK(shuffle_regularize(Word("BB")) == tpoly({{2, MzvCombo::one() * mpq_class(1, 2)}}));
  CHECK(shuffle_regularize(Word("BAB")) == tpoly({{1, z({2})}, {0, z({1, 2}, -2)}}));
  CHECK(shuffle_regularize(Index({2, 3})) == RegPoly(z({2, 3})));
  CHECK_THROWS(shuffle_regularize(Word("ABA")));
}

TEST_CASE("regularizations are homogeneous and fix admissible indices") {
  for (int w = 1; w <= 8; ++w)
    for (const auto& k : indices_of_weight(w)) {
      for (const RegPoly& p : {stuffle_regularize(k), shuffle_regularize(k)})
        for (const auto& [d, c] : p.coefficients()) {
          INFO(k.to_string(), " T^", d);
          CHECK(c.homogeneous(w - d));
        }
      if (k.admissible()) {
        CHECK(stuffle_regularize(k) == RegPoly(MzvCombo(k)));
        CHECK(shuffle_regularize(k) == RegPoly(MzvCombo(k)));
      }
    }
}

TEST_CASE("stuffle regularization respects the stuffle product") {
  std::vector<Index> all;
  for (int w = 1; w <= 5; ++w)
    for (const auto& k : indices_of_weight(w)) all.push_back(k);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.weight() + b.weight() > 6) continue;
      RegPoly sum;
      for (const auto& [k, m] : stuffle(a, b)) sum += stuffle_regularize(k) * mpq_class(m);
      INFO(a.to_string(), " * ", b.to_string());
      CHECK(stuffle_regularize(a) * stuffle_regularize(b) == sum);
    }
}

TEST_CASE("shuffle regularization respects the shuffle product") {
  Evaluator ev(40);
  for (int lu = 1; lu <= 5; ++lu)
    for (int lv = 1; lu + lv <= 7; ++lv)
      for (const auto& u : b_words_of_length(lu))
        for (const auto& v : b_words_of_length(lv)) {
          if (u > v) continue;
          RegPoly sum;
          for (const auto& [w, m] : shuffle_words(u, v)) {
            if (!w.ends_with_b()) continue;
            sum += shuffle_regularize(w) * mpq_class(m);
          }
          RegPoly diff = shuffle_regularize(u) * shuffle_regularize(v) - sum;
          INFO(u.letters(), " sh ", v.letters());
          for (const auto& [d, value] : ev.regpoly(diff)) CHECK(value.abs_below_pow10(-35));
        }
}

TEST_CASE("associator coefficients") {
  CHECK(associator_coefficient(Word("A")).is_zero());
  CHECK(associator_coefficient(Word("B")).is_zero());
  CHECK(associator_coefficient(Word("AB")) == z({2}));
  CHECK(associator_coefficient(Word("BA")) == -z({2}));
  CHECK(associator_coefficient(Word("AAB")) == z({3}));
  CHECK(associator_coefficient(Word()) == MzvCombo::one());
}

TEST_CASE("associator coefficients form a shuffle character") {
  Evaluator ev(40);
  for (int lu = 1; lu <= 3; ++lu)
    for (int lv = 1; lu + lv <= 6 && lv <= 3; ++lv)
      for (const auto& u : all_words_of_length(lu))
        for (const auto& v : all_words_of_length(lv)) {
          MzvCombo sum;
          for (const auto& [w, m] : shuffle_words(u, v)) sum += associator_coefficient(w) * mpq_class(m);
          MzvCombo diff = combo_product(associator_coefficient(u), associator_coefficient(v)) - sum;
          INFO(u.letters(), " sh ", v.letters());
          CHECK(ev.combo(diff).abs_below_pow10(-35));
        }
}

TEST_CASE("natural regularization") {
  CHECK(natural_regularize(Index({1, 1})) == tpoly({{2, MzvCombo::one() * mpq_class(1, 2)}}));
  CHECK(natural_regularize(Index({3})) == RegPoly(z({3})));
  // (2,3): zeta(2,3) + zeta(5)/2
  CHECK(natural_regularize(Index({2, 3})) == RegPoly(z({2, 3}) + z({5}, mpq_class(1, 2))));
}

TEST_CASE("regularized values agree with truncated sums") {
  // sum_{m1 < m2 < M} 1/(m1^2 m2) = zeta*(2,1) at T = log M + gamma, up to o(1).
  Evaluator ev(30);
  RegPoly p = stuffle_regularize(Index({2, 1}));
  long double partial = 0, inner = 0;
  const long M = 200000;
  for (long m = 1; m < M; ++m) {
    partial += inner / m;
    inner += 1.0L / (static_cast<long double>(m) * m);
  }
  double T = std::log(static_cast<double>(M)) + 0.57721566490153286;
  auto coeffs = ev.regpoly(p);
  double value = coeffs.at(0).to_double() + coeffs.at(1).to_double() * T;
  CHECK(static_cast<double>(partial) == doctest::Approx(value).epsilon(1e-4));
}

}
