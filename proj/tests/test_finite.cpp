#include <doctest.h>

#include "mzv/finite.hpp"
#include "mzv/numeric.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

MzvCombo z(std::initializer_list<int> k, const mpq_class& c = 1) { return MzvCombo(Index(k), c); }

const std::vector<Index> kTotallyOdd = {{1}, {3}, {1, 1}, {3, 1}, {1, 3}, {1, 1, 1}, {3, 3, 1}};

}  // namespace

TEST_SUITE("finite") {

TEST_CASE("finite real values: examples") {
  CHECK(zeta_F(Index({3})).is_zero());
  CHECK(zeta_F(Index({1})).is_zero());
  CHECK(zeta_F(Index({4})) == z({4}, 2));
  CHECK(zeta_F(Index()) == MzvCombo::one());
  CHECK(zeta_F(Index({1, 1})) == -z({2}));
  CHECK(zeta_F_sharp(Index({3})).is_zero());
  CHECK(zeta_F_sharp(Index()) == MzvCombo::one());
  CHECK(zeta_natural_F(Index({1, 1})).is_zero());
}

TEST_CASE("sign convention selected by the direct sums") {
  Evaluator ev(40);
  for (const Index& k : std::vector<Index>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 1, 1}}) {
    auto e = extrapolate_direct_sum_F(k, 3, 11, 40);
    BigReal trailing = ev.combo(zeta_F(k, SignConvention::kTrailing));
    INFO(k.to_string(), " limit ", e.value.to_string(15), " trailing ", trailing.to_string(15));
    CHECK((e.value - trailing).abs_below_pow10(-3));
  }
  // The inclusive exponent gives the wrong sign pattern at (2,1).
  auto e = extrapolate_direct_sum_F(Index({2, 1}), 3, 11, 40);
  BigReal inclusive = ev.combo(zeta_F(Index({2, 1}), SignConvention::kInclusive));
  CHECK_FALSE((e.value - inclusive).abs_below_pow10(-1));
}

TEST_CASE("surjection-averaged values in depth two") {
  for (int w = 2; w <= 8; ++w)
    for (const auto& k : indices_of_weight_depth(w, 2)) {
      INFO(k.to_string());
      CHECK(zeta_natural_F(k) == zeta_F(k) + zeta_F(Index({w})) * mpq_class(1, 2));
    }
}

TEST_CASE("totally odd surjection-averaged values vanish") {
  Evaluator ev(60);
  for (int w = 1; w <= 9; ++w)
    for (int n = 1; n <= 3; ++n)
      for (const auto& k : indices_of_weight_depth(w, n)) {
        if (!k.totally_odd()) continue;
        INFO(k.to_string());
        CHECK(ev.combo(zeta_natural_F(k)).abs_below_pow10(-40));
      }
}

TEST_CASE("surjection-averaged values match the weighted direct sums") {
  Evaluator ev(40);
  for (int w = 1; w <= 5; ++w)
    for (int n = 1; n <= 2; ++n)
      for (const auto& k : indices_of_weight_depth(w, n)) {
        auto e = extrapolate_direct_sum_natural(k, 3, 10, 40);
        BigReal symbolic = ev.combo(zeta_natural_F(k));
        INFO(k.to_string(), " ", e.value.to_string(15), " vs ", symbolic.to_string(15));
        CHECK((e.value - symbolic).abs_below_pow10(-3));
      }
}

TEST_CASE("totally odd weighted direct sums vanish exactly") {
  for (const auto& k : kTotallyOdd)
    for (int M = 1; M <= 12; ++M) CHECK(direct_sum_natural(k, M) == 0);
}

TEST_CASE("product rule for the shuffle-type finite values") {
  Evaluator ev(60);
  std::vector<Index> ks, kps;
  for (int w = 0; w <= 4; ++w)
    for (const auto& k : indices_of_weight(w)) {
      ks.push_back(k);
      bool big = true;
      for (int p : k.parts()) big = big && p >= 2;
      if (big) kps.push_back(k);
    }
  for (const auto& k : ks)
    for (const auto& kp : kps) {
      BigReal rhs(60);
      for (const auto& [kk, m] : stuffle(k, kp)) rhs += ev.combo(zeta_F_sharp(kk)) * mpq_class(m);
      BigReal lhs = ev.combo(zeta_F_sharp(k)) * ev.combo(zeta_F(kp));
      INFO(k.to_string(), " ", kp.to_string());
      CHECK((lhs - rhs).abs_below_pow10(-40));
    }
}

TEST_CASE("primality and inverses") {
  CHECK(is_prime(2));
  CHECK(is_prime(199));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(-1, 7) == 6);
}

TEST_CASE("harmonic sums mod p") {
  CHECK(zeta_A_component(Index({1}), 7).residue == 0);
  CHECK(zeta_A_component(Index({1, 1}), 7).residue == 0);
  CHECK_THROWS(zeta_A_component(Index({1}), 9));
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    CHECK(zeta_A_component(Index({1}), p).residue == 0);
    std::int64_t h1 = zeta_A_component(Index({1}), p).residue;
    std::int64_t h2 = zeta_A_component(Index({2}), p).residue;
    std::int64_t h11 = zeta_A_component(Index({1, 1}), p).residue;
    CHECK((2 * h11) % p == ((h1 * h1 - h2) % p + p) % p);
    for (int w = 1; w <= 5; ++w)
      for (int n = 1; n <= 3; ++n)
        for (const auto& k : indices_of_weight_depth(w, n)) {
          INFO(k.to_string(), " p=", p);
          CHECK(zeta_A_component(k, p).residue == oracle::harmonic_mod_brute(k, p));
        }
  }
}

TEST_CASE("weighted sums mod p") {
  for (std::int64_t p : {5, 7, 11, 13}) CHECK(zeta_natural_A_component(Index({1, 1}), p).residue == 0);
  // k = (2), p = 7: 2 (1 + 1/4 + 1/9) with 1/4 = 2, 1/9 = 1/2 = 4 mod 7.
  CHECK(zeta_natural_A_component(Index({2}), 7).residue == (2 * (1 + 2 + 4)) % 7);
  CHECK(zeta_natural_A_component(Index({3}), 101).residue == 0);
  CHECK_THROWS(zeta_natural_A_component(Index({1, 1, 1}), 3));
  CHECK_THROWS(zeta_natural_A_component(Index({1}), 15));
  for (std::int64_t p : {5, 7, 11, 13, 17}) {
    for (int w = 1; w <= 5; ++w)
      for (int n = 1; n <= 3; ++n)
        for (const auto& k : indices_of_weight_depth(w, n)) {
          if (p <= n) continue;
          INFO(k.to_string(), " p=", p);
          CHECK(zeta_natural_A_component(k, p).residue == oracle::weighted_mod_brute(k, p));
        }
  }
  for (const auto& k : kTotallyOdd)
    for (std::int64_t p = 5; p <= 60; ++p)
      if (is_prime(p)) CHECK(zeta_natural_A_component(k, p).residue == 0);
}

}
