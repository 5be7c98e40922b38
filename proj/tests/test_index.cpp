#include <doctest.h>

#include <array>
#include <cmath>

#include "mzv/index.hpp"
#include "oracles.hpp"

using namespace mzv;

TEST_SUITE("index") {

TEST_CASE("index basics") {
  Index k{1, 2, 3};
  CHECK(k.weight() == 6);
  CHECK(k.depth() == 3);
  CHECK(k.admissible());
  CHECK_FALSE(Index({2, 1}).admissible());
  CHECK(Index().admissible());
  CHECK(Index({3, 1, 5}).totally_odd());
  CHECK_FALSE(Index({3, 2}).totally_odd());
  CHECK(k.reversed() == Index({3, 2, 1}));
  CHECK(Index::parse(" ( 1, 2 ,3 ) ") == k);
  CHECK(Index::parse("()") == Index());
  CHECK(k.to_string() == "(1,2,3)");
  CHECK_THROWS(Index::parse("(1,0)"));
  CHECK_THROWS(Index::parse("1,2"));
}

TEST_CASE("surjection counts match brute force") {
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= n; ++m) {
      auto all = enumerate_surjections(n, m);
      CHECK(mpz_class(all.size()) == binomial(n - 1, m - 1));
      if (n <= 6) CHECK(static_cast<std::int64_t>(all.size()) == oracle::count_monotone_surjections(n, m));
    }
  CHECK_THROWS(enumerate_surjections(2, 3));
  CHECK_THROWS(enumerate_surjections(3, 0));
  CHECK(enumerate_all_surjections(4).size() == 8);
}

TEST_CASE("stabilizer order matches brute force") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& phi : enumerate_all_surjections(n)) {
      auto img = phi.images();
      CHECK(phi.stabilizer_order() == oracle::count_stabilizer(img));
    }
}

TEST_CASE("push_index") {
  OrderedSurjection phi({2, 1});
  CHECK(phi(1) == 1);
  CHECK(phi(3) == 2);
  CHECK(push_index(phi, Index({1, 2, 3})) == Index({3, 3}));
  CHECK(push_index(OrderedSurjection({3}), Index({1, 1, 1})) == Index({3}));
  CHECK_THROWS(push_index(phi, Index({1, 2})));
}

TEST_CASE("stuffle examples") {
  Multiset<Index> expected{{Index({1, 2}), 1}, {Index({2, 1}), 1}, {Index({3}), 1}};
  CHECK(stuffle(Index({1}), Index({2})) == expected);
  CHECK(stuffle(Index(), Index({2, 3})) == Multiset<Index>{{Index({2, 3}), 1}});
  auto s = stuffle(Index({1}), Index({1}));
  CHECK(s == Multiset<Index>{{Index({1, 1}), 2}, {Index({2}), 1}});
}

// Number of quasi-shuffles of lengths p and q: sum over j collapsed pairs of
// (p+q-j)! / (j! (p-j)! (q-j)!).
static mpz_class quasi_shuffle_count(int p, int q) {
  mpz_class total = 0;
  for (int j = 0; j <= std::min(p, q); ++j)
    total += factorial(p + q - j) / (factorial(j) * factorial(p - j) * factorial(q - j));
  return total;
}

TEST_CASE("stuffle is commutative and associative up to weight 5") {
  std::vector<Index> all;
  for (int w = 0; w <= 5; ++w)
    for (const auto& k : indices_of_weight(w)) all.push_back(k);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.weight() + b.weight() > 5) continue;
      auto ab = stuffle(a, b);
      CHECK(ab == stuffle(b, a));
      CHECK(mpz_class(multiset_size(ab)) == quasi_shuffle_count(a.depth(), b.depth()));
      for (const auto& [k, m] : ab) CHECK(k.weight() == a.weight() + b.weight());
      for (const auto& c : all) {
        if (a.weight() + b.weight() + c.weight() > 5) continue;
        Multiset<Index> left, right;
        for (const auto& [x, mx] : ab)
          for (const auto& [y, my] : stuffle(x, c)) multiset_add(left, y, mx * my);
        for (const auto& [x, mx] : stuffle(b, c))
          for (const auto& [y, my] : stuffle(a, x)) multiset_add(right, y, mx * my);
        CHECK(left == right);
      }
    }
}

static std::vector<Word> words_of_length(int len) {
  std::vector<Word> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::string s;
    for (int i = 0; i < len; ++i) s += (mask >> i & 1) ? 'B' : 'A';
    out.emplace_back(s);
  }
  return out;
}

TEST_CASE("shuffle cardinality is binomial") {
  CHECK(shuffle_words(Word("B"), Word("AB")) ==
        Multiset<Word>{{Word("BAB"), 1}, {Word("ABB"), 2}});
  for (int lu = 0; lu <= 5; ++lu)
    for (int lv = 0; lu + lv <= 10 && lv <= 5; ++lv) {
      auto us = words_of_length(lu);
      auto vs = words_of_length(lv);
      const Word& u = us[us.size() / 2];
      const Word& v = vs[vs.size() - 1];
      CHECK(mpz_class(multiset_size(shuffle_words(u, v))) == binomial(lu + lv, lu));
    }
  for (int lu = 0; lu <= 3; ++lu)
    for (int lv = 0; lv <= 3; ++lv)
      for (const auto& u : words_of_length(lu))
        for (const auto& v : words_of_length(lv)) {
          auto s = shuffle_words(u, v);
          CHECK(mpz_class(multiset_size(s)) == binomial(lu + lv, lu));
          CHECK(s == shuffle_words(v, u));
        }
}

TEST_CASE("word conversion") {
  CHECK(word_of_index(Index({1, 2})).letters() == "ABB");
  CHECK(word_of_index(Index({3})).letters() == "AAB");
  CHECK(word_of_index(Index({2, 1})).letters() == "BAB");
  CHECK(word_of_index(Index()).letters().empty());
  CHECK_THROWS(index_of_word(Word("ABA")));
  for (int w = 0; w <= 8; ++w)
    for (const auto& k : indices_of_weight(w)) {
      Word word = word_of_index(k);
      CHECK(index_of_word(word) == k);
      CHECK(static_cast<int>(word.size()) == w);
      CHECK(word.admissible() == k.admissible());
    }
}

TEST_CASE("cone weight closed form") {
  CHECK(cone_weight({1, 2}) == 1);
  CHECK(cone_weight({3, 7}) == 1);
  CHECK(cone_weight({4, 4}) == mpq_class(1, 2));
  CHECK(cone_weight({2, 1}) == 0);
  CHECK(cone_weight({5, 5, 5}) == mpq_class(1, 6));
  CHECK(cone_weight({-2, -2}) == mpq_class(1, 2));
  CHECK(cone_weight({3, -1}) == 1);
  CHECK(cone_weight({-1, 3}) == 0);
  CHECK_THROWS(cone_weight({1, 0}));
}

TEST_CASE("cone weight matches the geometric oracle at n = 3") {
  int count = 0;
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = -3; c <= 3; ++c) {
        if (a == 0 || b == 0 || c == 0) continue;
        std::array<std::int64_t, 3> x{a, b, c};
        CHECK(cone_weight(x).get_d() == doctest::Approx(oracle::cone_weight_geometric3(x)).epsilon(1e-12));
        ++count;
      }
  CHECK(count == 216);
}

TEST_CASE("surjection expansion of the weighted sum") {
  // sum_m w(m) m^{-k} over |m| < M equals sum_phi (1/#G_phi) * strict sum of phi_* k.
  for (int n = 1; n <= 3; ++n)
    for (int w = n; w <= n + 2; ++w)
      for (const auto& k : indices_of_weight_depth(w, n))
        for (int M : {2, 5, 11, 20}) {
          mpq_class expansion = 0;
          for (const auto& phi : enumerate_all_surjections(n))
            expansion += oracle::direct_sum_F_brute(push_index(phi, k), M) / mpq_class(phi.stabilizer_order());
          CHECK(expansion == oracle::direct_sum_weighted_brute(k, M));
        }
}

TEST_CASE("splitting identity for stuffles") {
  using Pair = std::pair<Index, Index>;
  std::vector<Index> all;
  for (int w = 0; w <= 4; ++w)
    for (const auto& k : indices_of_weight(w)) all.push_back(k);
  for (const auto& k : all)
    for (const auto& kp : all) {
      Multiset<Pair> left, right;
      for (const auto& [kk, m] : stuffle(k, kp))
        for (const auto& pr : split_pairs(kk)) multiset_add(left, pr, m);
      for (const auto& [a1, a2] : split_pairs(k))
        for (const auto& [b1, b2] : split_pairs(kp))
          for (const auto& [c1, m1] : stuffle(a1, b1))
            for (const auto& [c2, m2] : stuffle(a2, b2)) multiset_add(right, Pair(c1, c2), m1 * m2);
      CHECK(left == right);
    }
}

TEST_CASE("split pairs reverse the tail") {
  auto pairs = split_pairs(Index({1, 2, 3}));
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0] == std::pair(Index(), Index({3, 2, 1})));
  CHECK(pairs[1] == std::pair(Index({1}), Index({3, 2})));
  CHECK(pairs[3] == std::pair(Index({1, 2, 3}), Index()));
}

}
