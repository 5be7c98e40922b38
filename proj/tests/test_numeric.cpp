#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include "mzv/numeric.hpp"
#include "mzv/value_cache.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

BigReal mpfr_constant(int digits, int (*f)(mpfr_ptr, mpfr_rnd_t)) {
  BigReal x(digits);
  f(x.raw(), MPFR_RNDN);
  return x;
}

void check_close(const BigReal& a, const BigReal& b, long exponent) {
  INFO(a.to_string(40), " vs ", b.to_string(40));
  CHECK((a - b).abs_below_pow10(exponent));
}

}  // namespace

TEST_SUITE("numeric") {

TEST_CASE("bigreal basics") {
  BigReal a = BigReal::from_rational(mpq_class(1, 3), 50);
  BigReal b = a * mpq_class(3);
  check_close(b, BigReal(1, 50), -48);
  CHECK(BigReal::from_string("2.4", 30).round() == 2);
  CHECK(BigReal::from_string("-2.6", 30).round() == -3);
  BigReal c = BigReal::from_string("-1.25e-3", 30);
  CHECK(c.sign() == -1);
  CHECK(c.abs_below_pow10(-2));
  CHECK_FALSE(c.abs_below_pow10(-3));
  CHECK(BigReal::from_string(c.exact_string(), 30).identical(c));
}

TEST_CASE("zeta(2) against Machin pi") {
  BigReal pi = oracle::machin_pi(80);
  check_close(pi, mpfr_constant(80, mpfr_const_pi), -75);
  BigReal expected = pi * pi * mpq_class(1, 6);
  check_close(eval_admissible(Index({2}), 60), expected, -55);
}

TEST_CASE("classical values") {
  const int D = 60;
  BigReal pi = mpfr_constant(D, mpfr_const_pi);
  BigReal pi2 = pi * pi;
  BigReal pi4 = pi2 * pi2;
  check_close(eval_admissible(Index({4}), D), pi4 * mpq_class(1, 90), -55);
  // zeta(1,2) = zeta(3), zeta(2,2) = pi^4/120, zeta(1,1,2) = zeta(4)
  check_close(eval_admissible(Index({1, 2}), D), eval_admissible(Index({3}), D), -55);
  check_close(eval_admissible(Index({2, 2}), D), pi4 * mpq_class(1, 120), -55);
  check_close(eval_admissible(Index({1, 1, 2}), D), eval_admissible(Index({4}), D), -55);
  // zeta(3) to 38 digits
  check_close(eval_admissible(Index({3}), D), BigReal::from_string("1.202056903159594285399738161511449990765", D), -38);
  CHECK(eval_admissible(Index(), D).identical(BigReal(1, D)));
  CHECK_THROWS(eval_admissible(Index({2, 1}), D));
}

TEST_CASE("polylogarithms at one half") {
  const int D = 60;
  BigReal log2 = mpfr_constant(D, mpfr_const_log2);
  check_close(polylog_half(Word("B"), D), log2, -55);
  BigReal pi = mpfr_constant(D, mpfr_const_pi);
  BigReal li2 = pi * pi * mpq_class(1, 12) - log2 * log2 * mpq_class(1, 2);
  check_close(polylog_half(Word("AB"), D), li2, -55);
  CHECK_THROWS(polylog_half(Word("BA"), D));
}

TEST_CASE("truncated series oracle") {
  // sum_{m1 < m2} 1/(m1 m2^3), tail beyond N bounded by (1 + log N)/(2 N^2).
  const long N = 100000;
  long double partial = 0, inner = 0;
  for (long m = 1; m <= N; ++m) {
    partial += inner / (static_cast<long double>(m) * m * m);
    inner += 1.0L / m;
  }
  CHECK(static_cast<double>(partial) == doctest::Approx(eval_admissible(Index({1, 3}), 30).to_double()).epsilon(1e-8));
}

TEST_CASE("precision increase changes nothing up to weight 8") {
  for (int w = 2; w <= 8; ++w)
    for (const auto& k : admissible_indices_of_weight(w)) {
      INFO(k.to_string());
      check_close(eval_admissible(k, 60), eval_admissible(k, 80), -55);
    }
}

TEST_CASE("stuffle relations hold numerically") {
  Evaluator ev(60);
  std::vector<Index> adm;
  for (int w = 2; w <= 4; ++w)
    for (const auto& k : admissible_indices_of_weight(w)) adm.push_back(k);
  for (const auto& a : adm)
    for (const auto& b : adm) {
      if (a.weight() + b.weight() > 8) continue;
      BigReal sum(60);
      for (const auto& [k, m] : stuffle(a, b)) sum += ev.zeta(k) * mpq_class(m);
      check_close(ev.zeta(a) * ev.zeta(b), sum, -55);
    }
}

TEST_CASE("evaluator memo, cache and threads") {
  auto path = std::filesystem::temp_directory_path() / "mzv_test_cache.jsonl";
  std::filesystem::remove(path);
  {
    auto cache = std::make_shared<ValueCache>(path);
    Evaluator ev(60, cache);
    BigReal v = ev.zeta(Index({2, 3}));
    CHECK(cache->lookup(Index({2, 3}), 60).has_value());
    CHECK_FALSE(cache->lookup(Index({2, 3}), 61).has_value());
    CHECK(ev.zeta(Index({2, 3})).identical(v));
  }
  {
    auto cache = std::make_shared<ValueCache>(path);
    CHECK(cache->size() == 1);
    Evaluator ev(60, cache);
    CHECK(ev.zeta(Index({2, 3})).identical(eval_admissible(Index({2, 3}), 60)));
  }
  std::filesystem::remove(path);

  Evaluator shared(50);
  std::vector<Index> ks = admissible_indices_of_weight(6);
  std::atomic<int> mismatches = 0;
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&] {
      for (const auto& k : ks)
        if (!shared.zeta(k).identical(eval_admissible(k, 50))) ++mismatches;
    });
  for (auto& th : threads) th.join();
  CHECK(mismatches == 0);
}

TEST_CASE("cache path from the environment") {
  ::setenv("MZV_CACHE_PATH", "/tmp/some_cache.jsonl", 1);
  CHECK(ValueCache::default_path() == std::filesystem::path("/tmp/some_cache.jsonl"));
  ::unsetenv("MZV_CACHE_PATH");
  CHECK(ValueCache::default_path().empty());
}

TEST_CASE("direct sums") {
  CHECK(direct_sum_F(Index({1}), 7) == 0);
  CHECK(direct_sum_F(Index({2}), 3) == mpq_class(5, 2));
  CHECK(direct_sum_natural(Index({2}), 3) == mpq_class(5, 2));
  CHECK(reciprocal_order(3) == std::vector<long>{1, 2, -2, -1});
  CHECK_THROWS(direct_sum_F(Index({1}), 0));
  for (int n = 1; n <= 3; ++n)
    for (int w = n; w <= n + 2; ++w)
      for (const auto& k : indices_of_weight_depth(w, n))
        for (int M : {2, 3, 6}) {
          INFO(k.to_string(), " M=", M);
          CHECK(direct_sum_F(k, M) == oracle::direct_sum_F_brute(k, M));
          CHECK(direct_sum_natural(k, M) == oracle::direct_sum_weighted_brute(k, M));
        }
}

TEST_CASE("extrapolation") {
  BigReal pi = mpfr_constant(40, mpfr_const_pi);
  BigReal z2 = pi * pi * mpq_class(1, 6);
  // sum_{0<|m|<M} 1/m^2 = 2 zeta(2) - O(1/M)
  auto e = extrapolate_direct_sum_F(Index({2}), 2, 10, 40);
  CHECK((e.value - z2 * mpq_class(2)).abs_below_pow10(-8));
  auto f = extrapolate_direct_sum_F(Index({1, 1}), 3, 11, 40);
  CHECK((f.value + z2).abs_below_pow10(-3));
  CHECK_THROWS(extrapolate_direct_sum_F(Index({1}), 3, 2, 40));
}

}
