#include "mzv/numeric.hpp"

#include <cmath>
#include <stdexcept>

#include "mzv/chain_sums.hpp"

namespace mzv {

namespace {

// Smallest N with 2^{-N} (1 + ln N)^{w} * 4 < 10^{-(digits + 10)}; bounds the
// tail of the outer sum in polylog_half.
long truncation_point(int digits, int weight) {
  const double target_bits = (digits + 10) * 3.3219280948873623 + 2.0;
  long n = static_cast<long>(target_bits);
  while (static_cast<double>(n) - weight * std::log2(1.0 + std::log(static_cast<double>(n))) < target_bits) ++n;
  return n;
}

// RAII vector of mpfr_t for the inner loops.
class MpfrArray {
 public:
  MpfrArray(std::size_t size, mpfr_prec_t bits) : data_(size) {
    for (auto& x : data_) mpfr_init2(&x, bits), mpfr_set_zero(&x, 1);
  }
  ~MpfrArray() {
    for (auto& x : data_) mpfr_clear(&x);
  }
  MpfrArray(const MpfrArray&) = delete;
  MpfrArray& operator=(const MpfrArray&) = delete;
  mpfr_ptr operator[](std::size_t i) { return &data_[i]; }

 private:
  std::vector<__mpfr_struct> data_;
};

Word dual(const Word& w) {
  std::string out(w.letters().rbegin(), w.letters().rend());
  for (char& c : out) c = (c == 'A') ? 'B' : 'A';
  return Word(std::move(out));
}

}  // namespace

BigReal polylog_half(const Word& w, int digits) {
  if (w.empty()) return BigReal(1, digits);
  if (!w.ends_with_b()) throw std::invalid_argument("polylog_half: word must end with B");
  std::vector<int> exps;  // a_1 (outermost) .. a_r
  int run = 0;
  for (char c : w.letters()) {
    if (c == 'A') {
      ++run;
    } else {
      exps.push_back(run + 1);
      run = 0;
    }
  }
  const mpfr_prec_t bits = digits_to_bits(digits);
  const long N = truncation_point(digits, static_cast<int>(w.size()));
  const int r = static_cast<int>(exps.size());

  // g(n) for the current level, n = 1..N; start with the innermost level.
  MpfrArray g(N + 1, bits);
  for (long n = 1; n <= N; ++n) {
    mpfr_set_ui(g[n], 1, MPFR_RNDN);
    for (int e = 0; e < exps[r - 1]; ++e) mpfr_div_ui(g[n], g[n], static_cast<unsigned long>(n), MPFR_RNDN);
  }
  mpfr_t cum, old;
  mpfr_init2(cum, bits);
  mpfr_init2(old, bits);
  for (int level = r - 2; level >= 0; --level) {
    mpfr_set_zero(cum, 1);
    for (long n = 1; n <= N; ++n) {
      // new g(n) = n^{-a} * sum_{m < n} g(m)
      mpfr_set(old, g[n], MPFR_RNDN);
      mpfr_set(g[n], cum, MPFR_RNDN);
      for (int e = 0; e < exps[level]; ++e) mpfr_div_ui(g[n], g[n], static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_add(cum, cum, old, MPFR_RNDN);
    }
  }
  BigReal out(digits);
  for (long n = N; n >= 1; --n) {
    mpfr_div_2ui(g[n], g[n], static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_add(out.raw(), out.raw(), g[n], MPFR_RNDN);
  }
  mpfr_clear(cum);
  mpfr_clear(old);
  // Truncation tail plus accumulated rounding (N * (r + max a) operations).
  double value = std::fabs(out.to_double());
  double ops = static_cast<double>(N) * (r + static_cast<int>(w.size()) + 2);
  out.set_error_bound(std::pow(10.0, -(digits + 10)) + ops * std::ldexp(value + 1.0, -static_cast<int>(bits) + 1));
  return out;
}

BigReal eval_admissible(const Index& k, int digits) {
  if (!k.admissible()) throw std::invalid_argument("eval_admissible: index not admissible: " + k.to_string());
  if (k.empty()) return BigReal(1, digits);
  const Word w = word_of_index(k);
  const std::string& letters = w.letters();
  BigReal total(digits);
  for (std::size_t j = 0; j <= letters.size(); ++j) {
    Word prefix(letters.substr(0, j));
    Word suffix(letters.substr(j));
    total += polylog_half(dual(prefix), digits) * polylog_half(suffix, digits);
  }
  return total;
}

Evaluator::Evaluator(int digits, std::shared_ptr<ValueCache> cache) : digits_(digits), cache_(std::move(cache)) {}

BigReal Evaluator::zeta(const Index& k) {
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
  }
  BigReal value(digits_);
  std::optional<std::string> cached = cache_ ? cache_->lookup(k, digits_) : std::nullopt;
  if (cached) {
    value = BigReal::from_string(*cached, digits_);
    value.set_error_bound(std::pow(10.0, -(digits_ - 5)));
  } else {
    value = eval_admissible(k, digits_);
    if (cache_) cache_->store(k, digits_, value.exact_string());
  }
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(k, std::move(value)).first->second;
}

BigReal Evaluator::combo(const MzvCombo& c) {
  BigReal total(digits_);
  for (const auto& [k, coeff] : c.terms()) total += zeta(k) * coeff;
  return total;
}

std::map<int, BigReal> Evaluator::regpoly(const RegPoly& p) {
  std::map<int, BigReal> out;
  for (const auto& [d, c] : p.coefficients()) out.emplace(d, combo(c));
  return out;
}

BigReal eval_combo(const MzvCombo& c, int digits) {
  Evaluator ev(digits);
  return ev.combo(c);
}

std::vector<long> reciprocal_order(long M) {
  std::vector<long> out;
  for (long m = 1; m < M; ++m) out.push_back(m);
  for (long m = M - 1; m >= 1; --m) out.push_back(-m);
  return out;
}

namespace {

// inverse[t][e] = 1 / order[t]^e for e <= max_exponent.
std::vector<std::vector<mpq_class>> reciprocal_powers(const std::vector<long>& order, int max_exponent) {
  std::vector<std::vector<mpq_class>> table(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    mpq_class base = mpq_class(1) / mpq_class(order[t]);
    table[t].resize(max_exponent + 1);
    table[t][0] = 1;
    for (int e = 1; e <= max_exponent; ++e) table[t][e] = table[t][e - 1] * base;
  }
  return table;
}

}  // namespace

mpq_class direct_sum_F(const Index& k, int M) {
  if (M < 1) throw std::invalid_argument("direct_sum_F: M must be positive");
  auto order = reciprocal_order(M);
  auto inv = reciprocal_powers(order, k.weight());
  return strict_chain_sum<mpq_class>(k, order.size(), [&](std::size_t t, int e) -> const mpq_class& { return inv[t][e]; });
}

mpq_class direct_sum_natural(const Index& k, int M) {
  if (M < 1) throw std::invalid_argument("direct_sum_natural: M must be positive");
  auto order = reciprocal_order(M);
  auto inv = reciprocal_powers(order, k.weight());
  return weighted_chain_sum<mpq_class>(
      k, order.size(), [&](std::size_t t, int e) -> const mpq_class& { return inv[t][e]; },
      [](int b) { return mpq_class(mpz_class(1), factorial(b)); });
}

Extrapolation richardson_extrapolate(std::span<const BigReal> samples, int log_power) {
  if (samples.empty()) throw std::invalid_argument("richardson_extrapolate: no samples");
  std::vector<BigReal> row(samples.begin(), samples.end());
  BigReal previous = row.back();
  int power = 1;
  int repeats = 0;
  while (row.size() > 1) {
    previous = row.back();
    mpq_class factor(mpz_class(1) << power);
    BigReal denom = BigReal::from_rational(factor - 1, row[0].digits());
    std::vector<BigReal> next;
    for (std::size_t j = 0; j + 1 < row.size(); ++j) {
      next.push_back((row[j + 1] * factor - row[j]) / denom);
    }
    row = std::move(next);
    if (++repeats > log_power) {
      ++power;
      repeats = 0;
    }
  }
  return {row[0], (row[0] - previous).abs()};
}

namespace {

template <class DirectSum>
Extrapolation extrapolate(const Index& k, int j_min, int j_max, int digits, DirectSum&& sum) {
  if (j_min < 1 || j_max < j_min) throw std::invalid_argument("extrapolate: need 1 <= j_min <= j_max");
  std::vector<BigReal> samples;
  for (int j = j_min; j <= j_max; ++j) samples.push_back(BigReal::from_rational(sum(k, 1 << j), digits));
  return richardson_extrapolate(samples, k.depth());
}

}  // namespace

Extrapolation extrapolate_direct_sum_F(const Index& k, int j_min, int j_max, int digits) {
  return extrapolate(k, j_min, j_max, digits, direct_sum_F);
}

Extrapolation extrapolate_direct_sum_natural(const Index& k, int j_min, int j_max, int digits) {
  return extrapolate(k, j_min, j_max, digits, direct_sum_natural);
}

}  // namespace mzv
