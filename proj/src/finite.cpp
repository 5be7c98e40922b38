#include "mzv/finite.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

namespace {

template <class Regularize>
MzvCombo antipode_sum(const Index& k, SignConvention sign, Regularize&& reg) {
  const int n = k.depth();
  std::vector<int> tail(n + 2, 0);  // tail[i] = k_i + ... + k_n, 1-based, k_0 = 0
  for (int i = n; i >= 1; --i) tail[i] = tail[i + 1] + k[i - 1];
  MzvCombo out;
  for (int i = 0; i <= n; ++i) {
    int exponent = sign == SignConvention::kTrailing ? tail[i + 1] : tail[std::max(i, 1)];
    MzvCombo left = reg(k.slice(0, i)).constant_term();
    MzvCombo right = reg(k.slice(i, n).reversed()).constant_term();
    MzvCombo term = combo_product(left, right);
    out += exponent % 2 == 0 ? term : -term;
  }
  return out;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

}  // namespace

MzvCombo zeta_F(const Index& k, SignConvention sign) {
  return antipode_sum(k, sign, [](const Index& x) { return stuffle_regularize(x); });
}

MzvCombo zeta_F_sharp(const Index& k, SignConvention sign) {
  return antipode_sum(k, sign, [](const Index& x) { return shuffle_regularize(x); });
}

MzvCombo zeta_natural_F(const Index& k, SignConvention sign) {
  if (k.empty()) return MzvCombo::one();
  MzvCombo out;
  for (const auto& phi : enumerate_all_surjections(k.depth())) {
    out += zeta_F(push_index(phi, k), sign) * mpq_class(mpz_class(1), phi.stabilizer_order());
  }
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("no inverse of 0 mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

ModPValue zeta_A_component(const Index& k, std::int64_t p) {
  require_prime(p);
  const int n = k.depth();
  std::vector<std::int64_t> acc(n + 1, 0);
  acc[0] = 1 % p;
  for (std::int64_t m = 1; m < p; ++m) {
    std::int64_t inv = mod_inverse(m, p);
    for (int j = n; j >= 1; --j) acc[j] = (acc[j] + mul_mod(acc[j - 1], pow_mod(inv, k[j - 1], p), p)) % p;
  }
  return {p, acc[n]};
}

ModPValue zeta_natural_A_component(const Index& k, std::int64_t p) {
  require_prime(p);
  const int n = k.depth();
  if (p <= n) throw std::invalid_argument("prime must exceed the depth");
  // Points ordered by decreasing 1/m: 1, ..., h, -h, ..., -1 with h = (p-1)/2.
  // Runs of b equal points carry weight 1/b!.
  std::vector<std::int64_t> tie(n + 1, 1);
  for (int b = 1; b <= n; ++b) tie[b] = mul_mod(tie[b - 1], mod_inverse(b, p), p);
  const std::int64_t h = (p - 1) / 2;
  std::vector<std::int64_t> points;
  for (std::int64_t m = 1; m <= h; ++m) points.push_back(m);
  for (std::int64_t m = h; m >= 1; --m) points.push_back(-m);
  std::vector<std::int64_t> acc(n + 1, 0);
  acc[0] = 1 % p;
  for (std::int64_t m : points) {
    std::int64_t inv = mod_inverse(m, p);
    for (int j = n; j >= 1; --j) {
      int exponent = 0;
      for (int b = 1; b <= j; ++b) {
        exponent += k[j - b];
        std::int64_t term = mul_mod(mul_mod(acc[j - b], tie[b], p), pow_mod(inv, exponent, p), p);
        acc[j] = (acc[j] + term) % p;
      }
    }
  }
  return {p, acc[n]};
}

}  // namespace mzv
