#pragma once

#include <cstdint>

#include "mzv/index.hpp"
#include "mzv/regularization.hpp"

namespace mzv {

/// Sign exponent used in the antipode-type formula
///   zeta^F(k) = sum_{i=0}^{n} (-1)^{e_i} reg(k_1..k_i) reg(k_n..k_{i+1}).
/// kTrailing: e_i = k_{i+1} + ... + k_n (matches the limit definition).
/// kInclusive: e_i = k_i + ... + k_n (k_0 = 0), kept for auditing.
enum class SignConvention { kTrailing, kInclusive };

/// Finite real MZV as an exact combination, via stuffle-regularized factors
/// (constant terms).
MzvCombo zeta_F(const Index& k, SignConvention sign = SignConvention::kTrailing);

/// Same sum with shuffle-regularized factors.
MzvCombo zeta_F_sharp(const Index& k, SignConvention sign = SignConvention::kTrailing);

/// Sum over ordered surjections phi of zeta_F(phi_* k) / #G_phi.
MzvCombo zeta_natural_F(const Index& k, SignConvention sign = SignConvention::kTrailing);

/// Component of a finite MZV at one prime: residue in [0, p).
struct ModPValue {
  std::int64_t p = 0;
  std::int64_t residue = 0;
  bool operator==(const ModPValue&) const = default;
};

bool is_prime(std::int64_t n);
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// sum_{0 < m_1 < ... < m_n < p} prod m_i^{-k_i} mod p. Rejects composite p.
ModPValue zeta_A_component(const Index& k, std::int64_t p);

/// sum over 0 < |m_i| < p/2 of w(m) / prod m_i^{k_i} mod p, w the cone weight.
/// Rejects composite p and p <= depth(k).
ModPValue zeta_natural_A_component(const Index& k, std::int64_t p);

}  // namespace mzv
