#pragma once

#include <functional>
#include <map>
#include <vector>

#include "mzv/group_ring.hpp"
#include "mzv/int_matrix.hpp"
#include "mzv/linalg.hpp"
#include "mzv/poly.hpp"

namespace mzv {

/// f|_g (x) = f(x g^{-1}) with x a row vector. Throws std::domain_error unless
/// g is unimodular. Contravariant: f|_{gh} = (f|_g)|_h.
MultiPoly act_matrix(const MultiPoly& f, const IntMatrix& g);
/// f|_s (x) = f(x_{s^{-1}(1)}, ..., x_{s^{-1}(n)}); equals act_matrix with w_s.
MultiPoly act_permutation(const MultiPoly& f, const Permutation& s);
MultiPoly act_groupring(const MultiPoly& f, const GroupRingElem& x);

/// w_s with (i, j) entry 1 iff i = s(j).
IntMatrix permutation_matrix(const Permutation& s);

/// Image of s in S_{n+1} as an n x n integer matrix: S_{n+1} permutes the
/// coordinates of (a_1, ..., a_n, -(a_1 + ... + a_n)).
IntMatrix iota(const Permutation& s);
std::map<Permutation, IntMatrix> build_iota(int n);
/// The permutation (1 .. n-1, n, n+1) -> (n-1 .. 1, n+1, n) in S_{n+1}.
Permutation reversal_generator(int n);
/// -P^{-1} w_0 P, the expected image of reversal_generator(n).
IntMatrix reversal_generator_image(int n);
/// -w_0 P^{-1} w_0 P, the expected image of the (n+1)-cycle.
IntMatrix cycle_image(int n);
/// Transposition (1, n+1) in S_{n+1}.
Permutation end_swap(int n);

/// iota is a homomorphism on all of S_{n+1} and injective.
bool iota_is_injective_homomorphism(int n);

/// 1 + sh_{n,1} c = c (1 + sh_{n,1} t) in Z[S_{n+1}], c the (n+1)-cycle and t
/// the end swap. With include_swap false the factor t is dropped (a control
/// that should fail).
bool groupring_identity_check(int n, bool include_swap = true);

/// Linear conditions on polynomials: each output polynomial must vanish.
using LinearConditions = std::function<std::vector<MultiPoly>(const MultiPoly&)>;

/// Basis of the subspace of span(ansatz) on which all conditions vanish,
/// each element a primitive integral combination of the ansatz.
std::vector<MultiPoly> solve_conditions(const std::vector<MultiPoly>& ansatz, const LinearConditions& conditions,
                                        PivotOrder order = PivotOrder::kLeftToRight);

std::vector<MultiPoly> monomial_basis(int n, int d);

/// Homogeneous degree-d f in n variables with f|sh_{n,i} = f|(P^{-1} sh_{n,i}) = 0
/// for 1 <= i <= n-1.
std::vector<MultiPoly> compute_D(int n, int d, PivotOrder order = PivotOrder::kLeftToRight);

/// g(x_1..x_{n+1}) = (f(x_2-x_1, ..., x_{n+1}-x_1) - f(x_2, ..., x_{n+1})) / x_1.
MultiPoly translation_difference(const MultiPoly& f);
/// g(x_{n+1}, x_1, ..., x_n).
MultiPoly rotate_variables(const MultiPoly& g);

/// Elements of D_{n,d} whose translation difference is invariant under the
/// cyclic shift of its n+1 variables. Rejects odd d.
std::vector<MultiPoly> prop66_kernel(int n, int d, PivotOrder order = PivotOrder::kLeftToRight);

/// f|_{Q_n} = (-1)^d f.
bool q_sign_holds(const MultiPoly& f, int d);

struct LemmaCheck {
  int solution_dimension = 0;
  bool conclusion_holds = false;
};

/// Symmetric f of degree d with d/dx_1 (x_1 f) translation invariant: the
/// solutions must all be constant.
LemmaCheck check_symmetric_translation(int n, int d);
/// f in V_{n,d} with (f(x_1-x_0, ..., x_n-x_0) - f(x)) / x_0 symmetric in
/// x_0..x_n: the solutions must be translation invariant (d >= 2).
LemmaCheck check_symmetric_difference(int n, int d);
/// f in V_{n,d} with (f(x_1-x_{n+1}, ..., x_n-x_{n+1}) - f(x)) / x_{n+1}
/// invariant under all permutations: solutions translation invariant (d >= 2).
LemmaCheck check_invariant_difference(int n, int d);
/// f in V_{n,d} with
///   x_{n+1}(F - f(x_2..x_{n+1})) = x_1(F - f(x_1..x_n)),  F = f(x_2-x_1, ..., x_{n+1}-x_1):
/// d/dx_n (x_n f) must be translation invariant for every solution.
LemmaCheck check_functional_equation(int n, int d);
/// The (n+1)-cycle matrix and the end-swap matrix generate iota_{n+1}(S_{n+2}).
bool generators_match_iota(int n);

}  // namespace mzv
