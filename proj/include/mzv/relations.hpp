#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "mzv/bigreal.hpp"
#include "mzv/index.hpp"
#include "mzv/numeric.hpp"
#include "mzv/regularization.hpp"

namespace mzv {

struct SpanElement {
  std::string label;
  MzvCombo combo;
};

/// Generators of the products of lower weights plus the admissible values of
/// depth at most depth_bound, all of one weight.
struct SpanningSet {
  int weight = 0;
  int depth_bound = 0;
  std::vector<SpanElement> elements;
};

/// Products z(a) z(b) with a, b admissible and nonempty, |a| + |b| = weight,
/// plus admissible indices of that weight and depth <= depth_bound.
SpanningSet build_spanning_set(int weight, int depth_bound);

enum class Verdict { kConfirmed, kNotConfirmed, kInconclusive };
const char* verdict_name(Verdict v);

struct RelationConfig {
  int digits = kDefaultDigits;
  /// Largest allowed |integer coefficient| in a relation.
  mpz_class height_bound = 10000;
  /// Confirmation needs residual < 10^{-residual_digits}; 0 means digits / 2.
  int residual_digits = 0;
  /// Below this precision every verdict is inconclusive.
  int min_digits = 60;
};

struct RelationReport {
  std::string label;
  Verdict verdict = Verdict::kInconclusive;
  int digits = 0;
  std::string lhs;
  std::string rhs;
  /// Span elements kept after removing numerically dependent ones.
  std::vector<std::string> basis_labels;
  /// lhs - rhs = sum coefficients[j] * basis[j].
  std::vector<mpq_class> coefficients;
  mpz_class height = 0;
  double residual_log10 = 0.0;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// Numeric evidence that lhs - rhs lies in the span: an integer relation with
/// nonzero weight on lhs - rhs, height below the bound, and small residual.
RelationReport verify_congruence(const BigReal& lhs, const BigReal& rhs, const std::vector<SpanElement>& span,
                                 Evaluator& ev, const RelationConfig& config = {});
/// Same with span values given directly.
RelationReport verify_congruence_values(const BigReal& lhs, const BigReal& rhs, const std::vector<std::string>& labels,
                                        const std::vector<BigReal>& values, const RelationConfig& config = {});

/// Right-hand side of the boundary congruence for the surjection-averaged
/// finite value: two binomial-weighted sums over compositions of k_1 and k_n.
/// Non-admissible terms are stuffle constant terms. Rejects indices whose
/// weight and depth share parity, and weight 2.
MzvCombo rhs_eq31(const Index& k);

/// zeta_natural_F(k) - rhs_eq31(k) in the products + depth <= n-2 span.
RelationReport verify_eq31(const Index& k, Evaluator& ev, const RelationConfig& config = {});

/// The merged-neighbour sums for same-parity indices: the printed reading
/// (k_1..k_{i-1}, k_i+k_{i+1}, k_{i+1}, ..., k_n) and the weight-preserving
/// reading (k_1..k_{i-1}, k_i+k_{i+1}, k_{i+2}, ..., k_n).
MzvCombo corollary1_rhs_printed(const Index& k);
MzvCombo corollary1_rhs_merged(const Index& k);
/// One report per reading, printed first.
std::vector<RelationReport> verify_corollary_part1(const Index& k, Evaluator& ev, const RelationConfig& config = {});

/// -Z(w) - (-1)^k Z(w*) with w = word(k_2..k_n) A^{k_1}, w* = word(k_{n-1}..k_1) A^{k_n}.
MzvCombo corollary2_rhs(const Index& k);
RelationReport verify_corollary_part2(const Index& k, Evaluator& ev, const RelationConfig& config = {});

/// Opposite-parity indices (weight != 2) of weight <= max_weight, depth <= max_depth.
std::vector<Index> opposite_parity_indices(int max_weight, int max_depth);

}  // namespace mzv
