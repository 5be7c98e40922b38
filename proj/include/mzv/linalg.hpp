#pragma once

#include <vector>

#include <gmpxx.h>

namespace mzv {

using RationalMatrix = std::vector<std::vector<mpq_class>>;
using IntegerVector = std::vector<mpz_class>;

/// Column order in which pivots are sought during elimination.
enum class PivotOrder { kLeftToRight, kRightToLeft };

/// Basis of {v : A v = 0} for an m x ncols matrix, by fraction-free (Bareiss)
/// elimination. Vectors are integral with coprime entries and a positive
/// leading entry.
std::vector<IntegerVector> nullspace(const RationalMatrix& a, int ncols, PivotOrder order = PivotOrder::kLeftToRight);

int rank(const RationalMatrix& a, int ncols);

/// True when the two families span the same subspace.
bool same_span(const std::vector<IntegerVector>& a, const std::vector<IntegerVector>& b, int dim);

}  // namespace mzv
