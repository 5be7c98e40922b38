#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

#include "mzv/bigreal.hpp"

namespace mzv {

struct PslqResult {
  bool found = false;
  /// Integer vector a with sum a_j x_j ~ 0 when found.
  std::vector<mpz_class> relation;
  int iterations = 0;
  /// Every relation has Euclidean norm at least this (from the last H).
  double norm_lower_bound = 0.0;
  /// Why the search stopped: "relation", "bound", "iterations", "precision".
  const char* stop_reason = "";
};

/// Integer relation search (Ferguson-Bailey PSLQ) on x at the given decimal
/// precision. Stops when a relation is found, when no relation of norm up to
/// max_norm can exist, or after max_iterations.
PslqResult pslq(std::span<const BigReal> x, int digits, const mpz_class& max_norm, int max_iterations = 20000);

}  // namespace mzv
