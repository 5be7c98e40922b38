#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mzv {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  IntMatrix operator-() const;
  IntMatrix transposed() const;

  mpz_class determinant() const;
  bool unimodular() const;
  /// Integer inverse; throws std::domain_error unless the determinant is +-1.
  IntMatrix inverse() const;

  auto operator<=>(const IntMatrix&) const = default;
  bool operator==(const IntMatrix&) const = default;
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Upper triangular all-ones matrix.
IntMatrix upper_ones(int n);
/// Anti-diagonal permutation matrix (the longest element).
IntMatrix antidiagonal(int n);
/// First row all -1, ones on the subdiagonal.
IntMatrix q_matrix(int n);

}  // namespace mzv
