#include "mzv/int_matrix.hpp"

#include <stdexcept>

namespace mzv {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int l = 0; l < a.cols_; ++l) {
      std::int64_t x = a(i, l);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  const int n = rows_;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<long>((*this)(i, j));
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * (n == 0 ? mpz_class(1) : a[n - 1][n - 1]);
}

bool IntMatrix::unimodular() const { return rows_ == cols_ && abs(determinant()) == 1; }

IntMatrix IntMatrix::inverse() const {
  if (!unimodular()) throw std::domain_error("inverse: matrix is not unimodular");
  const int n = rows_;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<long>((*this)(i, j));
    a[i][n + i] = 1;
  }
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (a[pivot][k] == 0) ++pivot;
    std::swap(a[pivot], a[k]);
    mpq_class inv = 1 / a[k][k];
    for (auto& x : a[k]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      mpq_class f = a[i][k];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = a[i][n + j].get_num().get_si();
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < cols_; ++j) out += (j ? " " : "") + std::to_string((*this)(i, j));
  }
  return out + "]";
}

IntMatrix upper_ones(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = 1;
  return m;
}

IntMatrix antidiagonal(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

IntMatrix q_matrix(int n) {
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j) m(0, j) = -1;
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
  return m;
}

}  // namespace mzv
