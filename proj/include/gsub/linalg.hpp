#pragma once

#include <cstddef>
#include <vector>

namespace gsub {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& A, const Matrix& B);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigen {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k belongs to values[k]
};

/// Cyclic Jacobi. Throws Error(NoConvergence) past max_sweeps.
SymmetricEigen jacobi_eigen(Matrix S, double offdiag_tol = 1e-14, int max_sweeps = 100);

/// Singular values, descending (one-sided Jacobi).
std::vector<double> singular_values(const Matrix& A);

/// Number of singular values above rel_tol * largest (and above abs_floor).
std::size_t numeric_rank(const Matrix& A, double rel_tol = 1e-8, double abs_floor = 1e-12);

}  // namespace gsub
