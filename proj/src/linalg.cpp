#include <gsub/error.hpp>
#include <gsub/linalg.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gsub {

Matrix Matrix::identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

Matrix Matrix::transpose() const {
  Matrix T(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
  return T;
}

Matrix operator*(const Matrix& A, const Matrix& B) {
  Matrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const double a = A(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += a * B(k, j);
    }
  return C;
}

SymmetricEigen jacobi_eigen(Matrix S, double offdiag_tol, int max_sweeps) {
  const std::size_t n = S.rows();
  Matrix V = Matrix::identity(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += S(i, j) * S(i, j);
  const double target = offdiag_tol * std::max(1.0, std::sqrt(total));

  int sweep = 0;
  for (;; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += S(i, j) * S(i, j);
    if (std::sqrt(off) <= target) break;
    if (sweep >= max_sweeps) throw Error(ErrorCode::NoConvergence, "Jacobi sweep cap exceeded");

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = S(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = S(p, p), aqq = S(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double skp = S(k, p), skq = S(k, q);
          S(k, p) = c * skp - s * skq;
          S(k, q) = s * skp + c * skq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double spk = S(p, k), sqk = S(q, k);
          S(p, k) = c * spk - s * sqk;
          S(q, k) = s * spk + c * sqk;
        }
        S(p, q) = S(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return S(i, i) > S(j, j); });
  SymmetricEigen out;
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(S(order[k], order[k]));
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = V(i, order[k]);
  }
  return out;
}

std::vector<double> singular_values(const Matrix& A) {
  // One-sided Jacobi on the columns of the taller orientation.
  Matrix U = A.rows() >= A.cols() ? A : A.transpose();
  const std::size_t m = U.rows(), n = U.cols();
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0, beta = 0, gamma = 0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += U(i, p) * U(i, p);
          beta += U(i, q) * U(i, q);
          gamma += U(i, p) * U(i, q);
        }
        if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta) || gamma == 0.0) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double up = U(i, p), uq = U(i, q);
          U(i, p) = c * up - s * uq;
          U(i, q) = s * up + c * uq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0;
    for (std::size_t i = 0; i < m; ++i) s += U(i, j) * U(i, j);
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

std::size_t numeric_rank(const Matrix& A, double rel_tol, double abs_floor) {
  if (A.rows() == 0 || A.cols() == 0) return 0;
  const auto sv = singular_values(A);
  if (sv.empty() || sv.front() <= abs_floor) return 0;
  std::size_t r = 0;
  for (double s : sv)
    if (s > rel_tol * sv.front() && s > abs_floor) ++r;
  return r;
}

}  // namespace gsub
