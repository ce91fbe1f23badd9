#include <gsub/resolvent.hpp>

#include <stdexcept>
#include <utility>

namespace gsub {

std::vector<RationalFunction> resolvent_solve(const RationalMatrix& M, const std::vector<Rational>& rhs) {
  const std::size_t n = M.size();
  if (rhs.size() != n) throw std::invalid_argument("resolvent_solve: size mismatch");
  const RationalFunction z = RationalFunction::variable();

  std::vector<std::vector<RationalFunction>> A(n, std::vector<RationalFunction>(n));
  std::vector<RationalFunction> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[i][j] = RationalFunction(Rational(-M[i][j]));
    A[i][i] += z;
    b[i] = RationalFunction(rhs[i]);
  }

  for (std::size_t col = 0; col < n; ++col) {
    // Lowest-degree pivot keeps intermediate expressions small.
    std::size_t piv = n;
    long best = 0;
    for (std::size_t r = col; r < n; ++r) {
      if (A[r][col].is_zero()) continue;
      long w = A[r][col].numerator().degree() + A[r][col].denominator().degree();
      if (piv == n || w < best) {
        piv = r;
        best = w;
      }
    }
    // det(zI - M) is a non-zero polynomial, so a pivot always exists.
    if (piv == n) throw std::logic_error("resolvent_solve: singular over Q(z)");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);

    const RationalFunction inv = RationalFunction(1L) / A[col][col];
    for (std::size_t j = col; j < n; ++j) A[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      const RationalFunction f = A[r][col];
      for (std::size_t j = col; j < n; ++j) {
        if (!A[col][j].is_zero()) A[r][j] -= f * A[col][j];
      }
      b[r] -= f * b[col];
    }
  }
  return b;
}

RationalFunction resolvent_entry(const RationalMatrix& M, std::size_t i, std::size_t j) {
  std::vector<Rational> e(M.size());
  e.at(j) = 1;
  return resolvent_solve(M, e).at(i);
}

std::vector<Rational> solve_exact(RationalMatrix A, std::vector<Rational> b) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("solve_exact: singular matrix");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = 1 / A[col][col];
    for (std::size_t j = col; j < n; ++j) A[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      const Rational f = A[r][col];
      for (std::size_t j = col; j < n; ++j) A[r][j] -= f * A[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

Rational resolvent_entry_at(const RationalMatrix& M, std::size_t i, std::size_t j, const Rational& z) {
  const std::size_t n = M.size();
  RationalMatrix A(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) A[r][c] = -M[r][c];
    A[r][r] += z;
  }
  std::vector<Rational> e(n);
  e.at(j) = 1;
  return solve_exact(std::move(A), std::move(e)).at(i);
}

Polynomial characteristic_polynomial(const RationalMatrix& M) {
  const std::size_t n = M.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix Mk(n, std::vector<Rational>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = M * M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(M * M_k) / k
    RationalMatrix next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += M[i][l] * Mk[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    Mk = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += M[i][l] * Mk[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

}  // namespace gsub
