#pragma once

#include <gsub/polynomial.hpp>
#include <gsub/rational.hpp>
#include <gsub/rational_function.hpp>

#include <cstddef>
#include <vector>

namespace gsub {

/// Dense square matrix over Q, row-major as nested vectors.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves (zI - M) x = rhs over Q(z) by Gaussian elimination with
/// rational-function pivots. Entries of the result are reduced.
std::vector<RationalFunction> resolvent_solve(const RationalMatrix& M, const std::vector<Rational>& rhs);

/// Entry (i, j) of (zI - M)^{-1}.
RationalFunction resolvent_entry(const RationalMatrix& M, std::size_t i, std::size_t j);

/// Exact solve of A x = b over Q. Throws std::domain_error if A is singular.
std::vector<Rational> solve_exact(RationalMatrix A, std::vector<Rational> b);

/// Entry (i, j) of (zI - M)^{-1} at a rational point z not in spec(M).
Rational resolvent_entry_at(const RationalMatrix& M, std::size_t i, std::size_t j, const Rational& z);

/// det(zI - M), monic of degree n (Faddeev-LeVerrier).
Polynomial characteristic_polynomial(const RationalMatrix& M);

}  // namespace gsub
