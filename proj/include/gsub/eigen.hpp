#pragma once

#include <gsub/graph.hpp>
#include <gsub/rational.hpp>
#include <gsub/resolvent.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace gsub {

inline constexpr double kClusterTol = 1e-8;

/// p(x,y) = a(x,y)/m(x) on a graph, optionally restricted to a vertex subset
/// (entries leaving the subset are dropped, so rows become substochastic).
/// Vectors are always indexed by the full vertex set.
class ReversibleOperator {
 public:
  explicit ReversibleOperator(const WeightedGraph& g);

  ReversibleOperator restrict_to(const std::vector<bool>& keep) const;
  ReversibleOperator without(std::initializer_list<std::size_t> drop) const;

  std::size_t full_size() const { return m_.size(); }
  const std::vector<std::size_t>& support() const { return support_; }
  bool in_support(std::size_t x) const { return keep_[x]; }
  const Rational& measure(std::size_t x) const { return m_[x]; }
  /// Exact p(x, y); zero when either endpoint is outside the support.
  Rational transition(std::size_t x, std::size_t y) const;
  /// Nonzero (y, a(x,y)) pairs of row x, parallel edges merged.
  const std::vector<std::pair<std::size_t, Rational>>& row(std::size_t x) const { return rows_[x]; }

  /// (Pf)(x) for x in the support, 0 elsewhere.
  std::vector<double> apply(const std::vector<double>& f) const;
  /// Transition matrix on the support, in support order.
  RationalMatrix rational_matrix() const;

 private:
  std::vector<Rational> m_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows_;
  std::vector<bool> keep_;
  std::vector<std::size_t> support_;
};

struct EigenCluster {
  double value = 0.0;
  std::size_t multiplicity = 0;
  /// m-orthonormal eigenfunctions, full length, zero off the support.
  std::vector<std::vector<double>> basis;
};

struct EigenDecomposition {
  std::vector<EigenCluster> clusters;  // descending
  std::vector<double> measure;         // full length
  std::vector<std::size_t> support;
  double cluster_tol = kClusterTol;

  std::size_t dimension() const { return support.size(); }
  std::size_t total_multiplicity() const;
  std::optional<std::size_t> find(double value, double tol) const;
  std::vector<double> values() const;
};

EigenDecomposition eigen(const ReversibleOperator& op, double cluster_tol = kClusterTol);

/// Largest eigenvalue of op (1 for a connected stochastic operator).
double spectral_radius(const ReversibleOperator& op);

/// Cluster values whose residue m(x) sum_i h_i(x)^2 at x exceeds tol.
std::vector<double> local_spectrum(const EigenDecomposition& d, std::size_t x, double tol = 1e-9);

/// m-weighted inner product over the full vertex set.
double inner_m(const std::vector<double>& f, const std::vector<double>& g, const std::vector<double>& m);

}  // namespace gsub
