#pragma once

#include <gsub/graph.hpp>
#include <gsub/rational_function.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gsub {

struct TransferFunctions {
  RationalFunction phi;    // (z - theta) / psi, reduced
  RationalFunction psi;
  RationalFunction theta;
  RationalFunction z_minus_theta;  // unreduced numerator of phi, kept for ψ-zero logic
  double lambda0_minus_b = 0.0;    // largest eigenvalue of Q restricted to V - b
  double lambda0_interior = 0.0;   // largest eigenvalue of Q restricted to V-interior
};

/// F_{V-b}(v,a|z) and F_{V-a}(v,b|z), indexed by all of V with the
/// boundary conventions (to_a: a -> 1, b -> 0; to_b: a -> 0, b -> 1).
struct BoundaryKernels {
  std::vector<RationalFunction> to_a;
  std::vector<RationalFunction> to_b;
};

TransferFunctions compute_transfer(const Substituent& s);
BoundaryKernels boundary_kernels(const Substituent& s);

/// f on V with f(a) = alpha, f(b) = beta and Qf = z f on V-interior.
/// Throws Error(TooCloseToInteriorSpectrum) within 1e-9 of interior_spectrum.
std::vector<double> solve_boundary(const BoundaryKernels& k, std::size_t a, std::size_t b,
                                   const std::vector<double>& interior_spectrum, double alpha, double beta, double z);

struct ResolventPairCheck {
  std::size_t x = 0, y = 0;
  Rational left;   // G_*(x,y|z)
  Rational right;  // G(x,y|phi(z)) / psi(z)
  bool equal = false;
};

struct ResolventIdentityReport {
  Rational z;
  Rational phi_z, psi_z;
  std::vector<ResolventPairCheck> checks;
  bool all_equal() const;
};

/// Evaluates both sides exactly at the rational point z (|z| > 1).
ResolventIdentityReport verify_resolvent_identity(const WeightedGraph& X, const Substituent& s, const Rational& z,
                                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

}  // namespace gsub
