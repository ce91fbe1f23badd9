#pragma once

#include <gsub/classify.hpp>
#include <gsub/eigen.hpp>
#include <gsub/substitution.hpp>
#include <gsub/transfer.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gsub {

enum class Construction {
  Transfer,
  TypeIPerEdge,
  TypeIIConstant,
  TypeIIIBipartite,
  TypeIVPerVertex,
  OddCycle,
  EvenDefectPath,
  MixedPair,
};

std::string to_string(Construction c);
bool is_nodal(Construction c);

struct ExtensionFunction {
  std::vector<double> values;  // indexed by vertices of X[V]
  double lambda = 0.0;
  Construction tag = Construction::Transfer;
  std::string provenance;
};

/// sum over e with e^a = x of a(e) Qf^e(a), plus the e^b = x counterpart.
double balance(const SubstitutedGraph& sg, const std::vector<double>& f, std::size_t x);

/// ||P_* f - lambda f||_inf / ||f||_inf.
double residual(const SubstitutedGraph& sg, const std::vector<double>& f, double lambda);

/// Extends a P-eigenfunction f (on X) through the boundary kernels at lambda_star.
/// Throws Error(KernelPole) within 1e-9 of interior_spectrum.
ExtensionFunction transfer_extension(const SubstitutedGraph& sg, const BoundaryKernels& k,
                                     const std::vector<double>& interior_spectrum, const std::vector<double>& f,
                                     double lambda_star);

/// Embeddings of a classified Q-eigenvalue: per-edge copies of the block
/// plus the type-dependent extension of the tails.
std::vector<ExtensionFunction> embed_specQ(const SubstitutedGraph& sg, const TypedEigenvalue& t,
                                           const std::optional<std::vector<int>>& colours);

/// Only the tail-based part of embed_specQ (no per-edge copies).
std::vector<ExtensionFunction> tail_extensions(const SubstitutedGraph& sg, const TypedEigenvalue& t,
                                               const std::optional<std::vector<int>>& colours);

struct NodalFamily {
  std::vector<ExtensionFunction> functions;
  std::vector<std::string> warnings;  // e.g. a joined path that backtracks
};

NodalFamily nodal_from_interior(const SubstitutedGraph& sg, const TypedEigenvalue& t, const CycleBase& base,
                                const std::optional<std::vector<int>>& colours);

/// Numerical rank of the value matrix (singular values above 1e-8 * max).
std::size_t independence_rank(const std::vector<ExtensionFunction>& fns);

}  // namespace gsub
