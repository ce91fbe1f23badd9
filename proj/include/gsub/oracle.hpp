#pragma once

#include <gsub/assemble.hpp>
#include <gsub/eigen.hpp>
#include <gsub/substitution.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace gsub {

inline constexpr std::size_t kOracleCap = 4000;

/// eigen(P_*) straight from the substituted graph; never looks at transfer data.
EigenDecomposition direct_spectrum(const SubstitutedGraph& sg, std::size_t cap = kOracleCap,
                                   double cluster_tol = kClusterTol);

/// Dimension of the part of the lambda_star eigenspace vanishing on the
/// first host_vertices coordinates. Throws Error(NoSuchCluster).
std::size_t nodal_dimension(const EigenDecomposition& d, double lambda_star, std::size_t host_vertices);

struct VertexSpectrum {
  std::size_t vertex = 0;
  std::vector<double> local;
  bool dominant = false;
};

struct DominanceReport {
  std::vector<VertexSpectrum> vertices;
  std::size_t spectrum_size = 0;
};

DominanceReport dominance_report(const EigenDecomposition& d, double tol = 1e-9);

struct SpectrumDiffRow {
  double report_value = 0.0;
  std::size_t report_multiplicity = 0;
  double oracle_value = 0.0;
  std::size_t oracle_multiplicity = 0;
  bool matched = false;  // both present, values within tolerance, equal multiplicities
};

struct OracleComparison {
  std::vector<SpectrumDiffRow> rows;
  bool agree = false;
};

OracleComparison compare_with_oracle(const SpectrumReport& report, const EigenDecomposition& oracle, double tol = 1e-8);

/// True when the multiset of eigenvalues equals its negation (within tol).
bool symmetric_spectrum(const EigenDecomposition& d, double tol = 1e-8);

}  // namespace gsub
