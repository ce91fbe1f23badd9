#pragma once

#include <gsub/classify.hpp>
#include <gsub/eigen.hpp>
#include <gsub/graph.hpp>
#include <gsub/roots.hpp>
#include <gsub/substitution.hpp>
#include <gsub/transfer.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gsub {

struct Settings {
  double cluster_tol = kClusterTol;
  double interior_exclusion = 1e-8;  // S1 roots this close to spec(Q_V°) or a ψ zero are dropped
  RootOptions roots;
  std::size_t max_grid = 4096 * 256;
};

/// Everything the assembly consumes, computed once per (X, V).
struct Analysis {
  SubstitutedGraph sg;
  TransferFunctions tf;
  BoundaryKernels kernels;
  EigenDecomposition specP, specQ, specQo;
  std::vector<TypedEigenvalue> typedQ, typedQo;
  CycleBase cycles;
  std::optional<std::vector<int>> colours;  // host bipartition

  bool bipartite() const { return colours.has_value(); }
  bool tree() const { return sg.host.edge_count() + 1 == sg.host.vertex_count(); }
  bool unicyclic_odd() const { return cycles.cycles.size() == 1 && cycles.cycles.front().odd(); }
  bool interior_connected() const;
  std::vector<double> interior_values() const { return specQo.values(); }
  /// Q-classification at value, if value is in spec(Q).
  const TypedEigenvalue* q_type_at(double value, double tol) const;
};

/// Validates X (connected) and s, then runs every preliminary stage.
Analysis analyze(const WeightedGraph& X, const Substituent& s, const Settings& settings = {},
                 const std::optional<Orientation>& orientation = std::nullopt);

struct S1Root {
  double lambda_star = 0.0;
  double lambda = 0.0;            // phi(lambda_star), a host eigenvalue
  std::size_t host_cluster = 0;   // index into specP.clusters
  std::size_t nu_P = 0;
  int root_multiplicity = 1;
};

std::vector<S1Root> solve_S1(const TransferFunctions& tf, const EigenDecomposition& specP,
                             const std::vector<double>& interior_spectrum, const Settings& settings = {});

/// Type IV eigenvalues of Q with multiplicity 2 outside spec(Q_V°);
/// cross-checked against psi = 0 and theta = z.
std::vector<double> solve_S2(const TransferFunctions& tf, const std::vector<TypedEigenvalue>& typedQ,
                             const std::vector<double>& interior_spectrum, double tol = kClusterTol);

/// Row: the Q-type of the value, or nullopt when it is not in spec(Q).
/// Throws Error(InvalidTypeCombination) for the impossible (none, I°) cell.
long interior_multiplicity(std::optional<EigenType> row, EigenType col, std::size_t nu_o, std::size_t host_vertices,
                           std::size_t host_edges, bool bipartite);

enum class ExcRule { A, B, TableZero };
std::string to_string(ExcRule r);

struct ExcludedCandidate {
  double value = 0.0;
  ExcRule rule = ExcRule::TableZero;
  EigenType interior_type = EigenType::I;
  std::optional<EigenType> q_type;
  std::size_t nu_o = 0;
};

/// Structural exceptional set of the tree / odd-unicyclic rules.
std::vector<ExcludedCandidate> exceptional_set(const Analysis& an, double tol = kClusterTol);

enum class EntryKind { S1, S2, Interior, Merged };
std::string to_string(EntryKind k);

struct SpectrumEntry {
  double value = 0.0;
  std::size_t multiplicity = 0;
  EntryKind kind = EntryKind::S1;
  // S1
  double host_value = 0.0;
  std::size_t host_multiplicity = 0;
  // Interior
  std::optional<EigenType> q_type;
  EigenType interior_type = EigenType::I;
  std::size_t nu_o = 0;
  std::vector<std::string> provenance;  // one line per contributing source
};

struct SpectralGap {
  bool applicable = false;
  std::string reason;
  double lambda1 = 0.0;
  double lambda1_star = 0.0;
  bool equals_second_entry = false;
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;  // descending, merged within cluster_tol
  std::vector<ExcludedCandidate> exc;
  std::vector<double> s2;
  SpectralGap gap;
  std::size_t total = 0;
  std::size_t expected_total = 0;
  bool bipartite = false, tree = false, unicyclic_odd = false;
  std::size_t host_vertices = 0, host_edges = 0, sub_vertices = 0;
  Settings settings;
  std::vector<std::string> warnings;
};

SpectralGap spectral_gap(const Analysis& an, const std::vector<S1Root>& s1, const std::vector<SpectrumEntry>& entries);

/// Throws Error(TotalMismatch) when multiplicities do not add up to |X[V]|.
SpectrumReport assemble(const Analysis& an, const Settings& settings = {});

}  // namespace gsub
