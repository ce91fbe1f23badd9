#include <gsub/error.hpp>
#include <gsub/linalg.hpp>
#include <gsub/oracle.hpp>

#include <algorithm>
#include <cmath>

namespace gsub {

EigenDecomposition direct_spectrum(const SubstitutedGraph& sg, std::size_t cap, double cluster_tol) {
  if (sg.graph.vertex_count() > cap)
    throw Error(ErrorCode::TooLarge, std::to_string(sg.graph.vertex_count()) + " vertices exceed the oracle cap");
  return eigen(ReversibleOperator(sg.graph), cluster_tol);
}

std::size_t nodal_dimension(const EigenDecomposition& d, double lambda_star, std::size_t host_vertices) {
  auto idx = d.find(lambda_star, std::max(d.cluster_tol, 1e-8) * 10);
  if (!idx) throw Error(ErrorCode::NoSuchCluster, "no oracle eigenvalue near " + std::to_string(lambda_star));
  const EigenCluster& c = d.clusters[*idx];
  double mass = 0.0;
  for (double m : d.measure) mass += m;
  const double scale = std::sqrt(mass);
  Matrix H(c.multiplicity, host_vertices);
  for (std::size_t j = 0; j < c.multiplicity; ++j)
    for (std::size_t x = 0; x < host_vertices; ++x) H(j, x) = c.basis[j][x] * scale;
  return c.multiplicity - numeric_rank(H, 1e-7, 1e-7);
}

DominanceReport dominance_report(const EigenDecomposition& d, double tol) {
  DominanceReport r;
  r.spectrum_size = d.clusters.size();
  for (std::size_t x : d.support) {
    VertexSpectrum vs;
    vs.vertex = x;
    vs.local = local_spectrum(d, x, tol);
    vs.dominant = vs.local.size() == d.clusters.size();
    r.vertices.push_back(std::move(vs));
  }
  return r;
}

OracleComparison compare_with_oracle(const SpectrumReport& report, const EigenDecomposition& oracle, double tol) {
  OracleComparison cmp;
  std::size_t i = 0, j = 0;
  const auto& R = report.entries;
  const auto& O = oracle.clusters;
  // Both lists are descending; walk them together.
  while (i < R.size() || j < O.size()) {
    SpectrumDiffRow row;
    if (i < R.size() && j < O.size() && std::abs(R[i].value - O[j].value) <= tol) {
      row.report_value = R[i].value;
      row.report_multiplicity = R[i].multiplicity;
      row.oracle_value = O[j].value;
      row.oracle_multiplicity = O[j].multiplicity;
      row.matched = row.report_multiplicity == row.oracle_multiplicity;
      ++i;
      ++j;
    } else if (j >= O.size() || (i < R.size() && R[i].value > O[j].value)) {
      row.report_value = R[i].value;
      row.report_multiplicity = R[i].multiplicity;
      row.oracle_value = std::nan("");
      ++i;
    } else {
      row.report_value = std::nan("");
      row.oracle_value = O[j].value;
      row.oracle_multiplicity = O[j].multiplicity;
      ++j;
    }
    cmp.rows.push_back(row);
  }
  cmp.agree = std::all_of(cmp.rows.begin(), cmp.rows.end(), [](const SpectrumDiffRow& r) { return r.matched; });
  return cmp;
}

bool symmetric_spectrum(const EigenDecomposition& d, double tol) {
  const auto& c = d.clusters;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& lo = c[n - 1 - k];
    if (std::abs(c[k].value + lo.value) > tol || c[k].multiplicity != lo.multiplicity) return false;
  }
  return true;
}

}  // namespace gsub
