#include <gsub/eigen.hpp>
#include <gsub/substitution.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace gsub {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

std::size_t SubstitutedGraph::pi(std::size_t e, std::size_t v) const {
  if (v == sub.a) return orientation.tail.at(e);
  if (v == sub.b) return orientation.head.at(e);
  return host.vertex_count() + e * interior.size() + interior_pos.at(v);
}

SubstitutedGraph substitute(const WeightedGraph& X, const Orientation& o, const Substituent& s) {
  SubstitutedGraph sg;
  sg.host = X;
  sg.orientation = o;
  sg.sub = s;
  sg.interior = s.interior();
  sg.interior_pos.assign(s.graph.vertex_count(), npos);
  for (std::size_t i = 0; i < sg.interior.size(); ++i) sg.interior_pos[sg.interior[i]] = i;

  std::vector<std::string> labels = X.labels();
  for (std::size_t x = 0; x < X.vertex_count(); ++x) sg.origin.push_back({VertexKind::Host, x, 0, 0});
  for (std::size_t e = 0; e < X.edge_count(); ++e) {
    for (std::size_t v : sg.interior) {
      labels.push_back("(" + std::to_string(e) + ":" + s.graph.label(v) + ")");
      sg.origin.push_back({VertexKind::Interior, 0, e, v});
    }
  }
  std::vector<Edge> edges;
  edges.reserve(X.edge_count() * s.graph.edge_count());
  for (std::size_t e = 0; e < X.edge_count(); ++e) {
    const Rational& ax = X.edge(e).conductance;
    for (const Edge& ve : s.graph.edges()) edges.push_back({sg.pi(e, ve.u), sg.pi(e, ve.v), ax * ve.conductance});
  }
  sg.graph = WeightedGraph(std::move(labels), std::move(edges));
  return sg;
}

bool reorient_equivalence_check(const WeightedGraph& X, const Substituent& s, int trials, std::uint64_t seed) {
  auto flat = [](const EigenDecomposition& d) {
    std::vector<double> v;
    for (const auto& c : d.clusters)
      for (std::size_t i = 0; i < c.multiplicity; ++i) v.push_back(c.value);
    return v;
  };
  const auto ref = flat(eigen(ReversibleOperator(substitute(X, Orientation::standard(X), s).graph)));
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto got = flat(eigen(ReversibleOperator(substitute(X, Orientation::random(X, rng), s).graph)));
    if (got.size() != ref.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
      if (std::abs(got[i] - ref[i]) > 1e-8) return false;
  }
  return true;
}

}  // namespace gsub
