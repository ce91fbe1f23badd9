#pragma once

#include <gsub/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gsub {

enum class VertexKind { Host, Interior };

struct VertexOrigin {
  VertexKind kind = VertexKind::Host;
  std::size_t host_vertex = 0;  // Host only
  std::size_t edge = 0;         // Interior only
  std::size_t v = 0;            // Interior only: vertex of V
};

/// X[V]: host vertices first (in X order), then (e, v) for every host edge e
/// and v in V-interior, edge-major.
struct SubstitutedGraph {
  WeightedGraph host;
  Orientation orientation;
  Substituent sub;
  WeightedGraph graph;
  std::vector<VertexOrigin> origin;
  std::vector<std::size_t> interior;  // V-interior in ascending order
  std::vector<std::size_t> interior_pos;  // vertex of V -> position in `interior`, or npos

  std::size_t host_count() const { return host.vertex_count(); }
  /// Identification map (e, v) -> vertex of X[V], for every v in V.
  std::size_t pi(std::size_t e, std::size_t v) const;
};

SubstitutedGraph substitute(const WeightedGraph& X, const Orientation& o, const Substituent& s);

/// Builds X[V] under `trials` random orientations and compares spectra
/// (as multisets, within 1e-8) with the standard orientation.
bool reorient_equivalence_check(const WeightedGraph& X, const Substituent& s, int trials, std::uint64_t seed);

}  // namespace gsub
