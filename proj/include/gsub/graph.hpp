#pragma once

#include <gsub/rational.hpp>

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gsub {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational conductance;
};

/// Finite weighted multigraph: no loops, positive exact conductances.
/// Vertices are dense indices; labels are for I/O and diagnostics.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Throws Error(InvalidGraph) on loops, bad indices or non-positive weights.
  WeightedGraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  /// Incident edge indices of x, ascending.
  const std::vector<std::size_t>& incident(std::size_t x) const { return incident_.at(x); }
  std::size_t degree(std::size_t x) const { return incident_.at(x).size(); }
  std::size_t other(std::size_t e, std::size_t x) const;

  /// a(x, y), summed over parallel edges.
  Rational conductance(std::size_t x, std::size_t y) const;
  /// m(x) = sum_y a(x, y).
  const Rational& total_conductance(std::size_t x) const { return m_.at(x); }

  std::optional<std::size_t> find_vertex(const std::string& label) const;

  bool connected() const;
  /// Connectivity of the subgraph induced on {x : keep[x]} (false if empty).
  bool connected_on(const std::vector<bool>& keep) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<Rational> m_;
};

/// Throws Error(InvalidGraph) unless g is non-empty and connected.
void require_connected(const WeightedGraph& g, const std::string& what);

struct Substituent {
  WeightedGraph graph;
  std::size_t a = 0;
  std::size_t b = 1;
  std::vector<std::size_t> gamma;

  /// V minus {a, b}, ascending.
  std::vector<std::size_t> interior() const;
  /// Order of gamma as a permutation.
  std::size_t gamma_order() const;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
};

/// Evaluates every substituent invariant without throwing.
ValidationReport check_substituent(const Substituent& s);
/// Same checks; throws the Error of the first violated invariant.
ValidationReport validate_substituent(const Substituent& s);

/// Exhaustive search for an automorphism swapping a and b (|V| <= 10,
/// otherwise Error(TooLarge)). Prefers involutions.
std::optional<std::vector<std::size_t>> find_gamma(const WeightedGraph& g, std::size_t a, std::size_t b);

/// Designation of e^a (tail) and e^b (head) for every edge.
struct Orientation {
  std::vector<std::size_t> tail;
  std::vector<std::size_t> head;

  /// Tail is the endpoint with the smaller index.
  static Orientation standard(const WeightedGraph& g);
  static Orientation random(const WeightedGraph& g, std::mt19937_64& rng);
};

/// Colour 0/1 per vertex if g is bipartite.
std::optional<std::vector<int>> bipartition(const WeightedGraph& g);

struct Cycle {
  std::vector<std::size_t> vertices;  // closed: vertices.front() == vertices.back()
  std::vector<std::size_t> edges;     // edges[j] joins vertices[j] and vertices[j + 1]
  std::size_t non_tree_edge = 0;

  std::size_t length() const { return edges.size(); }
  bool odd() const { return length() % 2 == 1; }
};

struct CycleBase {
  std::vector<bool> in_tree;        // per edge
  std::vector<std::size_t> parent;  // BFS tree parent (root points to itself)
  std::vector<std::size_t> parent_edge;
  std::vector<std::size_t> depth;
  std::vector<Cycle> cycles;        // one per non-tree edge, in edge order
};

/// BFS spanning tree from vertex 0, neighbours in incident-edge order.
CycleBase fundamental_cycle_base(const WeightedGraph& g);

struct NonBacktrackingPath {
  std::vector<std::size_t> vertices;  // closed
  std::vector<std::size_t> edges;
  bool non_backtracking = false;      // e_{j+1} != e_j cyclically
  std::vector<long> defect;           // per edge of g: sum over j with e_j = e of (-1)^j
};

/// Defect vector and the non-backtracking flag for a closed walk given by its edges.
NonBacktrackingPath make_closed_walk(const WeightedGraph& g, std::vector<std::size_t> vertices,
                            std::vector<std::size_t> edges);

/// Even closed walk around cycle i, along the tree to cycle l, around it and
/// back. Throws Error(CyclesNotOdd) if either cycle is even.
NonBacktrackingPath even_joined_path(const WeightedGraph& g, const CycleBase& base, std::size_t i, std::size_t l);

}  // namespace gsub
