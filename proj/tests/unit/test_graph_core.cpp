#include <doctest.h>

#include <gsub/error.hpp>
#include <gsub/fixtures.hpp>
#include <gsub/graph.hpp>
#include <gsub/graph_io.hpp>

#include <algorithm>
#include <random>

using namespace gsub;

namespace {

WeightedGraph make(std::vector<std::string> labels, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, Rational(1)});
  return WeightedGraph(std::move(labels), std::move(edges));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidGraph;
}

}  // namespace

TEST_CASE("graph construction validates its input") {
  CHECK(code_of([] { make({"x", "y"}, {{0, 0}}); }) == ErrorCode::InvalidGraph);
  CHECK(code_of([] { make({"x", "y"}, {{0, 2}}); }) == ErrorCode::InvalidGraph);
  CHECK(code_of([] { WeightedGraph({"x", "y"}, {{0, 1, Rational(0)}}); }) == ErrorCode::InvalidGraph);

  const WeightedGraph g({"x", "y", "w"}, {{0, 1, Rational(2)}, {1, 2, Rational(1, 2)}, {0, 1, Rational(1)}});
  CHECK(g.degree(1) == 3);
  CHECK(g.conductance(0, 1) == Rational(3));
  CHECK(g.total_conductance(1) == Rational(7, 2));
  CHECK(g.other(1, 2) == 1);
  CHECK(g.find_vertex("w") == std::optional<std::size_t>(2));
  CHECK(g.connected());
}

TEST_CASE("bipartition") {
  CHECK(bipartition(cycle_graph(4)).has_value());
  CHECK(!bipartition(cycle_graph(5)).has_value());
  const auto c = bipartition(path_graph(4));
  REQUIRE(c);
  CHECK((*c)[0] != (*c)[1]);
  CHECK((*c)[0] == (*c)[2]);
}

TEST_CASE("fundamental cycle base") {
  const CycleBase k4 = fundamental_cycle_base(complete_graph(4));
  CHECK(k4.cycles.size() == 3);  // |E| - |X| + 1
  for (const Cycle& c : k4.cycles) {
    CHECK(c.vertices.front() == c.vertices.back());
    CHECK(c.edges.size() + 1 == c.vertices.size());
    CHECK(c.edges.back() == c.non_tree_edge);
    CHECK(!k4.in_tree[c.non_tree_edge]);
  }
  const CycleBase c5 = fundamental_cycle_base(cycle_graph(5));
  REQUIRE(c5.cycles.size() == 1);
  CHECK(c5.cycles[0].length() == 5);
  CHECK(c5.cycles[0].odd());
  CHECK(fundamental_cycle_base(star_graph(4)).cycles.empty());

  // a pair of parallel edges is an even 2-cycle
  const CycleBase par = fundamental_cycle_base(make({"x", "y"}, {{0, 1}, {0, 1}}));
  REQUIRE(par.cycles.size() == 1);
  CHECK(par.cycles[0].length() == 2);
  const auto walk = make_closed_walk(make({"x", "y"}, {{0, 1}, {0, 1}}), par.cycles[0].vertices, par.cycles[0].edges);
  CHECK(walk.non_backtracking);
}

TEST_CASE("joined paths of two odd cycles are even and non-backtracking") {
  // two triangles joined by a path of length 2: x0 x1 x2 | x2 - x3 - x4 | x4 x5 x6
  const WeightedGraph g = make({"x0", "x1", "x2", "x3", "x4", "x5", "x6"},
                               {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});
  const CycleBase base = fundamental_cycle_base(g);
  REQUIRE(base.cycles.size() == 2);
  CHECK(base.cycles[0].odd());
  CHECK(base.cycles[1].odd());
  const NonBacktrackingPath p = even_joined_path(g, base, 0, 1);
  CHECK(p.edges.size() % 2 == 0);
  CHECK(p.non_backtracking);
  CHECK(p.vertices.front() == p.vertices.back());
  // cycle edges are crossed once; the connector is walked out and back at equal parity
  for (std::size_t e : {0, 1, 2, 5, 6, 7}) CHECK(std::abs(p.defect[e]) == 1);
  CHECK(std::abs(p.defect[3]) == 2);
  CHECK(std::abs(p.defect[4]) == 2);
}

TEST_CASE("substituent validation") {
  const ValidationReport ok = check_substituent(path_substituent(3));
  CHECK(ok.ok());

  Substituent bad = path_substituent(3);
  bad.gamma = {0, 1, 2, 3};  // identity does not swap a and b
  CHECK(!check_substituent(bad).ok());
  CHECK(code_of([&] { validate_substituent(bad); }) == ErrorCode::GammaDoesNotSwapAB);

  Substituent not_auto = chord_substituent();
  not_auto.gamma = {2, 1, 0, 3};  // swaps a, b; the heavier a-u edge has no image
  not_auto.graph = WeightedGraph(not_auto.graph.labels(),
                                 {{0, 1, Rational(2)}, {1, 2, Rational(1)}, {2, 3, Rational(1)}, {3, 0, Rational(1)},
                                  {1, 3, Rational(1)}});
  CHECK(code_of([&] { validate_substituent(not_auto); }) == ErrorCode::GammaNotAutomorphism);

  // a - v - b with pendant leaves at a and b: removing b isolates b's leaf
  Substituent leaves;
  leaves.graph = make({"a", "b", "v", "la", "lb"}, {{0, 2}, {2, 1}, {0, 3}, {1, 4}});
  leaves.a = 0;
  leaves.b = 1;
  leaves.gamma = {1, 0, 2, 4, 3};
  CHECK(code_of([&] { validate_substituent(leaves); }) == ErrorCode::VMinusBDisconnected);

  Substituent edge;
  edge.graph = make({"a", "b"}, {{0, 1}});
  edge.gamma = {1, 0};
  CHECK(code_of([&] { validate_substituent(edge); }) == ErrorCode::EmptyInterior);
}

TEST_CASE("automorphism search") {
  const auto g = find_gamma(path_substituent(4).graph, 0, 4);
  REQUIRE(g);
  CHECK(*g == std::vector<std::size_t>{4, 3, 2, 1, 0});
  // a triangle with a pendant at a: no automorphism swaps a and b
  CHECK(!find_gamma(make({"a", "b", "c", "p"}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}), 0, 1).has_value());
}

TEST_CASE("random orientations are valid") {
  std::mt19937_64 rng(3);
  const WeightedGraph g = complete_graph(5);
  const Orientation o = Orientation::random(g, rng);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    CHECK(((o.tail[e] == ed.u && o.head[e] == ed.v) || (o.tail[e] == ed.v && o.head[e] == ed.u)));
  }
}

TEST_CASE("graph files round-trip exactly") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    const WeightedGraph g = random_host(rng, 7);
    const WeightedGraph back = graph_from_json(nlohmann::json::parse(graph_to_json(g).dump()));
    REQUIRE(back.vertex_count() == g.vertex_count());
    REQUIRE(back.edge_count() == g.edge_count());
    CHECK(back.labels() == g.labels());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      CHECK(back.edge(e).u == g.edge(e).u);
      CHECK(back.edge(e).v == g.edge(e).v);
      CHECK(back.edge(e).conductance == g.edge(e).conductance);
    }
    const Substituent s = random_substituent(rng, 8);
    const Substituent t = substituent_from_json(nlohmann::json::parse(substituent_to_json(s).dump()));
    CHECK(t.a == s.a);
    CHECK(t.b == s.b);
    CHECK(t.gamma == s.gamma);
  }
}

TEST_CASE("graph file parsing") {
  const auto g = graph_from_json(nlohmann::json::parse(R"({"vertices": ["p", "q", "r"],
      "edges": [["p", "q", "3/6"], ["q", "r", 0.25], ["r", "p"]]})"));
  CHECK(g.edge(0).conductance == Rational(1, 2));
  CHECK(g.edge(1).conductance == Rational(1, 4));
  CHECK(g.edge(2).conductance == Rational(1));
  CHECK(code_of([] { graph_from_json(nlohmann::json::parse(R"({"vertices": ["p"], "edges": [["p", "z"]]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { load_graph("/nonexistent/graph.json"); }) == ErrorCode::ParseError);

  // gamma is searched for when the file omits it
  const auto s = substituent_from_json(nlohmann::json::parse(R"({"vertices": ["a", "m", "b"], "a": "a", "b": "b",
      "edges": [["a", "m"], ["m", "b"]]})"));
  CHECK(s.gamma == std::vector<std::size_t>{2, 1, 0});
}
