#include <doctest.h>

#include <gsub/eigen.hpp>
#include <gsub/fixtures.hpp>
#include <gsub/substitution.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace gsub;

TEST_CASE("size of X[V]") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 20; ++k) {
    const WeightedGraph X = random_host(rng, 7);
    const Substituent s = random_substituent(rng, 8);
    const SubstitutedGraph sg = substitute(X, Orientation::standard(X), s);
    CHECK(sg.graph.vertex_count() == X.vertex_count() + X.edge_count() * (s.graph.vertex_count() - 2));
    CHECK(sg.graph.edge_count() == X.edge_count() * s.graph.edge_count());
    CHECK(sg.graph.connected());
    // conductances are the substituent's, scaled by the host edge
    for (std::size_t e = 0; e < X.edge_count(); ++e) {
      CHECK(sg.pi(e, s.a) == sg.orientation.tail[e]);
      CHECK(sg.pi(e, s.b) == sg.orientation.head[e]);
      const Edge& ve = s.graph.edge(0);
      const Edge& ge = sg.graph.edge(e * s.graph.edge_count());
      CHECK(ge.u == sg.pi(e, ve.u));
      CHECK(ge.v == sg.pi(e, ve.v));
      CHECK(ge.conductance == X.edge(e).conductance * ve.conductance);
    }
  }
}

TEST_CASE("chord substituent on the 5-cycle") {
  const WeightedGraph X = cycle_graph(5);
  const SubstitutedGraph sg = substitute(X, Orientation::standard(X), chord_substituent());
  CHECK(sg.graph.vertex_count() == 15);
  CHECK(sg.graph.edge_count() == 25);
  CHECK(sg.host_count() == 5);
  std::size_t interior = 0;
  for (const auto& o : sg.origin) interior += o.kind == VertexKind::Interior;
  CHECK(interior == 10);
  CHECK(sg.origin[sg.pi(2, 1)].edge == 2);
  CHECK(sg.origin[sg.pi(2, 1)].v == 1);
}

TEST_CASE("a path substituted into one edge is a longer path") {
  const WeightedGraph X = path_graph(2);
  for (std::size_t L = 2; L <= 6; ++L) {
    const SubstitutedGraph sg = substitute(X, Orientation::standard(X), path_substituent(L));
    const EigenDecomposition d = eigen(ReversibleOperator(sg.graph));
    REQUIRE(d.clusters.size() == L + 1);
    for (std::size_t k = 0; k <= L; ++k)
      CHECK(d.clusters[k].value == doctest::Approx(std::cos(k * std::numbers::pi / L)).epsilon(1e-12));
  }
}

TEST_CASE("edge orientation does not change the spectrum") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 10; ++k) {
    const WeightedGraph X = random_host(rng, 6);
    const Substituent s = random_substituent(rng, 7);
    CHECK(reorient_equivalence_check(X, s, 5, 100 + k));
  }
}
