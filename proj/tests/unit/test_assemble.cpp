#include <doctest.h>

#include <gsub/assemble.hpp>
#include <gsub/error.hpp>
#include <gsub/fixtures.hpp>
#include <gsub/graph_io.hpp>

#include <cmath>
#include <numbers>

using namespace gsub;

TEST_CASE("multiplicity table cells") {
  using T = EigenType;
  // X = 5-cycle: |X| = 5, |E| = 5, not bipartite
  CHECK(interior_multiplicity(T::I, T::I, 1, 5, 5, false) == 5);
  CHECK(interior_multiplicity(std::nullopt, T::II, 1, 5, 5, false) == 0);
  CHECK(interior_multiplicity(std::nullopt, T::III, 1, 5, 5, false) == 1);
  CHECK(interior_multiplicity(std::nullopt, T::IV, 2, 5, 5, false) == 5);
  CHECK(interior_multiplicity(T::III, T::II, 1, 5, 5, false) == 0);
  // K4: |X| = 4, |E| = 6
  CHECK(interior_multiplicity(T::II, T::I, 2, 4, 6, false) == 13);
  CHECK(interior_multiplicity(T::IV, T::I, 1, 4, 6, false) == 10);
  CHECK(interior_multiplicity(T::IV, T::II, 2, 4, 6, true) == 13);
  CHECK(interior_multiplicity(T::III, T::III, 1, 4, 6, true) == 4);
  CHECK(interior_multiplicity(T::II, T::IV, 2, 4, 6, false) == 9);
  CHECK_THROWS_AS(interior_multiplicity(std::nullopt, T::I, 1, 4, 6, false), Error);
}

TEST_CASE("S1 and S2 for the chord substituent on the 5-cycle") {
  const Analysis an = analyze(cycle_graph(5), chord_substituent());
  CHECK(an.unicyclic_odd());
  CHECK(!an.bipartite());
  CHECK(an.interior_connected());
  const auto s1 = solve_S1(an.tf, an.specP, an.interior_values());
  REQUIRE(s1.size() == 6);
  // phi(z) = 1 gives z = 1 and z = -2/3
  std::vector<double> ones;
  for (const auto& r : s1)
    if (r.host_cluster == 0) ones.push_back(r.lambda_star);
  REQUIRE(ones.size() == 2);
  CHECK(std::min(ones[0], ones[1]) == doctest::Approx(-2.0 / 3).epsilon(1e-13));
  CHECK(std::max(ones[0], ones[1]) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(solve_S2(an.tf, an.typedQ, an.interior_values()).empty());

  const auto exc = exceptional_set(an);
  REQUIRE(exc.size() == 1);
  CHECK(exc[0].value == doctest::Approx(1.0 / 3));
  CHECK(exc[0].rule == ExcRule::B);
}

TEST_CASE("adjacent circle gives S2 = {cos(k pi/L)}") {
  const Analysis an = analyze(cycle_graph(4), circle_substituent(8, Placement::Adjacent));
  const auto s2 = solve_S2(an.tf, an.typedQ, an.interior_values());
  REQUIRE(s2.size() == 3);
  for (std::size_t k = 1; k <= 3; ++k) {
    bool hit = false;
    for (double v : s2) hit = hit || std::abs(v - std::cos(k * std::numbers::pi / 4)) < 1e-12;
    CHECK(hit);
  }
  const SpectrumReport rep = assemble(an);
  for (const auto& e : rep.entries)
    if (e.kind == EntryKind::S2) CHECK(e.multiplicity == 4);
}

TEST_CASE("a tree host excludes IIo values outside spec(Q)") {
  const Analysis an = analyze(star_graph(3), chord_substituent());
  CHECK(an.tree());
  const auto exc = exceptional_set(an);
  REQUIRE(exc.size() == 1);
  CHECK(exc[0].rule == ExcRule::A);
  const SpectrumReport rep = assemble(an);
  CHECK(rep.total == rep.expected_total);
  CHECK(rep.exc.size() == 1);
}

TEST_CASE("assembled report for the chord substituent") {
  const SpectrumReport rep = assemble(analyze(cycle_graph(5), chord_substituent()));
  CHECK(rep.total == 15);
  CHECK(rep.expected_total == 15);
  REQUIRE(rep.entries.size() == 7);
  CHECK(rep.entries[4].kind == EntryKind::Interior);
  CHECK(rep.entries[4].multiplicity == 5);
  CHECK(rep.gap.applicable);
  CHECK(rep.gap.lambda1 == doctest::Approx((std::sqrt(5.0) - 1) / 4));
  CHECK(rep.gap.lambda1_star == doctest::Approx((1 + std::sqrt(10 + 3 * std::sqrt(5.0))) / 6).epsilon(1e-12));
  CHECK(rep.gap.equals_second_entry);
}

TEST_CASE("interior value where the kernels stay finite and phi hits spec(P)") {
  // V: a, b joined directly and through a hub v4 carrying two pendant vertices.
  // The pendant difference is a type I/Io eigenvector at 0 that the boundary never sees,
  // and phi(0) = 0 is an eigenvalue of the weighted path host.
  const WeightedGraph X = graph_from_json(nlohmann::json::parse(
      R"({"vertices": ["x0", "x1", "x2"], "edges": [["x0", "x2", "2"], ["x0", "x1", "1"], ["x0", "x1", "2"]]})"));
  const Substituent s = substituent_from_json(nlohmann::json::parse(
      R"({"vertices": ["a", "b", "v2", "v3", "v4"], "a": "a", "b": "b",
          "edges": [["a", "b", "1/2"], ["a", "v4", "2"], ["b", "v4", "2"], ["v2", "v4", "1/2"], ["v3", "v4", "1/2"]],
          "gamma": [["a", "b"], ["b", "a"], ["v2", "v3"], ["v3", "v2"]]})"));
  const SpectrumReport rep = assemble(analyze(X, s));
  CHECK(rep.total == 12);
  bool found = false;
  for (const auto& e : rep.entries)
    if (std::abs(e.value) < 1e-9) {
      found = true;
      CHECK(e.kind == EntryKind::Interior);
      CHECK(e.multiplicity == 4);  // 3 nodal + 1 extending the host eigenfunction at 0
      CHECK(e.host_multiplicity == 1);
    }
  CHECK(found);
}

TEST_CASE("input validation") {
  WeightedGraph disconnected({"x", "y", "w"}, {{0, 1, Rational(1)}});
  CHECK_THROWS_AS(analyze(disconnected, chord_substituent()), Error);
  CHECK_THROWS_AS(analyze(WeightedGraph({"x"}, {}), chord_substituent()), Error);
}
