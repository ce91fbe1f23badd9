#include <doctest.h>

#include <gsub/assemble.hpp>
#include <gsub/error.hpp>
#include <gsub/fixtures.hpp>
#include <gsub/oracle.hpp>

#include <cmath>

using namespace gsub;

namespace {

SubstitutedGraph chord_on_c5() {
  const WeightedGraph X = cycle_graph(5);
  return substitute(X, Orientation::standard(X), chord_substituent());
}

}  // namespace

TEST_CASE("direct spectrum of the chord substitution") {
  const EigenDecomposition d = direct_spectrum(chord_on_c5());
  REQUIRE(d.clusters.size() == 7);
  const std::vector<std::size_t> mult = {1, 2, 2, 2, 5, 2, 1};
  for (std::size_t i = 0; i < 7; ++i) CHECK(d.clusters[i].multiplicity == mult[i]);
  CHECK(d.total_multiplicity() == 15);
  CHECK(d.clusters[4].value == doctest::Approx(-1.0 / 3).epsilon(1e-13));
  CHECK_THROWS_AS(direct_spectrum(chord_on_c5(), 10), Error);
}

TEST_CASE("single-edge host reproduces spec(Q)") {
  const WeightedGraph X = path_graph(2);
  const Substituent s = chord_substituent();
  const EigenDecomposition d = direct_spectrum(substitute(X, Orientation::standard(X), s));
  const EigenDecomposition q = eigen(ReversibleOperator(s.graph));
  REQUIRE(d.clusters.size() == q.clusters.size());
  for (std::size_t i = 0; i < d.clusters.size(); ++i) {
    CHECK(d.clusters[i].value == doctest::Approx(q.clusters[i].value).epsilon(1e-13));
    CHECK(d.clusters[i].multiplicity == q.clusters[i].multiplicity);
  }
}

TEST_CASE("nodal dimension") {
  const EigenDecomposition d = direct_spectrum(chord_on_c5());
  CHECK(nodal_dimension(d, -1.0 / 3, 5) == 5);
  CHECK(nodal_dimension(d, 1.0, 5) == 0);
  CHECK(nodal_dimension(d, -2.0 / 3, 5) == 0);
  CHECK_THROWS_AS(nodal_dimension(d, 0.5, 5), Error);

  // S2 eigenspaces are fully visible on the host
  const WeightedGraph X = cycle_graph(4);
  const SubstitutedGraph sg = substitute(X, Orientation::standard(X), circle_substituent(4, Placement::Adjacent));
  const EigenDecomposition e = direct_spectrum(sg);
  CHECK(e.clusters[*e.find(0.0, 1e-9)].multiplicity >= 4);
  CHECK(nodal_dimension(e, 0.0, 4) == e.clusters[*e.find(0.0, 1e-9)].multiplicity - 4);
}

TEST_CASE("spectral dominance") {
  const DominanceReport sub = dominance_report(direct_spectrum(chord_on_c5()));
  for (std::size_t x = 0; x < 5; ++x) {
    CHECK(!sub.vertices[x].dominant);
    for (double v : sub.vertices[x].local) CHECK(std::abs(v + 1.0 / 3) > 1e-6);
  }
  const DominanceReport c5 = dominance_report(eigen(ReversibleOperator(cycle_graph(5))));
  for (const auto& v : c5.vertices) CHECK(v.dominant);

  // the 4-cycle substituent hides part of the spectrum from every host vertex
  for (std::size_t n : {3, 4, 5}) {
    const WeightedGraph X = complete_graph(n);
    const SubstitutedGraph sg = substitute(X, Orientation::standard(X), circle_substituent(4, Placement::Antipodal));
    const DominanceReport r = dominance_report(direct_spectrum(sg));
    for (std::size_t x = 0; x < n; ++x) CHECK(!r.vertices[x].dominant);
  }
}

TEST_CASE("comparison flags a wrong report") {
  const Analysis an = analyze(cycle_graph(5), chord_substituent());
  SpectrumReport rep = assemble(an);
  const EigenDecomposition d = direct_spectrum(an.sg);
  CHECK(compare_with_oracle(rep, d).agree);
  rep.entries[4].multiplicity = 4;
  CHECK(!compare_with_oracle(rep, d).agree);
  rep.entries[4].multiplicity = 5;
  rep.entries[1].value += 1e-6;
  CHECK(!compare_with_oracle(rep, d).agree);
}

TEST_CASE("bipartite spectra are symmetric") {
  const WeightedGraph X = cycle_graph(4);
  CHECK(symmetric_spectrum(direct_spectrum(substitute(X, Orientation::standard(X), path_substituent(3)))));
  CHECK(!symmetric_spectrum(direct_spectrum(chord_on_c5())));
}

TEST_CASE("circle with one weighted edge") {
  const double pi = 3.14159265358979323846;
  CHECK(eigen(ReversibleOperator(weighted_circle(Rational(1), 3))).clusters[1].value ==
        doctest::Approx(0.5).epsilon(1e-13));
  const WeightedGraph line = weighted_circle(Rational(0), 3);
  CHECK(line.edge_count() == 5);
  CHECK(eigen(ReversibleOperator(line)).clusters[1].value == doctest::Approx(std::cos(pi / 5)).epsilon(1e-13));
}
