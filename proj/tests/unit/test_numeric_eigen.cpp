#include <doctest.h>

#include <gsub/eigen.hpp>
#include <gsub/error.hpp>
#include <gsub/fixtures.hpp>
#include <gsub/linalg.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace gsub;

TEST_CASE("Jacobi on a 2x2 matrix") {
  Matrix S(2, 2);
  S(0, 0) = 2;
  S(0, 1) = S(1, 0) = 1;
  S(1, 1) = 2;
  const SymmetricEigen e = jacobi_eigen(S);
  CHECK(e.values[0] == doctest::Approx(3.0));
  CHECK(e.values[1] == doctest::Approx(1.0));
  CHECK(std::abs(std::abs(e.vectors(0, 0)) - std::sqrt(0.5)) < 1e-14);
}

TEST_CASE("singular values and rank") {
  Matrix A(3, 2);
  A(0, 0) = 3;
  A(1, 1) = 4;
  const auto sv = singular_values(A);
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == doctest::Approx(4.0));
  CHECK(sv[1] == doctest::Approx(3.0));
  CHECK(numeric_rank(A) == 2);
  A(1, 1) = 1e-13;
  CHECK(numeric_rank(A) == 1);
}

TEST_CASE("simple random walk on the 5-cycle") {
  const EigenDecomposition d = eigen(ReversibleOperator(cycle_graph(5)));
  REQUIRE(d.clusters.size() == 3);
  const double pi = std::numbers::pi;
  CHECK(d.clusters[0].value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.clusters[1].value == doctest::Approx(std::cos(2 * pi / 5)).epsilon(1e-13));
  CHECK(d.clusters[2].value == doctest::Approx(std::cos(4 * pi / 5)).epsilon(1e-13));
  CHECK(d.clusters[0].multiplicity == 1);
  CHECK(d.clusters[1].multiplicity == 2);
  CHECK(d.clusters[2].multiplicity == 2);
  CHECK(d.total_multiplicity() == 5);
}

TEST_CASE("eigenbases are m-orthonormal eigenfunctions") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 10; ++k) {
    const WeightedGraph g = random_host(rng, 7);
    const ReversibleOperator P(g);
    const EigenDecomposition d = eigen(P);
    CHECK(d.total_multiplicity() == g.vertex_count());
    std::vector<std::vector<double>> all;
    for (const auto& c : d.clusters)
      for (const auto& f : c.basis) {
        const auto Pf = P.apply(f);
        for (std::size_t x = 0; x < f.size(); ++x) CHECK(std::abs(Pf[x] - c.value * f[x]) < 1e-12);
        all.push_back(f);
      }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        CHECK(std::abs(inner_m(all[i], all[j], d.measure) - (i == j ? 1.0 : 0.0)) < 1e-10);
    CHECK(spectral_radius(P) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("star graph: spectrum and local spectrum at the centre") {
  // K_{1,3}: eigenvalues 1, 0 (x2), -1; the 0-eigenfunctions vanish at the centre.
  const EigenDecomposition d = eigen(ReversibleOperator(star_graph(3)));
  REQUIRE(d.clusters.size() == 3);
  CHECK(d.clusters[1].multiplicity == 2);
  CHECK(std::abs(d.clusters[1].value) < 1e-14);
  const auto centre = local_spectrum(d, 0);
  REQUIRE(centre.size() == 2);
  CHECK(centre[0] == doctest::Approx(1.0));
  CHECK(centre[1] == doctest::Approx(-1.0));
  CHECK(local_spectrum(d, 1).size() == 3);
}

TEST_CASE("restricted operators") {
  // path x0 - x1 - x2 - x3 without its ends: 1/2 times the adjacency of an edge
  const ReversibleOperator P(path_graph(4));
  const ReversibleOperator inner = P.without({0, 3});
  CHECK(inner.support().size() == 2);
  CHECK(inner.transition(1, 2) == Rational(1, 2));
  CHECK(inner.transition(1, 0) == 0);
  const EigenDecomposition d = eigen(inner);
  REQUIRE(d.clusters.size() == 2);
  CHECK(d.clusters[0].value == doctest::Approx(0.5));
  CHECK(d.clusters[1].value == doctest::Approx(-0.5));
  CHECK(d.clusters[0].basis[0][0] == 0.0);
  CHECK(spectral_radius(inner) == doctest::Approx(0.5));
}
