#include <doctest.h>

#include <gsub/classify.hpp>
#include <gsub/fixtures.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace gsub;

namespace {

struct Typed {
  std::vector<TypedEigenvalue> Q, interior;
};

Typed run(const Substituent& s) {
  const ReversibleOperator op(s.graph);
  return {classify_Q(s, eigen(op)), classify_interior(s, eigen(op.without({s.a, s.b})))};
}

const TypedEigenvalue& at(const std::vector<TypedEigenvalue>& ts, double v) {
  for (const auto& t : ts)
    if (std::abs(t.value - v) < 1e-9) return t;
  FAIL("no eigenvalue near " << v);
  return ts.front();
}

double cospi(double num, double den) { return std::cos(num * std::numbers::pi / den); }

}  // namespace

TEST_CASE("chord substituent types") {
  const Typed t = run(chord_substituent());
  REQUIRE(t.Q.size() == 4);
  CHECK(at(t.Q, 1.0).type == EigenType::II);
  CHECK(at(t.Q, 0.0).type == EigenType::III);
  CHECK(at(t.Q, -1.0 / 3).type == EigenType::I);
  CHECK(at(t.Q, -2.0 / 3).type == EigenType::II);
  for (const auto& q : t.Q) {
    CHECK(q.nu == 1);
    CHECK(!q.rank_ambiguous);
  }
  REQUIRE(t.interior.size() == 2);
  CHECK(at(t.interior, -1.0 / 3).type == EigenType::I);
  CHECK(at(t.interior, 1.0 / 3).type == EigenType::II);
  CHECK(to_string(EigenType::II, Source::Interior) == "IIo");
}

TEST_CASE("path types alternate with k") {
  for (std::size_t L = 2; L <= 7; ++L) {
    const Typed t = run(path_substituent(L));
    REQUIRE(t.Q.size() == L + 1);
    for (std::size_t k = 0; k <= L; ++k) {
      const auto& q = at(t.Q, cospi(k, L));
      CHECK(q.nu == 1);
      CHECK(q.nu_prime == 0);
      CHECK(q.type == (k % 2 == 0 ? EigenType::II : EigenType::III));
    }
    for (std::size_t k = 1; k < L; ++k)
      CHECK(at(t.interior, cospi(k, L)).type == (k % 2 == 1 ? EigenType::II : EigenType::III));
  }
}

TEST_CASE("circle with antipodal marks") {
  for (std::size_t L : {2, 3, 4}) {
    const Typed t = run(circle_substituent(2 * L, Placement::Antipodal));
    CHECK(at(t.Q, 1.0).type == EigenType::II);
    CHECK(at(t.Q, -1.0).type == (L % 2 == 0 ? EigenType::II : EigenType::III));
    for (std::size_t k = 1; k < L; ++k) {
      const auto& q = at(t.Q, cospi(k, L));
      CHECK(q.nu == 2);
      CHECK(q.nu_prime == 1);
      CHECK(q.type == (k % 2 == 0 ? EigenType::II : EigenType::III));
      const auto& o = at(t.interior, cospi(k, L));
      CHECK(o.nu == 2);
      CHECK(o.nu_prime == 1);
      CHECK(o.type == (k % 2 == 1 ? EigenType::II : EigenType::III));
    }
  }
}

TEST_CASE("circle with adjacent marks") {
  for (std::size_t L : {2, 3, 4}) {
    const std::size_t M = 2 * L;
    const Typed t = run(circle_substituent(M, Placement::Adjacent));
    CHECK(at(t.Q, 1.0).type == EigenType::II);
    CHECK(at(t.Q, -1.0).type == EigenType::III);
    for (std::size_t k = 1; k < L; ++k) {
      const auto& q = at(t.Q, cospi(k, L));
      CHECK(q.type == EigenType::IV);
      CHECK(q.nu == 2);
      REQUIRE(q.tails.size() == 2);
    }
    REQUIRE(t.interior.size() == M - 2);
    for (std::size_t l = 1; l <= M - 2; ++l) {
      const auto& o = at(t.interior, cospi(l, M - 1));
      CHECK(o.nu == 1);
      CHECK(o.type == (l % 2 == 1 ? EigenType::II : EigenType::III));
    }
  }
}

TEST_CASE("normal forms hold for random substituents") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 40; ++k) {
    const Substituent s = random_substituent(rng, 8);
    const Typed t = run(s);
    std::size_t total = 0;
    for (const auto* list : {&t.Q, &t.interior})
      for (const auto& e : *list) {
        CHECK(normal_form_defect(s, e) <= 1e-7);
        CHECK(e.block.size() == e.nu_prime);
        const std::size_t rank = e.nu - e.nu_prime;
        CHECK(rank == (e.type == EigenType::I ? 0u : e.type == EigenType::IV ? 2u : 1u));
        if (list == &t.Q) total += e.nu;
      }
    CHECK(total == s.graph.vertex_count());
  }
}
