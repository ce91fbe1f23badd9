#include <doctest.h>

#include <gsub/error.hpp>
#include <gsub/polynomial.hpp>
#include <gsub/rational.hpp>
#include <gsub/rational_function.hpp>
#include <gsub/resolvent.hpp>

#include <cmath>
#include <random>

using namespace gsub;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

const Polynomial z = Polynomial::variable();

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 4);
  RationalMatrix M(n, std::vector<Rational>(n));
  for (auto& row : M)
    for (auto& x : row) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
  return M;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(to_string(Rational(10, 4)) == "5/2");
  CHECK(to_string(Rational(-7)) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("polynomial arithmetic") {
  CHECK((z + Polynomial(1)) * (z - Polynomial(1)) == P({-1, 0, 1}));
  CHECK(Polynomial().degree() == -1);
  CHECK(P({0, 0, 3}).derivative() == P({0, 6}));

  Polynomial q, r;
  Polynomial::divmod(P({1, 0, 0, 1}), P({1, 1}), q, r);  // z^3 + 1 = (z + 1)(z^2 - z + 1)
  CHECK(q == P({1, -1, 1}));
  CHECK(r.is_zero());

  const Polynomial g = Polynomial::gcd((z - Polynomial(1)) * (z - Polynomial(2)), (z - Polynomial(1)) * (z + Polynomial(3)));
  CHECK(g == P({-1, 1}));
  CHECK(P({-1, -1, 3}).evaluate(Rational(-1, 3)) == Rational(-1, 3));
  CHECK(parse_rational("010/3") == Rational(10, 3));
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(chebyshev(ChebyshevKind::First, 2) == P({-1, 0, 2}));
  CHECK(chebyshev(ChebyshevKind::Second, 3) == P({0, -4, 0, 8}));
  CHECK(chebyshev(ChebyshevKind::First, 5) == P({0, 5, 0, -20, 0, 16}));
  CHECK(chebyshev(ChebyshevKind::First, 5).to_string() == "5 z - 20 z^3 + 16 z^5");

  // T_n(cos t) = cos(n t), U_n(cos t) sin t = sin((n + 1) t)
  for (int n = 0; n <= 9; ++n)
    for (double t : {0.1, 0.7, 1.3, 2.9}) {
      CHECK(chebyshev(ChebyshevKind::First, n).evaluate(std::cos(t)) == doctest::Approx(std::cos(n * t)).epsilon(1e-12));
      CHECK(chebyshev(ChebyshevKind::Second, n).evaluate(std::cos(t)) * std::sin(t) ==
            doctest::Approx(std::sin((n + 1) * t)).epsilon(1e-12));
    }
}

TEST_CASE("rational functions are kept reduced") {
  const RationalFunction f(P({-1, 0, 1}), P({-1, 1}));
  CHECK(f == RationalFunction(P({1, 1})));
  const RationalFunction g(P({2}), P({-2, 6}));  // 2/(6z - 2) = (1/3)/(z - 1/3)
  CHECK(g.denominator().leading() == 1);
  CHECK(g.to_string() == "(1/3) / (-1/3 + z)");
  CHECK(!g.evaluate(Rational(1, 3)).has_value());
  CHECK(*g.evaluate(Rational(1)) == Rational(1, 2));
  CHECK_THROWS_AS(g.evaluate(1.0 / 3.0), Error);
  CHECK(RationalFunction::parse(g.to_string()) == g);

  const RationalFunction x = RationalFunction::variable();
  CHECK((x / (x + RationalFunction(1L))) + (RationalFunction(1L) / (x + RationalFunction(1L))) == RationalFunction(1L));
  CHECK_THROWS(RationalFunction(P({1}), Polynomial()));
}

TEST_CASE("resolvent entries of small matrices") {
  const RationalMatrix zero = {{Rational(0)}};
  CHECK(resolvent_entry(zero, 0, 0) == RationalFunction(1L) / RationalFunction::variable());

  // Simple random walk on one edge: G(x,x|z) = z / (z^2 - 1).
  const RationalMatrix edge = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK(resolvent_entry(edge, 0, 0) == RationalFunction(z, P({-1, 0, 1})));
  CHECK(resolvent_entry(edge, 0, 1) == RationalFunction(P({1}), P({-1, 0, 1})));
  CHECK(characteristic_polynomial(edge) == P({-1, 0, 1}));
  CHECK(resolvent_entry_at(edge, 0, 0, Rational(2)) == Rational(2, 3));
}

TEST_CASE("resolvent solves (zI - M) G = I over Q(z)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 3 + trial % 2;
    const RationalMatrix M = random_matrix(rng, n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> e(n, Rational(0));
      e[j] = 1;
      const auto col = resolvent_solve(M, e);
      for (std::size_t i = 0; i < n; ++i) {
        RationalFunction acc = RationalFunction::variable() * col[i];
        for (std::size_t k = 0; k < n; ++k) acc -= RationalFunction(M[i][k]) * col[k];
        CHECK(acc == RationalFunction(i == j ? 1L : 0L));
      }
    }
    // trace of the resolvent is p'/p with p the characteristic polynomial
    RationalFunction trace;
    for (std::size_t i = 0; i < n; ++i) trace += resolvent_entry(M, i, i);
    const Polynomial p = characteristic_polynomial(M);
    CHECK(p.degree() == static_cast<int>(n));
    CHECK(trace == RationalFunction(p.derivative(), p));
    // pointwise evaluation agrees with the symbolic entry
    const Rational at(7, 2);
    if (auto v = resolvent_entry(M, 0, n - 1).evaluate(at)) CHECK(resolvent_entry_at(M, 0, n - 1, at) == *v);
  }
}

TEST_CASE("exact solve refuses singular systems") {
  const RationalMatrix A = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK_THROWS_AS(solve_exact(A, {Rational(1), Rational(1)}), std::domain_error);
  const RationalMatrix B = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  const auto x = solve_exact(B, {Rational(3), Rational(5)});
  CHECK(x[0] == Rational(4, 5));
  CHECK(x[1] == Rational(7, 5));
}
