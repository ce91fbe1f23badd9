#include <gsub/error.hpp>
#include <gsub/fixtures.hpp>

#include <algorithm>
#include <set>

namespace gsub {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Rational random_conductance(std::mt19937_64& rng) {
  static const Rational choices[] = {Rational(1), Rational(2), Rational(3), Rational(1, 2)};
  return choices[std::uniform_int_distribution<int>(0, 3)(rng)];
}

}  // namespace

WeightedGraph path_graph(std::size_t vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1, Rational(1)});
  return WeightedGraph(numbered("x", vertices), std::move(edges));
}

WeightedGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, Rational(1)});
  return WeightedGraph(numbered("x", n), std::move(edges));
}

WeightedGraph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, i, Rational(1)});
  return WeightedGraph(numbered("x", leaves + 1), std::move(edges));
}

WeightedGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, Rational(1)});
  return WeightedGraph(numbered("x", n), std::move(edges));
}

Substituent path_substituent(std::size_t L) {
  if (L < 2) throw Error(ErrorCode::EmptyInterior, "path substituent needs L >= 2");
  Substituent s;
  s.graph = path_graph(L + 1);
  s.graph = WeightedGraph(numbered("v", L + 1), s.graph.edges());
  s.a = 0;
  s.b = L;
  for (std::size_t j = 0; j <= L; ++j) s.gamma.push_back(L - j);
  return s;
}

Substituent circle_substituent(std::size_t M, Placement placement) {
  if (M < 3) throw Error(ErrorCode::InvalidGraph, "circle substituent needs M >= 3");
  Substituent s;
  s.graph = WeightedGraph(numbered("v", M), cycle_graph(M).edges());
  s.a = 0;
  if (placement == Placement::Antipodal) {
    if (M % 2 != 0) throw Error(ErrorCode::InvalidGraph, "antipodal placement needs an even circle");
    const std::size_t L = M / 2;
    s.b = L;
    for (std::size_t j = 0; j < M; ++j) s.gamma.push_back((L + M - j) % M);
  } else {
    s.b = M - 1;
    for (std::size_t j = 0; j < M; ++j) s.gamma.push_back(M - 1 - j);
  }
  return s;
}

Substituent chord_substituent() {
  Substituent s;
  // a=0, u=1, b=2, v=3
  s.graph = WeightedGraph({"a", "u", "b", "v"}, {{0, 1, Rational(1)},
                                                 {1, 2, Rational(1)},
                                                 {2, 3, Rational(1)},
                                                 {3, 0, Rational(1)},
                                                 {1, 3, Rational(1)}});
  s.a = 0;
  s.b = 2;
  s.gamma = {2, 3, 0, 1};
  return s;
}

WeightedGraph weighted_circle(const Rational& a, std::size_t N) {
  if (N < 2) throw Error(ErrorCode::InvalidGraph, "weighted circle needs N >= 2");
  if (a < 0 || a > 1) throw Error(ErrorCode::InvalidGraph, "conductance parameter must lie in [0,1]");
  const std::size_t n = 2 * N;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Rational(1)});
  if (a > 0) edges.push_back({n - 1, 0, a});
  return WeightedGraph(numbered("x", n), std::move(edges));
}

WeightedGraph random_host(std::mt19937_64& rng, std::size_t max_vertices, bool allow_parallel) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, max_vertices))(rng);
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    edges.push_back({u, v, random_conductance(rng)});
    seen.insert({u, v});
  }
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, n)(rng);
  for (std::size_t k = 0; k < extra; ++k) {
    std::size_t u = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t v = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!allow_parallel && seen.count({u, v})) continue;
    seen.insert({u, v});
    edges.push_back({u, v, random_conductance(rng)});
  }
  // Shuffle vertex numbering so that vertex 0 is not always the tree root.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  return WeightedGraph(numbered("x", n), std::move(edges));
}

Substituent random_substituent(std::mt19937_64& rng, std::size_t max_vertices) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, std::max<std::size_t>(3, max_vertices))(rng);
    std::vector<std::size_t> gamma(n);
    gamma[0] = 1;
    gamma[1] = 0;
    std::vector<std::size_t> rest;
    for (std::size_t v = 2; v < n; ++v) rest.push_back(v);
    std::shuffle(rest.begin(), rest.end(), rng);
    std::size_t i = 0;
    while (i < rest.size()) {
      std::size_t len = std::vector<std::size_t>{1, 2, 4}[std::uniform_int_distribution<int>(0, 2)(rng)];
      len = std::min(len, rest.size() - i);
      if (len == 3) len = 2;
      for (std::size_t k = 0; k < len; ++k) gamma[rest[i + k]] = rest[i + (k + 1) % len];
      i += len;
    }

    // Orbits of unordered pairs under <gamma>.
    std::set<std::pair<std::size_t, std::size_t>> done;
    std::vector<Edge> edges;
    std::bernoulli_distribution take(0.45);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (done.count({u, v})) continue;
        std::vector<std::pair<std::size_t, std::size_t>> orbit;
        std::size_t x = u, y = v;
        do {
          const auto key = std::minmax(x, y);
          if (!done.count(key)) {
            done.insert(key);
            orbit.push_back(key);
          }
          x = gamma[x];
          y = gamma[y];
        } while (!(x == u && y == v));
        if (!take(rng)) continue;
        const Rational c = random_conductance(rng);
        for (const auto& [p, q] : orbit) edges.push_back({p, q, c});
      }
    }
    Substituent s;
    std::vector<std::string> labels{"a", "b"};
    for (std::size_t v = 2; v < n; ++v) labels.push_back("v" + std::to_string(v));
    s.graph = WeightedGraph(std::move(labels), std::move(edges));
    s.a = 0;
    s.b = 1;
    s.gamma = std::move(gamma);
    if (check_substituent(s).ok()) return s;
  }
  throw Error(ErrorCode::InvalidGraph, "could not generate a random substituent");
}

}  // namespace gsub
