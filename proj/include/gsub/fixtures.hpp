#pragma once

#include <gsub/graph.hpp>

#include <cstddef>
#include <random>

namespace gsub {

WeightedGraph path_graph(std::size_t vertices);
WeightedGraph cycle_graph(std::size_t n);
WeightedGraph star_graph(std::size_t leaves);
WeightedGraph complete_graph(std::size_t n);

/// Path v0..vL with a = v0, b = vL and the reflection j -> L - j.
Substituent path_substituent(std::size_t L);

enum class Placement { Antipodal, Adjacent };

/// Cycle v0..v_{M-1}. Antipodal (M even): a = v0, b = v_{M/2}, gamma j -> (M/2 - j) mod M.
/// Adjacent: a = v0, b = v_{M-1}, gamma j -> M - 1 - j.
Substituent circle_substituent(std::size_t M, Placement placement);

/// 4-cycle a-u-b-v-a with chord u-v, gamma = (a b)(u v).
Substituent chord_substituent();

/// 2N-circle with unit conductances except a(x_{2N-1}, x_0) = a; a = 0 drops that edge.
WeightedGraph weighted_circle(const Rational& a, std::size_t N);

/// Connected multigraph on 2..max_vertices vertices, conductances from {1, 2, 3, 1/2}.
WeightedGraph random_host(std::mt19937_64& rng, std::size_t max_vertices, bool allow_parallel = true);

/// Valid substituent on 3..max_vertices vertices with gamma = (a b) times
/// random 1-, 2- and 4-cycles on the rest; edges are added per gamma-orbit.
Substituent random_substituent(std::mt19937_64& rng, std::size_t max_vertices);

}  // namespace gsub
