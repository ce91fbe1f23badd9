#pragma once

#include <gsub/graph.hpp>

#include <json.hpp>

#include <string>

namespace gsub {

// Graph documents are JSON objects:
//   {"vertices": ["x0", ...], "edges": [["x0", "x1", "1/2"], ...]}
// Substituents add "a", "b" and "gamma": [["a", "b"], ["b", "a"], ...];
// vertices missing from gamma are fixed. Conductances may be integers,
// "p/q" strings or decimals; output is always lowest-terms "p/q".

WeightedGraph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const WeightedGraph& g);

/// Without "gamma" a search is attempted (small V only). Does not validate.
Substituent substituent_from_json(const nlohmann::json& doc);
nlohmann::json substituent_to_json(const Substituent& s);

nlohmann::json read_json_file(const std::string& path);
WeightedGraph load_graph(const std::string& path);
Substituent load_substituent(const std::string& path);

}  // namespace gsub
