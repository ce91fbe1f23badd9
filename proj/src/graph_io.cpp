#include <gsub/error.hpp>
#include <gsub/graph_io.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gsub {

using nlohmann::json;

namespace {

std::string label_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorCode::ParseError, "vertex labels must be strings or integers");
}

Rational conductance_of(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) return parse_rational(j.dump());
  throw Error(ErrorCode::ParseError, "conductance must be a number or a \"p/q\" string");
}

std::size_t vertex_of(const WeightedGraph& g, const json& j) {
  const std::string l = label_of(j);
  auto x = g.find_vertex(l);
  if (!x) throw Error(ErrorCode::ParseError, "unknown vertex label '" + l + "'");
  return *x;
}

}  // namespace

WeightedGraph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw Error(ErrorCode::ParseError, "graph document needs \"vertices\" and \"edges\"");
  std::vector<std::string> labels;
  for (const auto& v : doc.at("vertices")) labels.push_back(label_of(v));
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::InvalidGraph, "duplicate vertex label");
  }
  WeightedGraph tmp(labels, {});
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw Error(ErrorCode::ParseError, "edge entries are [A, B] or [A, B, conductance]");
    Edge ed;
    ed.u = vertex_of(tmp, e[0]);
    ed.v = vertex_of(tmp, e[1]);
    ed.conductance = e.size() == 3 ? conductance_of(e[2]) : Rational(1);
    edges.push_back(std::move(ed));
  }
  return WeightedGraph(std::move(labels), std::move(edges));
}

json graph_to_json(const WeightedGraph& g) {
  json doc;
  doc["vertices"] = g.labels();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v), to_string(e.conductance)});
  doc["edges"] = std::move(edges);
  return doc;
}

Substituent substituent_from_json(const json& doc) {
  Substituent s;
  s.graph = graph_from_json(doc);
  if (!doc.contains("a") || !doc.contains("b")) throw Error(ErrorCode::ParseError, "substituent needs \"a\" and \"b\"");
  s.a = vertex_of(s.graph, doc.at("a"));
  s.b = vertex_of(s.graph, doc.at("b"));
  const std::size_t n = s.graph.vertex_count();
  if (doc.contains("gamma")) {
    s.gamma.resize(n);
    for (std::size_t x = 0; x < n; ++x) s.gamma[x] = x;
    for (const auto& pr : doc.at("gamma")) {
      if (!pr.is_array() || pr.size() != 2) throw Error(ErrorCode::ParseError, "gamma entries are [from, to]");
      s.gamma[vertex_of(s.graph, pr[0])] = vertex_of(s.graph, pr[1]);
    }
  } else {
    auto g = find_gamma(s.graph, s.a, s.b);
    if (!g) throw Error(ErrorCode::GammaNotAutomorphism, "no automorphism exchanges a and b");
    s.gamma = *g;
  }
  return s;
}

json substituent_to_json(const Substituent& s) {
  json doc = graph_to_json(s.graph);
  doc["a"] = s.graph.label(s.a);
  doc["b"] = s.graph.label(s.b);
  json gamma = json::array();
  for (std::size_t x = 0; x < s.gamma.size(); ++x)
    if (s.gamma[x] != x) gamma.push_back({s.graph.label(x), s.graph.label(s.gamma[x])});
  doc["gamma"] = std::move(gamma);
  return doc;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

WeightedGraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

Substituent load_substituent(const std::string& path) { return substituent_from_json(read_json_file(path)); }

}  // namespace gsub
