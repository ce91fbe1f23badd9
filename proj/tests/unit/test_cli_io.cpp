#include <doctest.h>

#include <gsub/assemble.hpp>
#include <gsub/classify.hpp>
#include <gsub/fixtures.hpp>
#include <gsub/graph_io.hpp>
#include <gsub/oracle.hpp>
#include <gsub/report_io.hpp>

using namespace gsub;

TEST_CASE("report JSON carries entries, exclusions and settings") {
  Settings settings;
  settings.roots.grid = 2048;
  const Analysis an = analyze(cycle_graph(5), chord_substituent(), settings);
  const SpectrumReport rep = assemble(an, settings);
  const nlohmann::json j = report_to_json(rep);
  REQUIRE(j["entries"].size() == 7);
  CHECK(j["entries"][4]["multiplicity"] == 5);
  CHECK(j["entries"][4]["kind"] == "Interior");
  CHECK(j["entries"][4]["typePair"] == nlohmann::json({"I", "Io"}));
  CHECK(j["exc"][0]["rule"] == "B");
  CHECK(j["S2"].empty());
  CHECK(j["totals"]["sum"] == 15);
  CHECK(j["structure"]["unicyclicOdd"] == true);
  CHECK(j["settings"]["grid"] == 2048);
  CHECK(j["gap"]["applicable"] == true);

  const auto cmp = compare_with_oracle(rep, direct_spectrum(an.sg));
  CHECK(comparison_to_json(cmp)["agree"] == true);
  CHECK(comparison_table(cmp).find("agree") != std::string::npos);
  CHECK(report_table(rep).find("total 15 / 15") != std::string::npos);
}

TEST_CASE("transfer and classification documents") {
  const Substituent s = chord_substituent();
  const nlohmann::json tf = transfer_to_json(compute_transfer(s));
  CHECK(RationalFunction::parse(tf["phi"].get<std::string>()) == RationalFunction::parse("3 z^2 - z - 1"));
  const ReversibleOperator Q(s.graph);
  const auto typed = classify_interior(s, eigen(Q.without({s.a, s.b})));
  CHECK(classification_table(typed).find("IIo") != std::string::npos);
  CHECK(classification_to_json(typed).size() == 2);
}

TEST_CASE("substituted graph document re-parses as a graph") {
  const WeightedGraph X = cycle_graph(3);
  const SubstitutedGraph sg = substitute(X, Orientation::standard(X), path_substituent(3));
  const nlohmann::json j = substituted_to_json(sg);
  const WeightedGraph g = graph_from_json(j);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 9);
  CHECK(j["vertexKind"].size() == 9);
}
