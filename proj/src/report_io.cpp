#include <gsub/graph_io.hpp>
#include <gsub/report_io.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gsub {

using nlohmann::json;

namespace {

std::string num(double v, int prec = 12) {
  if (std::isnan(v)) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

json settings_json(const Settings& s) {
  return {{"clusterTol", s.cluster_tol},
          {"interiorExclusion", s.interior_exclusion},
          {"grid", s.roots.grid},
          {"rootTol", s.roots.tol},
          {"newtonPolish", s.roots.polish},
          {"maxGrid", s.max_grid}};
}

}  // namespace

json substituted_to_json(const SubstitutedGraph& sg) {
  json doc = graph_to_json(sg.graph);
  json kinds = json::object();
  for (std::size_t i = 0; i < sg.origin.size(); ++i) {
    const VertexOrigin& o = sg.origin[i];
    if (o.kind == VertexKind::Host) {
      kinds[sg.graph.label(i)] = {{"kind", "host"}, {"vertex", sg.host.label(o.host_vertex)}};
    } else {
      kinds[sg.graph.label(i)] = {{"kind", "interior"}, {"edge", o.edge}, {"v", sg.sub.graph.label(o.v)}};
    }
  }
  doc["vertexKind"] = std::move(kinds);
  return doc;
}

json transfer_to_json(const TransferFunctions& tf) {
  return {{"phi", tf.phi.to_string()},
          {"psi", tf.psi.to_string()},
          {"theta", tf.theta.to_string()},
          {"lambda0_V_minus_b", tf.lambda0_minus_b},
          {"lambda0_interior", tf.lambda0_interior}};
}

json classification_to_json(const std::vector<TypedEigenvalue>& typed) {
  json arr = json::array();
  for (const auto& t : typed) {
    arr.push_back({{"value", t.value},
                   {"type", to_string(t.type, t.source)},
                   {"nu", t.nu},
                   {"nuPrime", t.nu_prime},
                   {"boundarySingularValues", {t.boundary_singular_values[0], t.boundary_singular_values[1]}},
                   {"rankAmbiguous", t.rank_ambiguous}});
  }
  return arr;
}

json report_to_json(const SpectrumReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json j = {{"value", e.value}, {"multiplicity", e.multiplicity}, {"kind", to_string(e.kind)},
              {"provenance", e.provenance}};
    if (e.kind == EntryKind::S1) j["hostEigenvalue"] = e.host_value;
    if (e.kind == EntryKind::Interior) {
      j["typePair"] = {e.q_type ? to_string(*e.q_type, Source::Q) : "0", to_string(e.interior_type, Source::Interior)};
      j["nu_o"] = e.nu_o;
      if (e.host_multiplicity > 0) j["hostVisible"] = {{"phi", e.host_value}, {"nuP", e.host_multiplicity}};
    }
    entries.push_back(std::move(j));
  }
  json exc = json::array();
  for (const auto& c : rep.exc) {
    exc.push_back({{"value", c.value},
                   {"rule", to_string(c.rule)},
                   {"typePair", {c.q_type ? to_string(*c.q_type, Source::Q) : "0",
                                 to_string(c.interior_type, Source::Interior)}},
                   {"nu_o", c.nu_o}});
  }
  json gap = {{"applicable", rep.gap.applicable}};
  if (rep.gap.applicable) {
    gap["lambda1"] = rep.gap.lambda1;
    gap["lambda1Star"] = rep.gap.lambda1_star;
    gap["equalsSecondEntry"] = rep.gap.equals_second_entry;
  } else {
    gap["reason"] = rep.gap.reason;
  }
  return {{"entries", std::move(entries)},
          {"exc", std::move(exc)},
          {"S2", rep.s2},
          {"gap", std::move(gap)},
          {"totals", {{"sum", rep.total}, {"vertices", rep.expected_total}}},
          {"structure",
           {{"hostVertices", rep.host_vertices},
            {"hostEdges", rep.host_edges},
            {"substituentVertices", rep.sub_vertices},
            {"bipartite", rep.bipartite},
            {"tree", rep.tree},
            {"unicyclicOdd", rep.unicyclic_odd}}},
          {"warnings", rep.warnings},
          {"settings", settings_json(rep.settings)}};
}

json comparison_to_json(const OracleComparison& cmp) {
  json rows = json::array();
  for (const auto& r : cmp.rows) {
    rows.push_back({{"report", std::isnan(r.report_value) ? json(nullptr) : json(r.report_value)},
                    {"reportMultiplicity", r.report_multiplicity},
                    {"oracle", std::isnan(r.oracle_value) ? json(nullptr) : json(r.oracle_value)},
                    {"oracleMultiplicity", r.oracle_multiplicity},
                    {"matched", r.matched}});
  }
  return {{"agree", cmp.agree}, {"rows", std::move(rows)}};
}

std::string classification_table(const std::vector<TypedEigenvalue>& typed) {
  std::ostringstream os;
  os << "  value              type  nu  nu'\n";
  for (const auto& t : typed) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-18s %-5s %-3zu %-3zu%s\n", num(t.value).c_str(),
                  to_string(t.type, t.source).c_str(), t.nu, t.nu_prime, t.rank_ambiguous ? "  (rank ambiguous)" : "");
    os << line;
  }
  return os.str();
}

std::string report_table(const SpectrumReport& rep) {
  std::ostringstream os;
  os << "  value              mult  source\n";
  for (const auto& e : rep.entries) {
    char line[256];
    std::string src = to_string(e.kind);
    if (e.kind == EntryKind::S1) src += " (phi = " + num(e.host_value, 8) + ")";
    if (e.kind == EntryKind::Interior)
      src += " (" + (e.q_type ? to_string(*e.q_type, Source::Q) : std::string("0")) + ", " +
             to_string(e.interior_type, Source::Interior) + ")";
    std::snprintf(line, sizeof line, "  %-18s %-5zu %s\n", num(e.value).c_str(), e.multiplicity, src.c_str());
    os << line;
  }
  os << "  total " << rep.total << " / " << rep.expected_total << "\n";
  if (!rep.exc.empty()) {
    os << "  excluded:";
    for (const auto& c : rep.exc) os << " " << num(c.value) << " [" << to_string(c.rule) << "]";
    os << "\n";
  }
  if (rep.gap.applicable)
    os << "  spectral gap: lambda1 = " << num(rep.gap.lambda1) << ", lambda1* = " << num(rep.gap.lambda1_star) << "\n";
  for (const auto& w : rep.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

std::string comparison_table(const OracleComparison& cmp) {
  std::ostringstream os;
  os << "  assembled          mult | oracle             mult\n";
  for (const auto& r : cmp.rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%s %-18s %-4zu | %-18s %-4zu\n", r.matched ? " " : "!",
                  num(r.report_value).c_str(), r.report_multiplicity, num(r.oracle_value).c_str(),
                  r.oracle_multiplicity);
    os << line;
  }
  os << (cmp.agree ? "  agree\n" : "  DISAGREE\n");
  return os.str();
}

}  // namespace gsub
