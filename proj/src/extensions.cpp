#include <gsub/error.hpp>
#include <gsub/extensions.hpp>
#include <gsub/linalg.hpp>

#include <algorithm>
#include <cmath>

namespace gsub {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::Transfer: return "Transfer";
    case Construction::TypeIPerEdge: return "TypeI-PerEdge";
    case Construction::TypeIIConstant: return "TypeII-Constant";
    case Construction::TypeIIIBipartite: return "TypeIII-Bipartite";
    case Construction::TypeIVPerVertex: return "TypeIV-PerVertex";
    case Construction::OddCycle: return "OddCycle";
    case Construction::EvenDefectPath: return "EvenDefectPath";
    case Construction::MixedPair: return "MixedPair";
  }
  return "?";
}

bool is_nodal(Construction c) {
  return c == Construction::TypeIPerEdge || c == Construction::OddCycle || c == Construction::EvenDefectPath ||
         c == Construction::MixedPair;
}

namespace {

// Writes scale * g(v) onto the copy of V-interior along host edge e.
void paint(const SubstitutedGraph& sg, std::vector<double>& out, std::size_t e, const std::vector<double>& g,
           double scale) {
  for (std::size_t v : sg.interior) out[sg.pi(e, v)] += scale * g[v];
}

ExtensionFunction blank(const SubstitutedGraph& sg, double lambda, Construction tag, std::string prov) {
  return {std::vector<double>(sg.graph.vertex_count(), 0.0), lambda, tag, std::move(prov)};
}

}  // namespace

double balance(const SubstitutedGraph& sg, const std::vector<double>& f, std::size_t x) {
  const ReversibleOperator Q(sg.sub.graph);
  const Substituent& s = sg.sub;
  auto qf = [&](std::size_t e, std::size_t end) {
    double acc = 0.0;
    for (const auto& [v, a] : Q.row(end))
      if (v != s.a && v != s.b) acc += to_double(a) * f[sg.pi(e, v)];
    return acc / to_double(Q.measure(end));
  };
  double bal = 0.0;
  for (std::size_t e : sg.host.incident(x)) {
    const double ax = to_double(sg.host.edge(e).conductance);
    if (sg.orientation.tail[e] == x) bal += ax * qf(e, s.a);
    if (sg.orientation.head[e] == x) bal += ax * qf(e, s.b);
  }
  return bal;
}

double residual(const SubstitutedGraph& sg, const std::vector<double>& f, double lambda) {
  const ReversibleOperator P(sg.graph);
  const auto pf = P.apply(f);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    num = std::max(num, std::abs(pf[i] - lambda * f[i]));
    den = std::max(den, std::abs(f[i]));
  }
  return den == 0.0 ? 0.0 : num / den;
}

ExtensionFunction transfer_extension(const SubstitutedGraph& sg, const BoundaryKernels& k,
                                     const std::vector<double>& interior_spectrum, const std::vector<double>& f,
                                     double lambda_star) {
  for (double mu : interior_spectrum)
    if (std::abs(lambda_star - mu) <= 1e-9)
      throw Error(ErrorCode::KernelPole, "lambda*=" + std::to_string(lambda_star) + " near interior eigenvalue");
  ExtensionFunction out = blank(sg, lambda_star, Construction::Transfer, "transfer");
  for (std::size_t x = 0; x < sg.host_count(); ++x) out.values[x] = f[x];
  std::vector<double> ka(sg.sub.graph.vertex_count()), kb(ka.size());
  for (std::size_t v : sg.interior) {
    ka[v] = k.to_a[v].evaluate(lambda_star);
    kb[v] = k.to_b[v].evaluate(lambda_star);
  }
  for (std::size_t e = 0; e < sg.host.edge_count(); ++e) {
    const double fa = f[sg.orientation.tail[e]], fb = f[sg.orientation.head[e]];
    for (std::size_t v : sg.interior) out.values[sg.pi(e, v)] = fa * ka[v] + fb * kb[v];
  }
  return out;
}

std::vector<ExtensionFunction> tail_extensions(const SubstitutedGraph& sg, const TypedEigenvalue& t,
                                               const std::optional<std::vector<int>>& colours) {
  std::vector<ExtensionFunction> out;
  const std::size_t E = sg.host.edge_count();
  switch (t.type) {
    case EigenType::I:
      break;
    case EigenType::II: {
      auto f = blank(sg, t.value, Construction::TypeIIConstant, "constant on host");
      for (std::size_t x = 0; x < sg.host_count(); ++x) f.values[x] = 1.0;
      for (std::size_t e = 0; e < E; ++e) paint(sg, f.values, e, t.tails[0], 1.0);
      out.push_back(std::move(f));
      break;
    }
    case EigenType::III: {
      if (!colours) break;
      auto f = blank(sg, t.value, Construction::TypeIIIBipartite, "+1/-1 on the bipartition");
      for (std::size_t x = 0; x < sg.host_count(); ++x) f.values[x] = (*colours)[x] == 0 ? 1.0 : -1.0;
      for (std::size_t e = 0; e < E; ++e)
        paint(sg, f.values, e, t.tails[0], (*colours)[sg.orientation.tail[e]] == 0 ? 1.0 : -1.0);
      out.push_back(std::move(f));
      break;
    }
    case EigenType::IV: {
      for (std::size_t x = 0; x < sg.host_count(); ++x) {
        auto f = blank(sg, t.value, Construction::TypeIVPerVertex, "star of " + sg.host.label(x));
        f.values[x] = 1.0;
        for (std::size_t e : sg.host.incident(x)) {
          // A parallel edge pair never makes x both tail and head of one edge (no loops).
          paint(sg, f.values, e, sg.orientation.tail[e] == x ? t.tails[0] : t.tails[1], 1.0);
        }
        out.push_back(std::move(f));
      }
      break;
    }
  }
  return out;
}

std::vector<ExtensionFunction> embed_specQ(const SubstitutedGraph& sg, const TypedEigenvalue& t,
                                           const std::optional<std::vector<int>>& colours) {
  std::vector<ExtensionFunction> out;
  for (std::size_t j = 0; j < t.block.size(); ++j) {
    for (std::size_t e = 0; e < sg.host.edge_count(); ++e) {
      auto f = blank(sg, t.value, Construction::TypeIPerEdge,
                     "block " + std::to_string(j) + " on edge " + std::to_string(e));
      paint(sg, f.values, e, t.block[j], 1.0);
      out.push_back(std::move(f));
    }
  }
  auto tails = tail_extensions(sg, t, colours);
  out.insert(out.end(), std::make_move_iterator(tails.begin()), std::make_move_iterator(tails.end()));
  return out;
}

NodalFamily nodal_from_interior(const SubstitutedGraph& sg, const TypedEigenvalue& t, const CycleBase& base,
                                const std::optional<std::vector<int>>& colours) {
  NodalFamily fam;
  const WeightedGraph& X = sg.host;
  auto ax = [&](std::size_t e) { return to_double(X.edge(e).conductance); };

  for (std::size_t j = 0; j < t.block.size(); ++j) {
    for (std::size_t e = 0; e < X.edge_count(); ++e) {
      auto f = blank(sg, t.value, Construction::TypeIPerEdge,
                     "block " + std::to_string(j) + " on edge " + std::to_string(e));
      paint(sg, f.values, e, t.block[j], 1.0);
      fam.functions.push_back(std::move(f));
    }
  }

  auto from_defect = [&](const NonBacktrackingPath& w, const std::string& prov) {
    auto f = blank(sg, t.value, Construction::EvenDefectPath, prov);
    for (std::size_t e = 0; e < X.edge_count(); ++e)
      if (w.defect[e] != 0) paint(sg, f.values, e, t.tails[0], static_cast<double>(w.defect[e]) / ax(e));
    fam.functions.push_back(std::move(f));
  };

  switch (t.type) {
    case EigenType::I:
      break;
    case EigenType::III:
      for (std::size_t i = 0; i < base.cycles.size(); ++i) {
        const Cycle& c = base.cycles[i];
        auto f = blank(sg, t.value, Construction::OddCycle, "cycle " + std::to_string(i));
        for (std::size_t j = 0; j < c.length(); ++j) {
          const std::size_t e = c.edges[j];
          const double sgn = sg.orientation.tail[e] == c.vertices[j] ? 1.0 : -1.0;
          paint(sg, f.values, e, t.tails[0], sgn / ax(e));
        }
        fam.functions.push_back(std::move(f));
      }
      break;
    case EigenType::II: {
      std::vector<std::size_t> odd;
      for (std::size_t i = 0; i < base.cycles.size(); ++i) {
        const Cycle& c = base.cycles[i];
        if (c.odd()) {
          odd.push_back(i);
          continue;
        }
        from_defect(make_closed_walk(X, c.vertices, c.edges), "even cycle " + std::to_string(i));
      }
      if (!odd.empty()) {
        const std::size_t last = odd.back();
        for (std::size_t k = 0; k + 1 < odd.size(); ++k) {
          const NonBacktrackingPath w = even_joined_path(X, base, odd[k], last);
          if (!w.non_backtracking)
            fam.warnings.push_back("joined path " + std::to_string(odd[k]) + "-" + std::to_string(last) +
                                   " backtracks");
          from_defect(w, "joined path " + std::to_string(odd[k]) + "-" + std::to_string(last));
        }
      }
      (void)colours;
      break;
    }
    case EigenType::IV:
      for (std::size_t x = 0; x < X.vertex_count(); ++x) {
        const auto& inc = X.incident(x);
        if (inc.size() < 2) continue;
        const std::size_t ed = inc.back();
        for (std::size_t j = 0; j + 1 < inc.size(); ++j) {
          const std::size_t e = inc[j];
          auto f = blank(sg, t.value, Construction::MixedPair,
                         "pair " + std::to_string(e) + "," + std::to_string(ed) + " at " + X.label(x));
          paint(sg, f.values, e, sg.orientation.tail[e] == x ? t.tails[0] : t.tails[1], 1.0 / ax(e));
          paint(sg, f.values, ed, sg.orientation.tail[ed] == x ? t.tails[0] : t.tails[1], -1.0 / ax(ed));
          fam.functions.push_back(std::move(f));
        }
      }
      break;
  }
  return fam;
}

std::size_t independence_rank(const std::vector<ExtensionFunction>& fns) {
  if (fns.empty()) return 0;
  Matrix M(fns.size(), fns.front().values.size());
  for (std::size_t i = 0; i < fns.size(); ++i)
    for (std::size_t j = 0; j < fns[i].values.size(); ++j) M(i, j) = fns[i].values[j];
  return numeric_rank(M, 1e-8);
}

}  // namespace gsub
