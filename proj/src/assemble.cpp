#include <gsub/assemble.hpp>
#include <gsub/error.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gsub {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

bool near_any(double x, const std::vector<double>& values, double tol) {
  return std::any_of(values.begin(), values.end(), [&](double v) { return std::abs(x - v) <= tol; });
}

std::vector<Root> roots_with_retry(const std::vector<double>& coeffs, const Settings& settings) {
  RootOptions opts = settings.roots;
  for (;;) {
    try {
      return real_roots_in_interval(coeffs, -1.0 - 1e-9, 1.0 + 1e-9, opts);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GridTooCoarse || opts.grid * 16 > settings.max_grid) throw;
      opts.grid *= 16;
    }
  }
}

// At an interior eigenvalue seen by no boundary-visible interior eigenvector
// the kernels stay finite. If phi then lands in spec(P) with psi != 0, the
// host eigenfunctions still extend, on top of the nodal ones the table counts.
// Rows II-IV already include that contribution, so only rows 0 and I need it.
std::optional<std::pair<double, std::size_t>> host_visible(const Analysis& an, double z) {
  auto regular = [&](const RationalFunction& r) {
    const auto c = r.denominator().to_doubles();
    double scale = 0.0;
    for (double x : c) scale = std::max(scale, std::abs(x));
    return std::abs(horner(c, z)) > 1e-8 * scale;
  };
  if (!regular(an.tf.phi) || !regular(an.tf.psi)) return std::nullopt;
  if (std::abs(an.tf.psi.evaluate(z)) <= 1e-9) return std::nullopt;
  const double w = an.tf.phi.evaluate(z);
  for (const auto& c : an.specP.clusters)
    if (std::abs(c.value - w) <= 1e-7) return std::make_pair(c.value, c.multiplicity);
  return std::nullopt;
}

}  // namespace

bool Analysis::interior_connected() const {
  std::vector<bool> keep(sg.sub.graph.vertex_count(), true);
  keep[sg.sub.a] = keep[sg.sub.b] = false;
  return sg.sub.graph.connected_on(keep);
}

const TypedEigenvalue* Analysis::q_type_at(double value, double tol) const {
  for (const auto& t : typedQ)
    if (std::abs(t.value - value) <= tol) return &t;
  return nullptr;
}

Analysis analyze(const WeightedGraph& X, const Substituent& s, const Settings& settings,
                 const std::optional<Orientation>& orientation) {
  require_connected(X, "host graph");
  if (X.vertex_count() < 2) throw Error(ErrorCode::InvalidGraph, "host graph needs an edge");
  validate_substituent(s);

  Analysis an;
  an.sg = substitute(X, orientation ? *orientation : Orientation::standard(X), s);
  an.tf = compute_transfer(s);
  an.kernels = boundary_kernels(s);
  const ReversibleOperator Q(s.graph);
  an.specP = eigen(ReversibleOperator(X), settings.cluster_tol);
  an.specQ = eigen(Q, settings.cluster_tol);
  an.specQo = eigen(Q.without({s.a, s.b}), settings.cluster_tol);
  an.typedQ = classify_Q(s, an.specQ);
  an.typedQo = classify_interior(s, an.specQo);
  an.cycles = fundamental_cycle_base(X);
  an.colours = bipartition(X);
  return an;
}

std::vector<S1Root> solve_S1(const TransferFunctions& tf, const EigenDecomposition& specP,
                             const std::vector<double>& interior_spectrum, const Settings& settings) {
  const std::vector<double> num = tf.phi.numerator().to_doubles();
  const std::vector<double> den = tf.phi.denominator().to_doubles();

  std::vector<double> psi_zeros;
  for (const Root& r : roots_with_retry(tf.psi.numerator().to_doubles(), settings)) psi_zeros.push_back(r.value);

  std::vector<S1Root> out;
  for (std::size_t k = 0; k < specP.clusters.size(); ++k) {
    const double lambda = specP.clusters[k].value;
    std::vector<double> p(std::max(num.size(), den.size()), 0.0);
    for (std::size_t i = 0; i < num.size(); ++i) p[i] += num[i];
    for (std::size_t i = 0; i < den.size(); ++i) p[i] -= lambda * den[i];
    for (const Root& r : roots_with_retry(p, settings)) {
      const double z = std::clamp(r.value, -1.0, 1.0);
      if (near_any(z, interior_spectrum, settings.interior_exclusion)) continue;
      if (near_any(z, psi_zeros, settings.interior_exclusion)) continue;
      out.push_back({z, lambda, k, specP.clusters[k].multiplicity, r.multiplicity});
    }
  }
  return out;
}

std::vector<double> solve_S2(const TransferFunctions& tf, const std::vector<TypedEigenvalue>& typedQ,
                             const std::vector<double>& interior_spectrum, double tol) {
  std::vector<double> out;
  for (const auto& t : typedQ) {
    if (near_any(t.value, interior_spectrum, tol)) continue;
    const bool member = t.type == EigenType::IV && t.nu == 2;
    // Off the interior spectrum both ψ and z - θ are finite.
    const double psi = tf.psi.evaluate(t.value, 0.0);
    const double zt = tf.z_minus_theta.evaluate(t.value, 0.0);
    const bool equations = std::abs(psi) <= 1e-6 && std::abs(zt) <= 1e-6;
    if (member != equations)
      throw Error(ErrorCode::S2ConsistencyFailure, "at " + fmt(t.value) + ": type " + to_string(t.type, t.source) +
                                                       " nu=" + std::to_string(t.nu) + " psi=" + fmt(psi) +
                                                       " z-theta=" + fmt(zt));
    if (member) out.push_back(t.value);
  }
  return out;
}

long interior_multiplicity(std::optional<EigenType> row, EigenType col, std::size_t nu_o, std::size_t host_vertices,
                           std::size_t host_edges, bool bipartite) {
  const long nu = static_cast<long>(nu_o), X = static_cast<long>(host_vertices), E = static_cast<long>(host_edges);
  const long db = bipartite ? 1 : 0;
  const int c = static_cast<int>(col);
  if (!row) {
    switch (c) {
      case 0: throw Error(ErrorCode::InvalidTypeCombination, "type Io outside spec(Q)");
      case 1: return E - X + db;
      case 2: return E - X + 1;
      default: return 2 * E - X;
    }
  }
  const long base = nu * E;
  switch (*row) {
    case EigenType::I: {
      const long add[] = {0, -X + db, -X + 1, -X};
      return base + add[c];
    }
    case EigenType::II: {
      const long add[] = {1, -X + 1 + db, -X + 2, -X + 1};
      return base + add[c];
    }
    case EigenType::III: {
      const long add[] = {db, -X + 2 * db, -X + 1 + db, -X + db};
      return base + add[c];
    }
    case EigenType::IV: {
      const long add[] = {X, db, 1, 0};
      return base + add[c];
    }
  }
  return 0;
}

std::string to_string(ExcRule r) {
  switch (r) {
    case ExcRule::A: return "A";
    case ExcRule::B: return "B";
    case ExcRule::TableZero: return "table-zero";
  }
  return "?";
}

std::string to_string(EntryKind k) {
  switch (k) {
    case EntryKind::S1: return "S1";
    case EntryKind::S2: return "S2";
    case EntryKind::Interior: return "Interior";
    case EntryKind::Merged: return "Merged";
  }
  return "?";
}

std::vector<ExcludedCandidate> exceptional_set(const Analysis& an, double tol) {
  std::vector<ExcludedCandidate> out;
  const bool tree = an.tree(), uni = an.unicyclic_odd();
  if (!tree && !uni) return out;
  for (const auto& t : an.typedQo) {
    const TypedEigenvalue* q = an.q_type_at(t.value, tol);
    ExcludedCandidate c;
    c.value = t.value;
    c.interior_type = t.type;
    c.nu_o = t.nu;
    if (q) c.q_type = q->type;
    if (t.nu != 1) continue;
    if (tree && !q && (t.type == EigenType::II || t.type == EigenType::III)) {
      c.rule = ExcRule::A;
      out.push_back(c);
    } else if (uni && t.type == EigenType::II &&
               (!q || (q->type == EigenType::III && q->nu == 1))) {
      c.rule = ExcRule::B;
      out.push_back(c);
    }
  }
  return out;
}

SpectralGap spectral_gap(const Analysis& an, const std::vector<S1Root>& s1, const std::vector<SpectrumEntry>& entries) {
  SpectralGap g;
  if (an.sg.host_count() < 3) {
    g.reason = "host has fewer than 3 vertices";
    return g;
  }
  if (an.specP.clusters.size() < 2) {
    g.reason = "host spectrum has a single value";
    return g;
  }
  g.lambda1 = an.specP.clusters[1].value;
  if (!an.interior_connected() && g.lambda1 < 0) {
    g.reason = "interior disconnected and lambda1 < 0";
    return g;
  }
  bool found = false;
  for (const auto& r : s1) {
    if (r.host_cluster != 1) continue;
    if (!found || r.lambda_star > g.lambda1_star) g.lambda1_star = r.lambda_star;
    found = true;
  }
  if (!found) {
    g.reason = "no solution of phi(z) = lambda1";
    return g;
  }
  g.applicable = true;
  g.equals_second_entry = entries.size() >= 2 && std::abs(entries[1].value - g.lambda1_star) <= 1e-9;
  return g;
}

SpectrumReport assemble(const Analysis& an, const Settings& settings) {
  SpectrumReport rep;
  rep.settings = settings;
  const WeightedGraph& X = an.sg.host;
  rep.host_vertices = X.vertex_count();
  rep.host_edges = X.edge_count();
  rep.sub_vertices = an.sg.sub.graph.vertex_count();
  rep.bipartite = an.bipartite();
  rep.tree = an.tree();
  rep.unicyclic_odd = an.unicyclic_odd();
  rep.expected_total = an.sg.graph.vertex_count();

  const std::vector<double> interior = an.interior_values();
  const auto s1 = solve_S1(an.tf, an.specP, interior, settings);
  rep.s2 = solve_S2(an.tf, an.typedQ, interior, settings.cluster_tol);

  std::vector<SpectrumEntry> raw;
  for (const auto& r : s1) {
    SpectrumEntry e;
    e.value = r.lambda_star;
    e.multiplicity = r.nu_P;
    e.kind = EntryKind::S1;
    e.host_value = r.lambda;
    e.host_multiplicity = r.nu_P;
    e.provenance.push_back("S1 phi=" + fmt(r.lambda) + " nuP=" + std::to_string(r.nu_P));
    if (r.root_multiplicity > 1) rep.warnings.push_back("double root of phi = " + fmt(r.lambda) + " at " + fmt(e.value));
    raw.push_back(std::move(e));
  }
  for (double v : rep.s2) {
    SpectrumEntry e;
    e.value = v;
    e.multiplicity = X.vertex_count();
    e.kind = EntryKind::S2;
    e.q_type = EigenType::IV;
    e.provenance.push_back("S2");
    raw.push_back(std::move(e));
  }
  for (const auto& t : an.typedQo) {
    const TypedEigenvalue* q = an.q_type_at(t.value, settings.cluster_tol);
    std::optional<EigenType> row;
    if (q) row = q->type;
    const long table = interior_multiplicity(row, t.type, t.nu, X.vertex_count(), X.edge_count(), rep.bipartite);
    std::optional<std::pair<double, std::size_t>> seen;
    if (!row || *row == EigenType::I) seen = host_visible(an, t.value);
    const long mult = table + (seen ? static_cast<long>(seen->second) : 0);
    if (t.rank_ambiguous) rep.warnings.push_back("RankAmbiguous classification at " + fmt(t.value));
    if (mult <= 0) {
      ExcludedCandidate c;
      c.value = t.value;
      c.interior_type = t.type;
      c.q_type = row;
      c.nu_o = t.nu;
      const bool two = t.nu == 1 && t.type == EigenType::II;
      if (rep.tree && !row && t.nu == 1 && (t.type == EigenType::II || t.type == EigenType::III)) {
        c.rule = ExcRule::A;
      } else if (rep.unicyclic_odd && two && (!row || (*row == EigenType::III && q->nu == 1))) {
        c.rule = ExcRule::B;
      }
      rep.exc.push_back(c);
      continue;
    }
    SpectrumEntry e;
    e.value = t.value;
    e.multiplicity = static_cast<std::size_t>(mult);
    e.kind = EntryKind::Interior;
    e.q_type = row;
    e.interior_type = t.type;
    e.nu_o = t.nu;
    e.provenance.push_back("interior (" + (row ? to_string(*row, Source::Q) : std::string("0")) + ", " +
                           to_string(t.type, Source::Interior) + ") nu_o=" + std::to_string(t.nu));
    if (seen) {
      e.host_value = seen->first;
      e.host_multiplicity = seen->second;
      e.provenance.back() += " table=" + std::to_string(table);
      e.provenance.push_back("host-visible phi=" + fmt(seen->first) + " nuP=" + std::to_string(seen->second));
    }
    raw.push_back(std::move(e));
  }

  std::sort(raw.begin(), raw.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
  for (auto& e : raw) {
    if (!rep.entries.empty() && rep.entries.back().value - e.value <= settings.cluster_tol) {
      SpectrumEntry& m = rep.entries.back();
      const double w = static_cast<double>(m.multiplicity), we = static_cast<double>(e.multiplicity);
      m.value = (m.value * w + e.value * we) / (w + we);
      m.multiplicity += e.multiplicity;
      m.kind = EntryKind::Merged;
      m.provenance.insert(m.provenance.end(), e.provenance.begin(), e.provenance.end());
      continue;
    }
    rep.entries.push_back(std::move(e));
  }
  for (const auto& e : rep.entries) rep.total += e.multiplicity;
  rep.gap = spectral_gap(an, s1, rep.entries);

  if (rep.total != rep.expected_total)
    throw Error(ErrorCode::TotalMismatch, "multiplicities sum to " + std::to_string(rep.total) + ", |X[V]| = " +
                                              std::to_string(rep.expected_total));
  return rep;
}

}  // namespace gsub
