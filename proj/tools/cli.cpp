#include "cli.hpp"

#include <gsub/assemble.hpp>
#include <gsub/error.hpp>
#include <gsub/fixtures.hpp>
#include <gsub/graph_io.hpp>
#include <gsub/oracle.hpp>
#include <gsub/report_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>

namespace gsub::cli {

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kInvalid = 3;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::TotalMismatch:
    case ErrorCode::S2ConsistencyFailure:
    case ErrorCode::NoConvergence:
    case ErrorCode::GridTooCoarse:
      return kMismatch;
    default:
      return kInvalid;
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + out);
  f << text << '\n';
}

struct Common {
  std::string host, sub, out;
  double cluster_tol = kClusterTol;
  std::size_t grid = 4096;
  std::uint64_t seed = 1;
  bool random_orientation = false;

  Settings settings() const {
    Settings s;
    s.cluster_tol = cluster_tol;
    s.roots.grid = grid;
    return s;
  }
  std::optional<Orientation> orientation(const WeightedGraph& X) const {
    if (!random_orientation) return std::nullopt;
    std::mt19937_64 rng(seed);
    return Orientation::random(X, rng);
  }
};

void add_common(CLI::App* app, Common& c, bool need_host, bool need_sub) {
  if (need_host) app->add_option("--host", c.host, "host graph file")->required()->check(CLI::ExistingFile);
  if (need_sub) app->add_option("--sub", c.sub, "substituent file")->required()->check(CLI::ExistingFile);
  app->add_option("--out", c.out, "write output to this file");
  app->add_option("--cluster-tol", c.cluster_tol, "eigenvalue clustering tolerance")->capture_default_str();
  app->add_option("--grid", c.grid, "root finder grid intervals")->capture_default_str();
  app->add_option("--seed", c.seed, "seed for --random-orientation")->capture_default_str();
  app->add_flag("--random-orientation", c.random_orientation, "orient host edges at random");
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Spectra of edge-substituted graphs"};
  app.require_subcommand(1);

  Common sub_c, tr_c, cl_c, sp_c, ve_c;
  bool as_json = false, verify = false;

  auto* substitute_cmd = app.add_subcommand("substitute", "build X[V] and print it as a graph file");
  add_common(substitute_cmd, sub_c, true, true);

  auto* transfer_cmd = app.add_subcommand("transfer", "print phi, psi, theta of a substituent");
  add_common(transfer_cmd, tr_c, false, true);
  transfer_cmd->add_flag("--json", as_json, "JSON output");

  auto* classify_cmd = app.add_subcommand("classify", "type tables for Q and its interior restriction");
  add_common(classify_cmd, cl_c, false, true);
  classify_cmd->add_flag("--json", as_json, "JSON output");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "assemble spec(P_*) from X and V");
  add_common(spectrum_cmd, sp_c, true, true);
  spectrum_cmd->add_flag("--json", as_json, "JSON output");
  spectrum_cmd->add_flag("--verify", verify, "compare against direct eigendecomposition");

  auto* verify_cmd = app.add_subcommand("verify", "side-by-side assembled vs direct spectrum");
  add_common(verify_cmd, ve_c, true, true);

  auto* fixture_cmd = app.add_subcommand("fixture", "emit a generated graph file");
  std::optional<std::size_t> fx_path, fx_circle, fx_cycle, fx_N;
  std::string fx_placement = "antipodal", fx_chord, fx_a = "1", fx_out;
  bool fx_weighted = false;
  fixture_cmd->add_option("--path", fx_path, "path substituent of length L");
  fixture_cmd->add_option("--circle", fx_circle, "circle substituent on M vertices");
  fixture_cmd->add_option("--placement", fx_placement, "antipodal or adjacent")
      ->check(CLI::IsMember({"antipodal", "adjacent"}));
  fixture_cmd->add_option("--chord", fx_chord, "host (5-cycle) or sub (4-cycle with chord)")->check(CLI::IsMember({"host", "sub"}));
  fixture_cmd->add_flag("--weighted-circle", fx_weighted, "2N-circle with one weighted edge");
  fixture_cmd->add_option("--a", fx_a, "conductance of the weighted edge, in [0,1]");
  fixture_cmd->add_option("--N", fx_N, "half length of the circle");
  fixture_cmd->add_option("--cycle", fx_cycle, "cycle host on n vertices");
  fixture_cmd->add_option("--out", fx_out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*substitute_cmd) {
      const WeightedGraph X = load_graph(sub_c.host);
      require_connected(X, "host graph");
      const Substituent s = load_substituent(sub_c.sub);
      validate_substituent(s);
      auto o = sub_c.orientation(X);
      const SubstitutedGraph sg = substitute(X, o ? *o : Orientation::standard(X), s);
      emit(substituted_to_json(sg).dump(2), sub_c.out);
      return 0;
    }
    if (*transfer_cmd) {
      const Substituent s = load_substituent(tr_c.sub);
      validate_substituent(s);
      const TransferFunctions tf = compute_transfer(s);
      if (as_json) {
        emit(transfer_to_json(tf).dump(2), tr_c.out);
      } else {
        std::ostringstream os;
        os << "phi   = " << tf.phi.to_string() << "\n"
           << "psi   = " << tf.psi.to_string() << "\n"
           << "theta = " << tf.theta.to_string() << "\n"
           << "lambda0(Q_V-b)      = " << tf.lambda0_minus_b << "\n"
           << "lambda0(Q_interior) = " << tf.lambda0_interior << "\n";
        emit(os.str(), tr_c.out);
      }
      return 0;
    }
    if (*classify_cmd) {
      const Substituent s = load_substituent(cl_c.sub);
      validate_substituent(s);
      const ReversibleOperator Q(s.graph);
      const auto tq = classify_Q(s, eigen(Q, cl_c.cluster_tol));
      const auto to = classify_interior(s, eigen(Q.without({s.a, s.b}), cl_c.cluster_tol));
      if (as_json) {
        emit(nlohmann::json{{"Q", classification_to_json(tq)}, {"interior", classification_to_json(to)}}.dump(2),
             cl_c.out);
      } else {
        emit("Q:\n" + classification_table(tq) + "interior:\n" + classification_table(to), cl_c.out);
      }
      return 0;
    }
    if (*spectrum_cmd || *verify_cmd) {
      const Common& c = *spectrum_cmd ? sp_c : ve_c;
      const bool check = verify || *verify_cmd;
      const WeightedGraph X = load_graph(c.host);
      const Substituent s = load_substituent(c.sub);
      const Settings settings = c.settings();
      const Analysis an = analyze(X, s, settings, c.orientation(X));
      const SpectrumReport rep = assemble(an, settings);
      std::optional<OracleComparison> cmp;
      if (check) cmp = compare_with_oracle(rep, direct_spectrum(an.sg, kOracleCap, settings.cluster_tol));

      if (*verify_cmd) {
        emit(comparison_table(*cmp), c.out);
      } else if (as_json) {
        nlohmann::json doc = report_to_json(rep);
        if (cmp) doc["oracle"] = comparison_to_json(*cmp);
        emit(doc.dump(2), c.out);
      } else {
        std::string text = report_table(rep);
        if (cmp) text += "oracle:\n" + comparison_table(*cmp);
        emit(text, c.out);
      }
      return cmp && !cmp->agree ? kMismatch : 0;
    }
    if (*fixture_cmd) {
      nlohmann::json doc;
      const int chosen = (fx_path ? 1 : 0) + (fx_circle ? 1 : 0) + (!fx_chord.empty() ? 1 : 0) + (fx_weighted ? 1 : 0) +
                         (fx_cycle ? 1 : 0);
      if (chosen != 1) {
        std::cerr << "fixture: choose exactly one of --path, --circle, --chord, --weighted-circle, --cycle\n";
        return kUsage;
      }
      if (fx_path) {
        doc = substituent_to_json(path_substituent(*fx_path));
      } else if (fx_circle) {
        doc = substituent_to_json(
            circle_substituent(*fx_circle, fx_placement == "adjacent" ? Placement::Adjacent : Placement::Antipodal));
      } else if (!fx_chord.empty()) {
        doc = fx_chord == "host" ? graph_to_json(cycle_graph(5)) : substituent_to_json(chord_substituent());
      } else if (fx_weighted) {
        if (!fx_N) {
          std::cerr << "fixture --weighted-circle needs --N\n";
          return kUsage;
        }
        doc = graph_to_json(weighted_circle(parse_rational(fx_a), *fx_N));
      } else {
        doc = graph_to_json(cycle_graph(*fx_cycle));
      }
      emit(doc.dump(2), fx_out);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}

}  // namespace gsub::cli
