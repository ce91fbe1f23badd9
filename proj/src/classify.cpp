#include <gsub/classify.hpp>
#include <gsub/error.hpp>
#include <gsub/linalg.hpp>

#include <algorithm>
#include <cmath>

namespace gsub {

std::string to_string(EigenType t, Source s) {
  static const char* names[] = {"I", "II", "III", "IV"};
  std::string out = names[static_cast<int>(t)];
  if (s == Source::Interior) out += "o";
  return out;
}

std::pair<double, double> boundary_data(const Substituent& s, const ReversibleOperator& Q, const std::vector<double>& f,
                                        Source source) {
  if (source == Source::Q) return {f[s.a], f[s.b]};
  auto avg = [&](std::size_t x) {
    double acc = 0.0;
    for (const auto& [y, a] : Q.row(x))
      if (y != s.a && y != s.b) acc += to_double(a) * f[y];
    return acc / to_double(Q.measure(x));
  };
  return {avg(s.a), avg(s.b)};
}

std::vector<double> compose_gamma(const std::vector<double>& f, const std::vector<std::size_t>& gamma) {
  std::vector<double> g(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) g[v] = f[gamma[v]];
  return g;
}

namespace {

std::vector<double> combine(const std::vector<std::vector<double>>& F, const std::vector<double>& c) {
  std::vector<double> out(F.front().size(), 0.0);
  for (std::size_t j = 0; j < F.size(); ++j)
    for (std::size_t v = 0; v < out.size(); ++v) out[v] += c[j] * F[j][v];
  return out;
}

// (1/r) sum_k sign^k f o gamma^k
std::vector<double> gamma_average(const std::vector<double>& f, const std::vector<std::size_t>& gamma, std::size_t r,
                                  int sign) {
  std::vector<double> acc(f.size(), 0.0), cur = f;
  double w = 1.0;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t v = 0; v < f.size(); ++v) acc[v] += w * cur[v];
    cur = compose_gamma(cur, gamma);
    w *= sign;
  }
  for (double& x : acc) x /= static_cast<double>(r);
  return acc;
}

}  // namespace

std::vector<TypedEigenvalue> classify(const Substituent& s, const EigenDecomposition& decomp, Source source) {
  const ReversibleOperator Q(s.graph);
  const std::size_t r = s.gamma_order();
  double mass = 0.0;
  for (std::size_t v : decomp.support) mass += decomp.measure[v];
  const double scale = std::sqrt(mass);

  std::vector<TypedEigenvalue> out;
  for (const EigenCluster& c : decomp.clusters) {
    TypedEigenvalue t;
    t.value = c.value;
    t.source = source;
    t.nu = c.multiplicity;
    const std::size_t nu = c.multiplicity;

    // B is 2 x nu; work with the scaled copy for rank decisions.
    Matrix B(2, nu);
    for (std::size_t j = 0; j < nu; ++j) {
      auto [ba, bb] = boundary_data(s, Q, c.basis[j], source);
      B(0, j) = ba * scale;
      B(1, j) = bb * scale;
    }
    const SymmetricEigen bbt = jacobi_eigen(B * B.transpose());
    // Singular values from one-sided Jacobi are accurate near zero, unlike sqrt of BB^T eigenvalues.
    std::vector<double> sv = singular_values(B.transpose());
    sv.resize(2, 0.0);
    const double s1 = sv[0], s2 = nu >= 2 ? sv[1] : 0.0;
    t.boundary_singular_values = {s1, s2};
    std::size_t rank = (s1 > kRankTol) + (s2 > kRankTol);
    for (double x : {s1, s2})
      if (x >= kRankTol * 0.1 && x <= kRankTol * 10.0) t.rank_ambiguous = true;
    rank = std::min(rank, nu);

    if (rank == 0) {
      t.type = EigenType::I;
    } else if (rank == 2) {
      t.type = EigenType::IV;
    } else {
      const double da = bbt.vectors(0, 0), db = bbt.vectors(1, 0);
      // Column space is spanned by (da, db); it must be +-(1,1) or +-(1,-1).
      const double same = std::abs(da - db), opposite = std::abs(da + db);
      t.type = same < opposite ? EigenType::II : EigenType::III;
      if (std::min(same, opposite) > 1e-6) t.rank_ambiguous = true;
    }
    t.nu_prime = nu - rank;

    // Minimum-norm coefficient vectors hitting a boundary target: c = B^T (B B^T)^+ t.
    auto hit = [&](double ta, double tb) {
      std::vector<double> y(2, 0.0);
      for (std::size_t k = 0; k < 2; ++k) {
        const double lam = bbt.values[k];
        if (k >= rank) continue;
        const double proj = (bbt.vectors(0, k) * ta + bbt.vectors(1, k) * tb) / lam;
        y[0] += proj * bbt.vectors(0, k);
        y[1] += proj * bbt.vectors(1, k);
      }
      std::vector<double> coef(nu);
      for (std::size_t j = 0; j < nu; ++j) coef[j] = (B(0, j) * y[0] + B(1, j) * y[1]) * scale;
      return combine(c.basis, coef);
    };

    switch (t.type) {
      case EigenType::I:
        break;
      case EigenType::II:
        t.tails.push_back(gamma_average(hit(1.0, 1.0), s.gamma, r, +1));
        break;
      case EigenType::III:
        t.tails.push_back(gamma_average(hit(1.0, -1.0), s.gamma, r, -1));
        break;
      case EigenType::IV: {
        const auto even = gamma_average(hit(1.0, 1.0), s.gamma, r, +1);
        const auto odd = gamma_average(hit(1.0, -1.0), s.gamma, r, -1);
        std::vector<double> fa(even.size()), fb(even.size());
        for (std::size_t v = 0; v < even.size(); ++v) {
          fa[v] = 0.5 * (even[v] + odd[v]);
          fb[v] = 0.5 * (even[v] - odd[v]);
        }
        t.tails.push_back(std::move(fa));
        t.tails.push_back(std::move(fb));
        break;
      }
    }

    // Null space of B inside the cluster: eigenvectors of B^T B for its
    // nu - rank smallest eigenvalues; orthonormal, so the block stays m-orthonormal.
    if (t.nu_prime > 0) {
      const SymmetricEigen btb = jacobi_eigen(B.transpose() * B);
      for (std::size_t k = nu - t.nu_prime; k < nu; ++k) {
        std::vector<double> coef(nu);
        for (std::size_t j = 0; j < nu; ++j) coef[j] = btb.vectors(j, k);
        t.block.push_back(combine(c.basis, coef));
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TypedEigenvalue> classify_Q(const Substituent& s, const EigenDecomposition& decomp) {
  return classify(s, decomp, Source::Q);
}

std::vector<TypedEigenvalue> classify_interior(const Substituent& s, const EigenDecomposition& decomp) {
  return classify(s, decomp, Source::Interior);
}

double normal_form_defect(const Substituent& s, const TypedEigenvalue& t) {
  const ReversibleOperator Q(s.graph);
  double worst = 0.0;
  auto dev = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };
  auto sup_diff = [&](const std::vector<double>& f, const std::vector<double>& g, double sign) {
    for (std::size_t v = 0; v < f.size(); ++v) dev(f[v], sign * g[v]);
  };
  // Block functions are m-normalized; compare their boundary data on the same scale as tails.
  for (const auto& f : t.block) {
    auto [x, y] = boundary_data(s, Q, f, t.source);
    dev(x, 0.0);
    dev(y, 0.0);
  }
  switch (t.type) {
    case EigenType::I:
      break;
    case EigenType::II: {
      auto [x, y] = boundary_data(s, Q, t.tails[0], t.source);
      dev(x, 1.0);
      dev(y, 1.0);
      sup_diff(compose_gamma(t.tails[0], s.gamma), t.tails[0], 1.0);
      break;
    }
    case EigenType::III: {
      auto [x, y] = boundary_data(s, Q, t.tails[0], t.source);
      dev(x, 1.0);
      dev(y, -1.0);
      sup_diff(compose_gamma(t.tails[0], s.gamma), t.tails[0], -1.0);
      break;
    }
    case EigenType::IV: {
      auto [x0, y0] = boundary_data(s, Q, t.tails[0], t.source);
      auto [x1, y1] = boundary_data(s, Q, t.tails[1], t.source);
      dev(x0, 1.0);
      dev(y0, 0.0);
      dev(x1, 0.0);
      dev(y1, 1.0);
      sup_diff(compose_gamma(t.tails[0], s.gamma), t.tails[1], 1.0);
      sup_diff(compose_gamma(t.tails[1], s.gamma), t.tails[0], 1.0);
      break;
    }
  }
  return worst;
}

}  // namespace gsub
