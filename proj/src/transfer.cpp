#include <gsub/eigen.hpp>
#include <gsub/error.hpp>
#include <gsub/resolvent.hpp>
#include <gsub/substitution.hpp>
#include <gsub/transfer.hpp>

#include <cmath>

namespace gsub {

namespace {

struct InteriorSolve {
  std::vector<std::size_t> interior;
  std::vector<RationalFunction> to_a;  // F_{V-b}(u,a|z), u in interior order
  std::vector<RationalFunction> to_b;  // F_{V-a}(u,b|z)
};

InteriorSolve solve_interior(const Substituent& s) {
  const ReversibleOperator Q(s.graph);
  InteriorSolve out;
  out.interior = s.interior();
  std::vector<bool> keep(s.graph.vertex_count(), false);
  for (std::size_t u : out.interior) keep[u] = true;
  const RationalMatrix Qo = Q.restrict_to(keep).rational_matrix();
  std::vector<Rational> qa, qb;
  for (std::size_t u : out.interior) {
    qa.push_back(Q.transition(u, s.a));
    qb.push_back(Q.transition(u, s.b));
  }
  out.to_a = resolvent_solve(Qo, qa);
  out.to_b = resolvent_solve(Qo, qb);
  return out;
}

}  // namespace

TransferFunctions compute_transfer(const Substituent& s) {
  const ReversibleOperator Q(s.graph);
  const InteriorSolve is = solve_interior(s);
  TransferFunctions tf;
  tf.psi = RationalFunction(Q.transition(s.a, s.b));
  tf.theta = RationalFunction();
  for (std::size_t i = 0; i < is.interior.size(); ++i) {
    const Rational qau = Q.transition(s.a, is.interior[i]);
    if (qau == 0) continue;
    tf.psi += RationalFunction(qau) * is.to_b[i];
    tf.theta += RationalFunction(qau) * is.to_a[i];
  }
  tf.z_minus_theta = RationalFunction::variable() - tf.theta;
  tf.phi = tf.z_minus_theta / tf.psi;
  tf.lambda0_minus_b = spectral_radius(Q.without({s.b}));
  tf.lambda0_interior = spectral_radius(Q.without({s.a, s.b}));
  return tf;
}

BoundaryKernels boundary_kernels(const Substituent& s) {
  const InteriorSolve is = solve_interior(s);
  const std::size_t n = s.graph.vertex_count();
  BoundaryKernels k;
  k.to_a.assign(n, RationalFunction());
  k.to_b.assign(n, RationalFunction());
  k.to_a[s.a] = RationalFunction(1L);
  k.to_b[s.b] = RationalFunction(1L);
  for (std::size_t i = 0; i < is.interior.size(); ++i) {
    k.to_a[is.interior[i]] = is.to_a[i];
    k.to_b[is.interior[i]] = is.to_b[i];
  }
  return k;
}

std::vector<double> solve_boundary(const BoundaryKernels& k, std::size_t a, std::size_t b,
                                   const std::vector<double>& interior_spectrum, double alpha, double beta, double z) {
  for (double mu : interior_spectrum)
    if (std::abs(z - mu) <= 1e-9)
      throw Error(ErrorCode::TooCloseToInteriorSpectrum, "z=" + std::to_string(z) + " near " + std::to_string(mu));
  std::vector<double> f(k.to_a.size(), 0.0);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (v == a) {
      f[v] = alpha;
    } else if (v == b) {
      f[v] = beta;
    } else {
      f[v] = (alpha != 0.0 ? alpha * k.to_a[v].evaluate(z) : 0.0) + (beta != 0.0 ? beta * k.to_b[v].evaluate(z) : 0.0);
    }
  }
  return f;
}

bool ResolventIdentityReport::all_equal() const {
  for (const auto& c : checks)
    if (!c.equal) return false;
  return !checks.empty();
}

ResolventIdentityReport verify_resolvent_identity(const WeightedGraph& X, const Substituent& s, const Rational& z,
                                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const TransferFunctions tf = compute_transfer(s);
  ResolventIdentityReport r;
  r.z = z;
  auto phi = tf.phi.evaluate(z);
  auto psi = tf.psi.evaluate(z);
  if (!phi || !psi || *psi == 0) throw Error(ErrorCode::KernelPole, "phi or psi undefined at z=" + to_string(z));
  r.phi_z = *phi;
  r.psi_z = *psi;

  const SubstitutedGraph sg = substitute(X, Orientation::standard(X), s);
  const RationalMatrix Pstar = ReversibleOperator(sg.graph).rational_matrix();
  const RationalMatrix P = ReversibleOperator(X).rational_matrix();
  for (const auto& [x, y] : pairs) {
    ResolventPairCheck c;
    c.x = x;
    c.y = y;
    c.left = resolvent_entry_at(Pstar, x, y, z);
    c.right = resolvent_entry_at(P, x, y, r.phi_z) / r.psi_z;
    c.equal = c.left == c.right;
    r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace gsub
