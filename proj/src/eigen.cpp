#include <gsub/eigen.hpp>
#include <gsub/linalg.hpp>

#include <cmath>
#include <map>

namespace gsub {

ReversibleOperator::ReversibleOperator(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  m_.resize(n);
  rows_.resize(n);
  keep_.assign(n, true);
  for (std::size_t x = 0; x < n; ++x) {
    m_[x] = g.total_conductance(x);
    std::map<std::size_t, Rational> acc;
    for (std::size_t e : g.incident(x)) acc[g.other(e, x)] += g.edge(e).conductance;
    for (auto& [y, a] : acc) rows_[x].emplace_back(y, a);
    support_.push_back(x);
  }
}

ReversibleOperator ReversibleOperator::restrict_to(const std::vector<bool>& keep) const {
  ReversibleOperator r = *this;
  r.support_.clear();
  for (std::size_t x = 0; x < m_.size(); ++x) {
    r.keep_[x] = keep_[x] && keep[x];
    if (r.keep_[x]) r.support_.push_back(x);
  }
  for (std::size_t x = 0; x < m_.size(); ++x) {
    auto& row = r.rows_[x];
    if (!r.keep_[x]) {
      row.clear();
      continue;
    }
    std::erase_if(row, [&](const auto& ya) { return !r.keep_[ya.first]; });
  }
  return r;
}

ReversibleOperator ReversibleOperator::without(std::initializer_list<std::size_t> drop) const {
  std::vector<bool> keep(m_.size(), true);
  for (std::size_t x : drop) keep.at(x) = false;
  return restrict_to(keep);
}

Rational ReversibleOperator::transition(std::size_t x, std::size_t y) const {
  for (const auto& [w, a] : rows_[x])
    if (w == y) return a / m_[x];
  return 0;
}

std::vector<double> ReversibleOperator::apply(const std::vector<double>& f) const {
  std::vector<double> out(m_.size(), 0.0);
  for (std::size_t x : support_) {
    double s = 0.0;
    for (const auto& [y, a] : rows_[x]) s += to_double(a) * f[y];
    out[x] = s / to_double(m_[x]);
  }
  return out;
}

RationalMatrix ReversibleOperator::rational_matrix() const {
  const std::size_t k = support_.size();
  std::vector<std::size_t> pos(m_.size(), k);
  for (std::size_t i = 0; i < k; ++i) pos[support_[i]] = i;
  RationalMatrix M(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t x = support_[i];
    for (const auto& [y, a] : rows_[x]) M[i][pos[y]] = a / m_[x];
  }
  return M;
}

std::size_t EigenDecomposition::total_multiplicity() const {
  std::size_t s = 0;
  for (const auto& c : clusters) s += c.multiplicity;
  return s;
}

std::optional<std::size_t> EigenDecomposition::find(double value, double tol) const {
  std::optional<std::size_t> best;
  double dist = tol;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    double d = std::abs(clusters[i].value - value);
    if (d <= dist) {
      dist = d;
      best = i;
    }
  }
  return best;
}

std::vector<double> EigenDecomposition::values() const {
  std::vector<double> v;
  for (const auto& c : clusters) v.push_back(c.value);
  return v;
}

double inner_m(const std::vector<double>& f, const std::vector<double>& g, const std::vector<double>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i] * m[i];
  return s;
}

EigenDecomposition eigen(const ReversibleOperator& op, double cluster_tol) {
  EigenDecomposition d;
  d.cluster_tol = cluster_tol;
  d.support = op.support();
  const std::size_t N = op.full_size(), k = d.support.size();
  d.measure.resize(N);
  for (std::size_t x = 0; x < N; ++x) d.measure[x] = to_double(op.measure(x));
  if (k == 0) return d;

  std::vector<std::size_t> pos(N, k);
  for (std::size_t i = 0; i < k; ++i) pos[d.support[i]] = i;
  std::vector<double> sqm(k);
  for (std::size_t i = 0; i < k; ++i) sqm[i] = std::sqrt(d.measure[d.support[i]]);

  // s(x,y) = a(x,y) / sqrt(m(x) m(y)) is symmetric and similar to P.
  Matrix S(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t x = d.support[i];
    for (const auto& [y, a] : op.row(x)) {
      const std::size_t j = pos[y];
      S(i, j) = to_double(a) / (sqm[i] * sqm[j]);
    }
  }
  const SymmetricEigen se = jacobi_eigen(S);

  std::size_t start = 0;
  while (start < k) {
    std::size_t end = start + 1;
    while (end < k && se.values[end - 1] - se.values[end] <= cluster_tol) ++end;
    EigenCluster c;
    c.multiplicity = end - start;
    double sum = 0.0;
    for (std::size_t t = start; t < end; ++t) {
      sum += se.values[t];
      std::vector<double> h(N, 0.0);
      for (std::size_t i = 0; i < k; ++i) h[d.support[i]] = se.vectors(i, t) / sqm[i];
      c.basis.push_back(std::move(h));
    }
    c.value = sum / static_cast<double>(c.multiplicity);
    // Modified Gram-Schmidt in the m-inner product.
    for (std::size_t p = 0; p < c.basis.size(); ++p) {
      for (std::size_t q = 0; q < p; ++q) {
        const double r = inner_m(c.basis[p], c.basis[q], d.measure);
        for (std::size_t x = 0; x < N; ++x) c.basis[p][x] -= r * c.basis[q][x];
      }
      const double nrm = std::sqrt(inner_m(c.basis[p], c.basis[p], d.measure));
      for (double& v : c.basis[p]) v /= nrm;
    }
    d.clusters.push_back(std::move(c));
    start = end;
  }
  return d;
}

double spectral_radius(const ReversibleOperator& op) {
  const EigenDecomposition d = eigen(op);
  return d.clusters.empty() ? 0.0 : d.clusters.front().value;
}

std::vector<double> local_spectrum(const EigenDecomposition& d, std::size_t x, double tol) {
  std::vector<double> out;
  for (const auto& c : d.clusters) {
    double r = 0.0;
    for (const auto& h : c.basis) r += d.measure[x] * h[x] * h[x];
    if (r > tol) out.push_back(c.value);
  }
  return out;
}

}  // namespace gsub
