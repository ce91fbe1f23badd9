#include <gsub/error.hpp>
#include <gsub/roots.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsub {

double horner(const std::vector<double>& coeffs, double z) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

namespace {

std::vector<double> derive(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<double>(k));
  return d;
}

int sign(double v) { return (v > 0) - (v < 0); }

// Bisection on a sign change in [lo, hi] followed by safeguarded Newton.
double refine(const std::vector<double>& p, const std::vector<double>& dp, double lo, double hi,
              const RootOptions& opts) {
  int slo = sign(horner(p, lo));
  for (int it = 0; it < 200 && hi - lo > opts.tol * 0.01; ++it) {
    double mid = 0.5 * (lo + hi);
    int sm = sign(horner(p, mid));
    if (sm == 0) return mid;
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 50; ++it) {
    double d = horner(dp, x);
    if (d == 0.0) break;
    double step = horner(p, x) / d;
    double nx = x - step;
    if (nx < lo - opts.tol || nx > hi + opts.tol) break;
    x = nx;
    if (std::abs(step) < opts.polish) break;
  }
  return x;
}

}  // namespace

std::vector<Root> real_roots_in_interval(const std::vector<double>& coeffs, double lo, double hi,
                                         const RootOptions& opts) {
  if (!(lo < hi)) throw std::invalid_argument("real_roots_in_interval: lo >= hi");
  std::vector<double> p = coeffs;
  while (!p.empty() && p.back() == 0.0) p.pop_back();
  if (p.size() <= 1) return {};

  const std::vector<double> dp = derive(p);
  const std::vector<double> ddp = derive(dp);
  double scale = 0.0;
  for (double c : p) scale = std::max(scale, std::abs(c));
  const double touch_tol = 1e-12 * scale;

  const std::size_t n = std::max<std::size_t>(opts.grid, 2);
  const double h = (hi - lo) / static_cast<double>(n);
  std::vector<double> xs(n + 1), ps(n + 1), ds(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    xs[i] = i == n ? hi : lo + h * static_cast<double>(i);
    ps[i] = horner(p, xs[i]);
    ds[i] = horner(dp, xs[i]);
  }

  std::vector<Root> out;
  // A double root perturbed by rounding in the coefficients splits into two
  // simple roots about sqrt(eps) apart; fold such pairs back into one.
  const double merge = std::max(opts.tol * 10, 1e-7);
  auto push = [&](double x, int mult) {
    if (!out.empty() && std::abs(out.back().value - x) < merge) {
      Root& r = out.back();
      if (r.multiplicity == 1 && mult == 1) {
        const double l = std::min(r.value, x), u = std::max(r.value, x);
        r.value = sign(horner(dp, l)) != sign(horner(dp, u)) ? refine(dp, ddp, l, u, opts) : 0.5 * (l + u);
        r.multiplicity = 2;
      } else {
        r.multiplicity = std::max(r.multiplicity, mult);
      }
      return;
    }
    out.push_back({x, mult});
  };

  for (std::size_t i = 0; i < n; ++i) {
    const double a = xs[i], b = xs[i + 1];
    const int sa = sign(ps[i]), sb = sign(ps[i + 1]);
    if (sa == 0) {
      push(a, std::abs(ds[i]) <= touch_tol ? 2 : 1);
      continue;
    }
    if (sb == 0) continue;  // handled as the left end of the next cell
    if (sa != sb) {
      // One crossing is expected; a critical point whose value has the
      // opposite sign of its neighbour would mean three roots here.
      push(refine(p, dp, a, b, opts), 1);
      continue;
    }
    if (sign(ds[i]) != sign(ds[i + 1]) && sign(ds[i]) != 0 && sign(ds[i + 1]) != 0) {
      const double c = refine(dp, ddp, a, b, opts);
      const double pc = horner(p, c);
      if (std::abs(pc) <= touch_tol) {
        push(c, 2);
      } else if (sign(pc) != sa) {
        throw Error(ErrorCode::GridTooCoarse,
                    "two roots inside one cell near z=" + std::to_string(c) + " (grid " + std::to_string(n) + ")");
      }
    }
  }
  if (sign(ps[n]) == 0) push(xs[n], std::abs(ds[n]) <= touch_tol ? 2 : 1);
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) { return x.value < y.value; });
  return out;
}

}  // namespace gsub
