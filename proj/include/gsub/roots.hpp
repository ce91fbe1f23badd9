#pragma once

#include <cstddef>
#include <vector>

namespace gsub {

struct RootOptions {
  std::size_t grid = 4096;  // intervals across [lo, hi]
  double tol = 1e-10;       // requested absolute accuracy
  double polish = 1e-13;    // Newton stopping step
};

struct Root {
  double value;
  int multiplicity;  // 1, or 2 for a detected touching root
};

/// Real roots of sum_k coeffs[k] z^k in [lo, hi], ascending.
/// Throws Error(GridTooCoarse) when a cell seems to hide two distinct roots.
std::vector<Root> real_roots_in_interval(const std::vector<double>& coeffs, double lo, double hi,
                                         const RootOptions& opts = {});

double horner(const std::vector<double>& coeffs, double z);

}  // namespace gsub
