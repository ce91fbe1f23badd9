#pragma once

#include <gsub/eigen.hpp>
#include <gsub/graph.hpp>

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gsub {

enum class EigenType { I, II, III, IV };
/// Q acts on all of V; Interior is Q restricted to V minus {a, b}.
enum class Source { Q, Interior };

std::string to_string(EigenType t, Source s);

struct TypedEigenvalue {
  double value = 0.0;
  Source source = Source::Q;
  EigenType type = EigenType::I;
  std::size_t nu = 0;
  std::size_t nu_prime = 0;
  /// nu' eigenfunctions (full length over V) with vanishing boundary data.
  std::vector<std::vector<double>> block;
  /// II, III: {f_nu}; IV: {f_nu, f_{nu-1}} where f_nu has boundary (1,0).
  std::vector<std::vector<double>> tails;
  std::array<double, 2> boundary_singular_values{0.0, 0.0};
  bool rank_ambiguous = false;
};

inline constexpr double kRankTol = 1e-7;

/// (f(a), f(b)) for Source::Q, (Qf(a), Qf(b)) for Source::Interior.
std::pair<double, double> boundary_data(const Substituent& s, const ReversibleOperator& Q, const std::vector<double>& f,
                                        Source source);

/// (f o gamma)(v) = f(gamma(v)).
std::vector<double> compose_gamma(const std::vector<double>& f, const std::vector<std::size_t>& gamma);

/// decomp must come from eigen() of Q (source Q) or of Q on V-interior.
std::vector<TypedEigenvalue> classify(const Substituent& s, const EigenDecomposition& decomp, Source source);
std::vector<TypedEigenvalue> classify_Q(const Substituent& s, const EigenDecomposition& decomp);
std::vector<TypedEigenvalue> classify_interior(const Substituent& s, const EigenDecomposition& decomp);

/// Largest deviation of the normalized basis from its case template
/// (boundary values and gamma symmetry of the tails).
double normal_form_defect(const Substituent& s, const TypedEigenvalue& t);

}  // namespace gsub
