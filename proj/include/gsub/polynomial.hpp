#pragma once

#include <gsub/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace gsub {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The representation is normalized: no trailing zero coefficients, so the
/// zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& constant);  // NOLINT: implicit on purpose
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable();  // z
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;

  Rational evaluate(const Rational& z) const;
  double evaluate(double z) const;
  std::vector<double> to_doubles() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static void divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem);
  /// Monic gcd (zero only when both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);
  /// Exact quotient; the caller guarantees divisibility.
  static Polynomial exact_div(const Polynomial& num, const Polynomial& den);

  /// Ascending terms, e.g. "5 z - 20 z^3 + 16 z^5"; "0" for zero.
  std::string to_string(std::string_view var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

enum class ChebyshevKind { First, Second };

/// T_L or U_L from the three-term recurrence p_{n+1} = 2z p_n - p_{n-1}.
Polynomial chebyshev(ChebyshevKind kind, int degree);

}  // namespace gsub
