#pragma once

#include <gsub/polynomial.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace gsub {

/// num/den over Q with gcd(num, den) = 1 and den monic. Equality of two
/// RationalFunctions is therefore equality of the represented functions.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  /// Reduces to lowest terms. Throws std::domain_error if den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Exact value; nullopt at a pole.
  std::optional<Rational> evaluate(const Rational& z) const;
  /// Float value. Refuses |den(z)| < pole_guard by throwing
  /// Error(TooCloseToInteriorSpectrum).
  double evaluate(double z, double pole_guard = 1e-12) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(c0 + c1 z + ...) / (d0 + d1 z + ...)" with exact fraction coefficients.
  std::string to_string(std::string_view var = "z") const;
  static RationalFunction parse(std::string_view text);

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace gsub
