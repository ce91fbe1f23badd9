#include <gsub/polynomial.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gsub {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::variable() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Rational Polynomial::evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::evaluate(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

std::vector<double> Polynomial::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_double(c));
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void Polynomial::divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = num.coeffs_;
  const std::size_t dn = den.coeffs_.size();
  if (r.size() < dn) {
    quot = Polynomial();
    rem = num;
    return;
  }
  std::vector<Rational> q(r.size() - dn + 1);
  const Rational inv_lead = 1 / den.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = r[k + dn - 1] * inv_lead;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) r[k + j] -= c * den.coeffs_[j];
  }
  r.resize(dn - 1);
  quot = Polynomial(std::move(q));
  rem = Polynomial(std::move(r));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Polynomial Polynomial::exact_div(const Polynomial& num, const Polynomial& den) {
  Polynomial q, r;
  divmod(num, den, q, r);
  if (!r.is_zero()) throw std::logic_error("Polynomial::exact_div: non-zero remainder");
  return q;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << gsub::to_string(mag);
      continue;
    }
    if (mag != 1) os << gsub::to_string(mag) << ' ';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Polynomial chebyshev(ChebyshevKind kind, int degree) {
  if (degree < 0) throw std::invalid_argument("chebyshev: negative degree");
  const Polynomial two_z = Polynomial::monomial(Rational(2), 1);
  Polynomial prev(1L);
  Polynomial cur = kind == ChebyshevKind::First ? Polynomial::variable() : two_z;
  if (degree == 0) return prev;
  for (int n = 1; n < degree; ++n) {
    Polynomial next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace gsub
