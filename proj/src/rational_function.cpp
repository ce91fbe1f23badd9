#include <gsub/error.hpp>
#include <gsub/rational_function.hpp>

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gsub {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(1L);
    return;
  }
  Polynomial g = Polynomial::gcd(num, den);
  if (g.degree() > 0) {
    num = Polynomial::exact_div(num, g);
    den = Polynomial::exact_div(den, g);
  }
  Rational lead = den.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

std::optional<Rational> RationalFunction::evaluate(const Rational& z) const {
  Rational d = den_.evaluate(z);
  if (d == 0) return std::nullopt;
  return num_.evaluate(z) / d;
}

double RationalFunction::evaluate(double z, double pole_guard) const {
  double d = den_.evaluate(z);
  if (std::abs(d) < pole_guard)
    throw Error(ErrorCode::TooCloseToInteriorSpectrum,
                "denominator " + std::to_string(d) + " at z=" + std::to_string(z));
  return num_.evaluate(z) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ - o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  // Cross-cancel first so the product never needs a large gcd.
  Polynomial g1 = Polynomial::gcd(num_, o.den_);
  Polynomial g2 = Polynomial::gcd(o.num_, den_);
  Polynomial n1 = Polynomial::exact_div(num_, g1), d2 = Polynomial::exact_div(o.den_, g1);
  Polynomial n2 = Polynomial::exact_div(o.num_, g2), d1 = Polynomial::exact_div(den_, g2);
  *this = RationalFunction(n1 * n2, d1 * d2);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return *this *= RationalFunction(o.den_, o.num_);
}

std::string RationalFunction::to_string(std::string_view var) const {
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  // "(poly)" or a bare polynomial
  Polynomial parse_factor() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') return parse_parenthesized();
    return parse_sum();
  }

  Polynomial parse_parenthesized() {
    skip();
    expect('(');
    Polynomial p = parse_sum();
    skip();
    expect(')');
    return p;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw Error(ErrorCode::ParseError, std::string("expected '") + c + "' in rational function");
    ++pos_;
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Polynomial parse_sum() {
    Polynomial acc;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      acc += parse_term() * Rational(sign);
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial parse_term() {
    skip();
    Rational coeff = 1;
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                                s_[pos_] == '.'))
      ++pos_;
    if (pos_ > start) coeff = parse_rational(s_.substr(start, pos_ - start));
    skip();
    std::size_t degree = 0;
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
      degree = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) throw Error(ErrorCode::ParseError, "missing exponent");
        degree = std::stoul(std::string(s_.substr(ds, pos_ - ds)));
      }
    } else if (pos_ == start) {
      throw Error(ErrorCode::ParseError, "empty term in rational function");
    }
    return Polynomial::monomial(coeff, degree);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text) {
  PolyParser p(text);
  Polynomial num = p.parse_factor();
  Polynomial den(1L);
  if (!p.at_end()) {
    p.expect('/');
    den = p.parse_factor();
  }
  if (!p.at_end()) throw Error(ErrorCode::ParseError, "trailing input in rational function");
  if (den.is_zero()) throw Error(ErrorCode::ParseError, "zero denominator");
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace gsub
