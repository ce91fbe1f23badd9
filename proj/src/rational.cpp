#include <gsub/error.hpp>
#include <gsub/rational.hpp>

#include <cctype>
#include <string>

namespace gsub {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GammaNotAutomorphism: return "GammaNotAutomorphism";
    case ErrorCode::GammaDoesNotSwapAB: return "GammaDoesNotSwapAB";
    case ErrorCode::VMinusBDisconnected: return "VMinusBDisconnected";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::CyclesNotOdd: return "CyclesNotOdd";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TooCloseToInteriorSpectrum: return "TooCloseToInteriorSpectrum";
    case ErrorCode::KernelPole: return "KernelPole";
    case ErrorCode::RankAmbiguous: return "RankAmbiguous";
    case ErrorCode::S2ConsistencyFailure: return "S2ConsistencyFailure";
    case ErrorCode::InvalidTypeCombination: return "InvalidTypeCombination";
    case ErrorCode::TotalMismatch: return "TotalMismatch";
    case ErrorCode::PreconditionNotMet: return "PreconditionNotMet";
    case ErrorCode::NoSuchCluster: return "NoSuchCluster";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  bool negative = false;
  std::string body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw Error(ErrorCode::ParseError, "bad fraction '" + s + "'");
    mpz_class den(d, 10);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    out = Rational(mpz_class(n, 10), den);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw Error(ErrorCode::ParseError, "bad decimal '" + s + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    out = Rational(mpz_class(ip + fp, 10), scale);
  } else {
    if (!all_digits(body)) throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
    out = Rational(mpz_class(body, 10));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace gsub
