#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "liestrata/error.hpp"

namespace liestrata {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

inline int sign(const Rational& q) { return sgn(q); }

/// Parses "p", "-p", "p/q" (whitespace-trimmed). Denominator must be nonzero.
inline Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part) {
    std::size_t i = 0;
    if (!part.empty() && part[0] == '-') i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    return Rational(Integer(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  Integer d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  Rational q{Integer(num), d};
  q.canonicalize();
  return q;
}

/// Canonical "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

/// Exact conversion of a finite double to a rational.
inline Rational from_double(double x) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// q^e for integer e (negative allowed when q != 0).
inline Rational pow(const Rational& q, long e) {
  Rational base = e < 0 ? Rational(1) / q : q;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rational r{num, den};
  r.canonicalize();
  return r;
}

}  // namespace liestrata
