#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "liestrata/error.hpp"
#include "liestrata/polynomial.hpp"
#include "liestrata/rational.hpp"

namespace liestrata {

namespace detail {

/// sign of x + y*sqrt(p), p > 0.
inline int sign_sqrt(const Rational& x, const Rational& y, const Integer& p) {
  const int sx = sgn(x), sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  const int c = sgn(x * x - y * y * Rational(p));  // |x| vs |y| sqrt(p)
  return c == 0 ? 0 : (c > 0 ? sx : sy);
}

/// sign of x + y*sqrt(p) + z*sqrt(q).
inline int sign_two_sqrt(const Rational& x, const Rational& y, const Integer& p, const Rational& z, const Integer& q) {
  if (p == q) return sign_sqrt(x, y + z, p);
  const int sa = sign_sqrt(x, y, p), sb = sgn(z);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // compare (x + y sqrt p)^2 with z^2 q
  const int c = sign_sqrt(x * x + y * y * Rational(p) - z * z * Rational(q), 2 * x * y, p);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

/// Largest square divisor removed: returns (k, r) with v = k^2 r, r squarefree.
inline std::pair<Integer, Integer> square_split(Integer v) {
  Integer k = 1, r = 1;
  for (Integer p = 2; p * p <= v; ++p) {
    while (v % (p * p) == 0) {
      v /= p * p;
      k *= p;
    }
    if (v % p == 0) {
      v /= p;
      r *= p;
    }
  }
  return {k, r * v};
}

}  // namespace detail

/// a + b*sqrt(d) with d a squarefree integer > 1, or b = 0 (then d = 1).
class RealQuadratic {
 public:
  RealQuadratic() : d_(1) {}
  RealQuadratic(Rational a) : a_(std::move(a)), d_(1) {}  // NOLINT
  RealQuadratic(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) { normalize(); }

  /// Roots of c2 x^2 + c1 x + c0 (c2 != 0), ascending.
  static std::vector<RealQuadratic> quadratic_roots(const Rational& c2, const Rational& c1, const Rational& c0) {
    const Rational disc = c1 * c1 - 4 * c2 * c0;
    if (disc < 0) return {};
    const Rational a = -c1 / (2 * c2);
    if (disc == 0) return {RealQuadratic(a)};
    // sqrt(disc) = sqrt(num*den)/den
    const Integer nd = disc.get_num() * disc.get_den();
    auto [k, r] = detail::square_split(nd);
    Rational b{k, disc.get_den()};
    b.canonicalize();
    b /= 2 * c2;
    if (b < 0) b = -b;
    return {RealQuadratic(a, -b, r), RealQuadratic(a, b, r)};
  }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Integer& d() const noexcept { return d_; }
  bool is_rational() const noexcept { return b_ == 0; }

  double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

  int sign() const { return detail::sign_sqrt(a_, b_, d_); }

  friend int compare(const RealQuadratic& x, const RealQuadratic& y) {
    return detail::sign_two_sqrt(x.a_ - y.a_, x.b_, x.d_, -y.b_, y.d_);
  }
  friend bool operator<(const RealQuadratic& x, const RealQuadratic& y) { return compare(x, y) < 0; }
  friend bool operator>(const RealQuadratic& x, const RealQuadratic& y) { return compare(x, y) > 0; }
  friend bool operator==(const RealQuadratic& x, const RealQuadratic& y) { return compare(x, y) == 0; }

  friend RealQuadratic operator+(const RealQuadratic& x, const RealQuadratic& y) {
    return RealQuadratic(x.a_ + y.a_, x.b_ + y.b_, common(x, y));
  }
  friend RealQuadratic operator-(const RealQuadratic& x) { return RealQuadratic(-x.a_, -x.b_, x.d_); }
  friend RealQuadratic operator-(const RealQuadratic& x, const RealQuadratic& y) { return x + (-y); }
  friend RealQuadratic operator*(const RealQuadratic& x, const RealQuadratic& y) {
    const Integer d = common(x, y);
    return RealQuadratic(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
  }

  /// Rational r with |r - value| <= 2^-bits.
  Rational approximate(unsigned bits) const {
    if (b_ == 0) return a_;
    const unsigned extra = bits + 4 + static_cast<unsigned>(mpz_sizeinbase(b_.get_num_mpz_t(), 2));
    Integer scaled = d_;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * extra);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Integer den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), extra);
    Rational s{root, den};
    s.canonicalize();
    return a_ + b_ * s;
  }

  std::string to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string s = a_ == 0 ? "" : a_.get_str();
    const Rational mag = b_ < 0 ? Rational(-b_) : b_;
    if (s.empty())
      s = b_ < 0 ? "-" : "";
    else
      s += b_ < 0 ? " - " : " + ";
    if (mag != 1) s += mag.get_str() + "*";
    return s + "sqrt(" + d_.get_str() + ")";
  }

 private:
  static Integer common(const RealQuadratic& x, const RealQuadratic& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_) throw Error(ErrorCode::UnsupportedShape, "arithmetic across different quadratic fields");
    return x.d_;
  }
  void normalize() {
    if (b_ == 0 || d_ == 1) {
      if (d_ == 1) a_ += b_;
      b_ = 0;
      d_ = 1;
      return;
    }
    if (d_ <= 0) throw Error(ErrorCode::DimensionMismatch, "quadratic radicand must be positive");
    auto [k, r] = detail::square_split(d_);
    b_ *= Rational(k);
    d_ = r;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }
  Rational a_, b_;
  Integer d_;
};

/// Value of a univariate polynomial at a quadratic number.
inline RealQuadratic evaluate(const UPoly& f, const RealQuadratic& x) {
  RealQuadratic acc(Rational(0));
  for (int k = f.degree(); k >= 0; --k) acc = acc * x + RealQuadratic(f.coeff(k));
  return acc;
}

/// A rational strictly between lo < hi.
inline Rational rational_between(const RealQuadratic& lo, const RealQuadratic& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::DimensionMismatch, "empty interval");
  const double dl = lo.to_double(), dh = hi.to_double();
  if (std::isfinite(dl) && std::isfinite(dh)) {
    const Rational m = from_double(0.5 * (dl + dh));
    if (lo < RealQuadratic(m) && RealQuadratic(m) < hi) return m;
  }
  for (unsigned bits = 32;; bits *= 2) {
    const Rational m = (lo.approximate(bits) + hi.approximate(bits)) / 2;
    if (lo < RealQuadratic(m) && RealQuadratic(m) < hi) return m;
    if (bits > (1u << 20)) throw Error(ErrorCode::UnsupportedShape, "could not separate interval endpoints");
  }
}

/// Real roots of f that are rational or quadratic irrational, ascending. Throws
/// UnsupportedShape if other real roots exist in (lo, hi).
inline std::vector<RealQuadratic> quadratic_real_roots(const UPoly& f, const Rational& lo, const Rational& hi) {
  std::vector<RealQuadratic> out;
  if (f.degree() < 1) return out;
  const auto rat = rational_roots(f);
  for (const auto& r : rat) out.emplace_back(r);
  const UPoly rest = deflate(squarefree_part(f), rat);
  if (rest.degree() == 2) {
    for (auto& r : RealQuadratic::quadratic_roots(rest.coeff(2), rest.coeff(1), rest.coeff(0))) out.push_back(r);
  } else if (rest.degree() > 2 && sturm_count(rest, lo, hi) > 0) {
    throw Error(ErrorCode::UnsupportedShape,
                "irreducible factor of degree " + std::to_string(rest.degree()) + " has roots in range");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace liestrata
