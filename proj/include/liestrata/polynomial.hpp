#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liestrata/error.hpp"
#include "liestrata/rational.hpp"

namespace liestrata {

/// Univariate polynomial over Q, coefficients from degree 0 upward.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(Rational v) { return UPoly(std::vector<Rational>{std::move(v)}); }
  static UPoly x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  double eval(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    const Rational l = lead();
    for (auto& x : r.c_) x /= l;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const Rational& s, const UPoly& a) { return UPoly::constant(s) * a; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DimensionMismatch, "polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    std::vector<Rational> q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), Rational(0));
    for (int k = a.degree(); k >= db; --k) {
      const Rational f = rem[static_cast<std::size_t>(k)] / b.lead();
      if (f == 0) continue;
      q[static_cast<std::size_t>(k - db)] = f;
      for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= f * b.c_[static_cast<std::size_t>(i)];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
  }

  std::string to_string(const std::string& var) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = UPoly::divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::DimensionMismatch, "inexact polynomial division");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = UPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline UPoly squarefree_part(const UPoly& f) {
  if (f.degree() < 1) return f.monic();
  return exact_div(f.monic(), gcd(f, f.derivative()));
}

namespace detail {

inline std::string monomial_string(const std::vector<std::pair<std::string, int>>& factors) {
  std::string s;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

/// Appends "+ c*m" in readable form.
inline void append_term(std::string& out, const Rational& c, const std::string& mono) {
  const bool neg = c < 0;
  const Rational mag = neg ? Rational(-c) : c;
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (mono.empty())
    out += mag.get_str();
  else if (mag == 1)
    out += mono;
  else
    out += mag.get_str() + "*" + mono;
}

}  // namespace detail

inline std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational c = coeff(k);
    if (c == 0) continue;
    detail::append_term(out, c, detail::monomial_string({{var, k}}));
  }
  return out;
}

/// Number of distinct real roots in the open interval (lo, hi), lo < hi.
inline std::size_t sturm_count(const UPoly& f, const Rational& lo, const Rational& hi) {
  if (f.degree() < 1) return 0;
  const UPoly g = squarefree_part(f);
  std::vector<UPoly> seq{g, g.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = UPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto changes = [&](const Rational& x) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& p : seq) {
      const int s = sgn(p(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  // V(lo) - V(hi) counts roots in (lo, hi]
  std::size_t count = changes(lo) - changes(hi);
  if (g(hi) == 0) --count;
  return count;
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer v) {
  if (v < 0) v = -v;
  if (v == 0) return {};
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 62)
    throw Error(ErrorCode::UnsupportedShape, "coefficient too large for rational root search");
  std::vector<std::pair<Integer, int>> primes;
  Integer x = v;
  for (Integer p = 2; p * p <= x; ++p) {
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e) primes.push_back({p, e});
    if (p > 2000000) throw Error(ErrorCode::UnsupportedShape, "coefficient too large for rational root search");
  }
  if (x > 1) primes.push_back({x, 1});
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace detail

/// Distinct rational roots, ascending.
inline std::vector<Rational> rational_roots(const UPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::UnsupportedShape, "rational roots of the zero polynomial");
  std::vector<Rational> roots;
  UPoly g = squarefree_part(f);
  if (g.degree() < 1) return roots;
  if (g.coeff(0) == 0) {
    roots.push_back(0);
    g = exact_div(g, UPoly::x());
  }
  if (g.degree() >= 1) {
    Integer l = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    const Integer a0 = Rational(g.coeff(0) * l).get_num(), an = Rational(g.lead() * l).get_num();
    for (const auto& p : detail::positive_divisors(a0))
      for (const auto& q : detail::positive_divisors(an))
        for (int s : {1, -1}) {
          Rational cand{Integer(p * s), q};
          cand.canonicalize();
          if (g(cand) == 0) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

/// Divides out (x - r) for each given root, once.
inline UPoly deflate(UPoly f, const std::vector<Rational>& roots) {
  for (const auto& r : roots) f = exact_div(f, UPoly(std::vector<Rational>{Rational(-r), Rational(1)}));
  return f;
}

/// Multivariate polynomial over Q in a fixed number of variables.
class Poly {
 public:
  using Monomial = std::vector<int>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }
  static Poly var(std::size_t nvars, std::size_t i) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m.at(i) = 1;
    p.terms_[m] = 1;
    return p;
  }
  /// c + sum coeffs[i] * x_i
  static Poly linear(const Rational& c, const RationalVector& coeffs) {
    Poly p = constant(coeffs.size(), c);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) p += Poly::constant(coeffs.size(), coeffs[i]) * var(coeffs.size(), i);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0));
  }
  Rational constant_term() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (int e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }
  int degree_in(std::size_t i) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
  }
  bool depends_on(std::size_t i) const { return degree_in(i) > 0; }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) {
      auto& slot = terms_[m];
      slot += c;
      if (slot == 0) terms_.erase(m);
    }
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(a.nvars_);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        auto& slot = r.terms_[m];
        slot += ca * cb;
        if (slot == 0) r.terms_.erase(m);
      }
    return r;
  }
  friend Poly operator*(const Rational& s, const Poly& a) { return Poly::constant(a.nvars_, s) * a; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  Poly pow(unsigned k) const {
    Poly r = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  Rational operator()(const RationalVector& x) const {
    if (x.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "point has wrong number of coordinates");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i]) t *= liestrata::pow(x[i], m[i]);
      acc += t;
    }
    return acc;
  }

  /// Replaces x_i by a rational value (variable count unchanged).
  Poly substitute(std::size_t i, const Rational& v) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      mm[i] = 0;
      Poly t(nvars_);
      t.terms_[mm] = c * liestrata::pow(v, m[i]);
      if (t.terms_[mm] == 0) t.terms_.clear();
      r += t;
    }
    return r;
  }

  /// Coefficients of x_i^k, k = 0..degree_in(i), as polynomials free of x_i.
  std::vector<Poly> coefficients_in(std::size_t i) const {
    std::vector<Poly> out(static_cast<std::size_t>(std::max(0, degree_in(i) + 1)), Poly(nvars_));
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      mm[i] = 0;
      out[static_cast<std::size_t>(m[i])].terms_[mm] = c;
    }
    return out;
  }

  /// View as a polynomial in x_i alone; throws if another variable occurs.
  UPoly univariate(std::size_t i) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_in(i) + 1)), Rational(0));
    for (const auto& [m, v] : terms_) {
      for (std::size_t j = 0; j < nvars_; ++j)
        if (j != i && m[j] != 0) throw Error(ErrorCode::UnsupportedShape, "polynomial is not univariate");
      c[static_cast<std::size_t>(m[i])] = v;
    }
    return UPoly(std::move(c));
  }

  static Poly from_univariate(std::size_t nvars, std::size_t i, const UPoly& u) {
    Poly r(nvars);
    for (int k = 0; k <= u.degree(); ++k) {
      if (u.coeff(k) == 0) continue;
      Monomial m(nvars, 0);
      m[i] = k;
      r.terms_[m] = u.coeff(k);
    }
    return r;
  }

  /// Rational lambda with b = lambda * a, if any.
  static std::optional<Rational> proportion(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero() || a.terms_.size() != b.terms_.size()) return std::nullopt;
    const Rational lambda = b.terms_.begin()->second / a.terms_.begin()->second;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ib->second != lambda * ia->second) return std::nullopt;
    return lambda;
  }

  /// Terms by descending total degree, then descending exponent vector.
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
    auto deg = [](const Monomial& m) {
      int s = 0;
      for (int e : m) s += e;
      return s;
    };
    std::stable_sort(ts.begin(), ts.end(), [&](const auto& x, const auto& y) {
      if (deg(x.first) != deg(y.first)) return deg(x.first) > deg(y.first);
      return x.first > y.first;
    });
    std::string out;
    for (const auto& [m, c] : ts) {
      std::vector<std::pair<std::string, int>> f;
      for (std::size_t i = 0; i < nvars_; ++i) f.push_back({names.at(i), m[i]});
      detail::append_term(out, c, detail::monomial_string(f));
    }
    return out;
  }

 private:
  void check(const Poly& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
  }
  std::size_t nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Bivariate view: polynomial in x_j with coefficients in Q[x_i].
inline std::vector<UPoly> as_poly_over(const Poly& f, std::size_t j, std::size_t i) {
  std::vector<UPoly> out;
  for (const auto& c : f.coefficients_in(j)) out.push_back(c.univariate(i));
  return out;
}

/// Resultant of two polynomials in x with coefficients in Q[y], via the Sylvester matrix.
inline UPoly resultant(const std::vector<UPoly>& f, const std::vector<UPoly>& g) {
  const int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
  if (m < 0 || n < 0) return {};
  if (m == 0 && n == 0) return UPoly::constant(1);
  const int size = m + n;
  std::vector<std::vector<UPoly>> a(static_cast<std::size_t>(size), std::vector<UPoly>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - k)] = f[static_cast<std::size_t>(k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      a[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] = g[static_cast<std::size_t>(k)];
  // fraction-free Bareiss over Q[y]
  int sign = 1;
  UPoly prev = UPoly::constant(1);
  const auto N = static_cast<std::size_t>(size);
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && a[piv][c].is_zero()) ++piv;
    if (piv == N) return {};
    if (piv != c) {
      std::swap(a[piv], a[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < N; ++r) {
      for (std::size_t k = c + 1; k < N; ++k) a[r][k] = exact_div(a[c][c] * a[r][k] - a[r][c] * a[c][k], prev);
      a[r][c] = UPoly();
    }
    prev = a[c][c];
  }
  return sign > 0 ? a[N - 1][N - 1] : -a[N - 1][N - 1];
}

}  // namespace liestrata
