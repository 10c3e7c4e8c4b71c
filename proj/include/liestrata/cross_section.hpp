#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "liestrata/algebraic.hpp"
#include "liestrata/combinatorics.hpp"
#include "liestrata/core_types.hpp"
#include "liestrata/error.hpp"
#include "liestrata/exact_linalg.hpp"
#include "liestrata/jacobi.hpp"
#include "liestrata/polynomial.hpp"
#include "liestrata/rational.hpp"

namespace liestrata {

/// s, t, u, v for up to four parameters, else t1..td.
inline std::vector<std::string> parameter_names(std::size_t d) {
  static const char* short_names[] = {"s", "t", "u", "v"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(d <= 4 ? short_names[i] : "t" + std::to_string(i + 1));
  return out;
}

struct CrossSectionSpec {
  IndexSet lambda;
  RationalVector a0;
  std::vector<IntVector> W;
  Rational p = 1;
  std::vector<SignVector> T;
  bool spans_kernel = false;
  std::optional<bool> center_is_lie;  // unset outside Theta mode

  std::size_t dim() const noexcept { return W.size(); }
  std::size_t m() const noexcept { return lambda.size(); }
};

/// Per quadruple in table order, w(P_1, P_k) for k >= 2 when independent, completed by
/// kernel vectors if the Lambda-subspace does not span Null(Y^T).
inline std::vector<IntVector> default_directions(const IndexSet& lambda) {
  const std::size_t m = lambda.size();
  std::vector<IntVector> out;
  auto try_add = [&](const IntVector& w) {
    std::vector<IntVector> ext = out;
    ext.push_back(w);
    if (rational_rank(ext, m) == ext.size()) out.push_back(w);
  };
  if (lambda.mode() == Mode::Theta) {
    const auto table = quadruple_table(lambda);
    for (const auto& e : table.entries())
      for (std::size_t k = 1; k < e.pairs.size(); ++k) try_add(w_vector(m, e.pairs[0], e.pairs[k]));
  }
  for (const auto& w : left_null_basis(root_matrix(lambda))) try_add(w);
  return out;
}

inline CrossSectionSpec make_cross_section(const IndexSet& lambda, std::optional<RationalVector> a0 = std::nullopt,
                                           std::optional<std::vector<IntVector>> directions = std::nullopt,
                                           Rational p = 1) {
  const std::size_t m = lambda.size();
  CrossSectionSpec spec;
  spec.lambda = lambda;
  spec.a0 = a0 ? *a0 : RationalVector(m, Rational(1));
  if (spec.a0.size() != m)
    throw Error(ErrorCode::DimensionMismatch, "center has " + std::to_string(spec.a0.size()) + " entries, expected " +
                                                  std::to_string(m));
  for (std::size_t k = 0; k < m; ++k)
    if (spec.a0[k] <= 0)
      throw Error(ErrorCode::NonPositiveCenter, "center entry " + std::to_string(k + 1) + " is " + to_string(spec.a0[k]));
  if (p == 0) throw Error(ErrorCode::DimensionMismatch, "exponent must be nonzero");
  spec.p = p;
  const IntegerMatrix y = root_matrix(lambda);
  spec.W = directions ? *directions : default_directions(lambda);
  for (const auto& w : spec.W) {
    if (w.size() != m) throw Error(ErrorCode::DimensionMismatch, "direction has wrong length");
    for (std::size_t c = 0; c < y.cols(); ++c) {
      long long s = 0;
      for (std::size_t r = 0; r < m; ++r) s += w[r] * y(r, c);
      if (s != 0) throw Error(ErrorCode::DimensionMismatch, "direction is not in Null(Y^T)");
    }
  }
  if (rational_rank(spec.W, m) != spec.W.size())
    throw Error(ErrorCode::DimensionMismatch, "directions are linearly dependent");
  spec.spans_kernel = spec.W.size() == m - rank(y);
  spec.T = gf2_coset_transversal(gf2_root_matrix(lambda));
  if (lambda.mode() == Mode::Theta)
    spec.center_is_lie = is_lie(jacobi_system(lambda), StructureVector(lambda, spec.a0));
  return spec;
}

/// constant + coeffs . x > 0
struct Inequality {
  Rational constant;
  RationalVector coeffs;
  std::vector<std::size_t> sources;  // 0-based positions of Lambda

  Rational operator()(const RationalVector& x) const {
    Rational v = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * x[i];
    return v;
  }
  RealQuadratic operator()(const std::vector<RealQuadratic>& x) const {
    RealQuadratic v(constant);
    for (std::size_t i = 0; i < coeffs.size(); ++i) v = v + RealQuadratic(coeffs[i]) * x[i];
    return v;
  }

  /// Scaled so the constant term is 1 (constant is positive for a positive center).
  Inequality canonical() const {
    Inequality c = *this;
    c.constant = 1;
    for (auto& x : c.coeffs) x /= constant;
    return c;
  }

  /// "s > -2", "s + t < 1", "2 - s + u > 0" style.
  std::string to_string(const std::vector<std::string>& names) const {
    std::size_t first = coeffs.size();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) {
        first = i;
        break;
      }
    if (first == coeffs.size()) return constant.get_str() + " > 0";
    const bool flip = coeffs[first] < 0;
    std::string lhs;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) detail::append_term(lhs, flip ? Rational(-coeffs[i]) : coeffs[i], names.at(i));
    return flip ? lhs + " < " + constant.get_str() : lhs + " > " + Rational(-constant).get_str();
  }
};

struct PolytopeDomain {
  std::size_t dim = 0;
  std::vector<Inequality> inequalities;
  std::vector<RationalVector> vertices;
  std::vector<std::pair<Rational, Rational>> bounds;  // per parameter, over the closure
  bool fully_reduced = true;

  bool contains(const RationalVector& x) const {
    for (const auto& q : inequalities)
      if (q(x) <= 0) return false;
    return true;
  }
  bool contains(const std::vector<RealQuadratic>& x) const {
    for (const auto& q : inequalities)
      if (q(x).sign() <= 0) return false;
    return true;
  }
};

namespace detail {

/// Unique solution of A x = b (square), if any.
inline std::optional<RationalVector> solve_square(const std::vector<RationalVector>& a, const RationalVector& b) {
  const std::size_t d = b.size();
  std::vector<RationalVector> aug;
  for (std::size_t r = 0; r < d; ++r) {
    RationalVector row = a[r];
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  const Echelon e = rref(std::move(aug), d + 1);
  if (e.rank() != d || e.pivots.back() != d - 1) return std::nullopt;
  RationalVector x(d);
  for (std::size_t r = 0; r < d; ++r) x[r] = e.rows[r][d];
  return x;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

}  // namespace detail

inline constexpr double kVertexEnumerationLimit = 2e5;

/// Parameter domain {x : a0 + sum x_i W_i > 0} with redundant inequalities removed.
inline PolytopeDomain delta_domain(const CrossSectionSpec& spec) {
  const std::size_t d = spec.dim(), m = spec.m();
  PolytopeDomain dom;
  dom.dim = d;
  // rows with nonzero coefficients, merged when positively proportional (keep tightest)
  std::vector<Inequality> rows;
  for (std::size_t k = 0; k < m; ++k) {
    RationalVector coeffs(d);
    bool nonzero = false;
    for (std::size_t i = 0; i < d; ++i) {
      coeffs[i] = static_cast<long>(spec.W[i][k]);
      nonzero = nonzero || spec.W[i][k] != 0;
    }
    if (!nonzero) continue;
    Inequality q{spec.a0[k], coeffs, {k}};
    Rational scale = 0;
    for (const auto& c : coeffs)
      if (c != 0) {
        scale = abs(c);
        break;
      }
    for (auto& c : q.coeffs) c /= scale;
    q.constant /= scale;
    bool merged = false;
    for (auto& r : rows) {
      if (r.coeffs != q.coeffs) continue;
      if (q.constant < r.constant) r = q;
      else if (q.constant == r.constant) r.sources.push_back(k);
      merged = true;
      break;
    }
    if (!merged) rows.push_back(std::move(q));
  }
  if (d == 0) {
    dom.inequalities = rows;
    return dom;
  }
  if (detail::binomial(rows.size(), d) > kVertexEnumerationLimit) {
    dom.inequalities = rows;
    dom.fully_reduced = false;
    return dom;
  }
  // exhaustive vertex enumeration
  std::vector<std::size_t> comb(d);
  for (std::size_t i = 0; i < d; ++i) comb[i] = i;
  if (rows.size() >= d) {
    do {
      std::vector<RationalVector> a;
      RationalVector b;
      for (auto idx : comb) {
        a.push_back(rows[idx].coeffs);
        b.push_back(-rows[idx].constant);
      }
      auto x = detail::solve_square(a, b);
      if (!x) continue;
      bool feasible = true;
      for (const auto& r : rows)
        if (r(*x) < 0) {
          feasible = false;
          break;
        }
      if (feasible && std::find(dom.vertices.begin(), dom.vertices.end(), *x) == dom.vertices.end())
        dom.vertices.push_back(*x);
    } while (detail::next_combination(comb, rows.size()));
  }
  std::sort(dom.vertices.begin(), dom.vertices.end());
  for (const auto& r : rows) {
    std::vector<RationalVector> on;
    for (const auto& v : dom.vertices)
      if (r(v) == 0) on.push_back(v);
    if (on.empty()) continue;
    std::vector<RationalVector> diffs;
    for (std::size_t i = 1; i < on.size(); ++i) {
      RationalVector df(d);
      for (std::size_t j = 0; j < d; ++j) df[j] = on[i][j] - on[0][j];
      diffs.push_back(std::move(df));
    }
    const std::size_t affine_rank = diffs.empty() ? 0 : rref(diffs, d).rank();
    if (affine_rank + 1 == d) dom.inequalities.push_back(r);
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (dom.vertices.empty()) break;
    Rational lo = dom.vertices[0][i], hi = lo;
    for (const auto& v : dom.vertices) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    dom.bounds.push_back({lo, hi});
  }
  return dom;
}

/// a(x) = a0 + sum x_i W_i, without domain check.
inline RationalVector affine_point(const CrossSectionSpec& spec, const RationalVector& params) {
  if (params.size() != spec.dim())
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(spec.dim()) + " parameters");
  RationalVector a = spec.a0;
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      if (spec.W[i][k] != 0) a[k] += params[i] * static_cast<long>(spec.W[i][k]);
  return a;
}

inline RationalVector point_at(const CrossSectionSpec& spec, const RationalVector& params) {
  RationalVector a = affine_point(spec, params);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] <= 0) throw Error(ErrorCode::OutsideDomain, "entry " + std::to_string(k + 1) + " is " + to_string(a[k]));
  return a;
}

inline bool integer_exponent(const Rational& p) { return p.get_den() == 1 && p > 0; }

/// sign . a(params)^p; requires a positive integer exponent.
inline StructureVector sigma_point(const CrossSectionSpec& spec, const SignVector& sign, const RationalVector& params) {
  if (!integer_exponent(spec.p))
    throw Error(ErrorCode::UnsupportedShape, "exponent " + to_string(spec.p) + " gives irrational entries");
  RationalVector a = point_at(spec, params);
  for (auto& x : a) x = pow(x, spec.p.get_num().get_si());
  return StructureVector(spec.lambda, apply_signs(sign, std::move(a)));
}

/// Entry (-1)^negative * base^exponent.
struct SymbolicEntry {
  bool negative = false;
  Rational base;
  Rational exponent;

  double value() const {
    const double v = std::pow(base.get_d(), exponent.get_d());
    return negative ? -v : v;
  }
  std::string to_string() const {
    std::string s = negative ? "-" : "";
    if (exponent == 1) return s + base.get_str();
    return s + "(" + base.get_str() + ")^(" + exponent.get_str() + ")";
  }
};

inline std::vector<SymbolicEntry> sigma_point_symbolic(const CrossSectionSpec& spec, const SignVector& sign,
                                                       const RationalVector& params) {
  const RationalVector a = point_at(spec, params);
  if (sign.size() != a.size()) throw Error(ErrorCode::DimensionMismatch, "sign mask length differs from |Lambda|");
  std::vector<SymbolicEntry> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(SymbolicEntry{sign.get(k), a[k], spec.p});
  return out;
}

/// c * p * sum_k W_i[k] ln a_k(params).
inline std::vector<double> F_c(const CrossSectionSpec& spec, const Rational& c, const RationalVector& params) {
  const RationalVector a = point_at(spec, params);
  std::vector<double> out;
  const double scale = Rational(c * spec.p).get_d();
  for (const auto& w : spec.W) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (w[k] != 0) s += static_cast<double>(w[k]) * std::log(a[k].get_d());
    out.push_back(scale * s);
  }
  return out;
}

/// Exact dF_i/dx_j = c * p * sum_k W_i[k] W_j[k] / a_k.
inline std::vector<RationalVector> F_jacobian(const CrossSectionSpec& spec, const RationalVector& params,
                                              const Rational& c = 1) {
  const RationalVector a = point_at(spec, params);
  const std::size_t d = spec.dim();
  std::vector<RationalVector> j(d, RationalVector(d, Rational(0)));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t k = 0; k < a.size(); ++k)
        if (spec.W[r][k] != 0 && spec.W[s][k] != 0)
          j[r][s] += Rational(static_cast<long>(spec.W[r][k] * spec.W[s][k])) / a[k];
  for (auto& row : j)
    for (auto& x : row) x *= c * spec.p;
  return j;
}

struct DominanceResult {
  bool dominant = false;
  RationalVector point;
  std::vector<RationalVector> jacobian;
  std::optional<std::size_t> failing_row;
};

/// Strict row diagonal dominance of the Jacobian at params.
inline DominanceResult dominance_certificate(const CrossSectionSpec& spec, const RationalVector& params,
                                             const Rational& c = 1) {
  DominanceResult r{true, params, F_jacobian(spec, params, c), std::nullopt};
  for (std::size_t i = 0; i < r.jacobian.size(); ++i) {
    Rational off = 0;
    for (std::size_t j = 0; j < r.jacobian.size(); ++j)
      if (j != i) off += abs(r.jacobian[i][j]);
    if (abs(r.jacobian[i][i]) <= off) {
      r.dominant = false;
      r.failing_row = i;
      break;
    }
  }
  return r;
}

struct Lemma58Result {
  bool certified = false;
  std::string reason;
  std::vector<Quadruple> quadruples;  // quadruple of each direction
};

/// Quadruple of a w-vector direction (either sign), or throws WNotQuadrupleDerived.
inline Quadruple direction_quadruple(const IndexSet& lambda, const IntVector& w) {
  auto fail = [&] { return Error(ErrorCode::WNotQuadrupleDerived, "direction is not a w-vector"); };
  std::vector<std::size_t> plus, minus;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 1)
      plus.push_back(k);
    else if (w[k] == -1)
      minus.push_back(k);
    else if (w[k] != 0)
      throw fail();
  }
  if (plus.size() != 2 || minus.size() != 2) throw fail();
  const Triple &a = lambda[plus[0]], &b = lambda[plus[1]], &c = lambda[minus[0]], &d = lambda[minus[1]];
  if (!aligned(a, b) || !aligned(c, d)) throw fail();
  const Quadruple q = quadruple_of(a, b);
  if (q != quadruple_of(c, d)) throw fail();
  return q;
}

inline Lemma58Result lemma58_certificate(const CrossSectionSpec& spec) {
  spec.lambda.require_theta("the injectivity certificate");
  Lemma58Result r;
  for (const auto& w : spec.W) r.quadruples.push_back(direction_quadruple(spec.lambda, w));
  if (!null_space_spanning(spec.lambda)) {
    r.reason = "index set is not null space spanning";
    return r;
  }
  if (!spec.spans_kernel) {
    r.reason = "directions are not a basis of Null(Y^T)";
    return r;
  }
  const std::size_t d = spec.dim();
  auto in_support = [&](std::size_t i, std::size_t k) { return spec.W[i][k] != 0; };
  for (std::size_t i = 0; i < d; ++i) {
    bool has_private = false;
    for (std::size_t k = 0; k < spec.m(); ++k) {
      if (!in_support(i, k)) continue;
      std::size_t others = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i && in_support(j, k)) ++others;
      if (others == 0) has_private = true;
      if (others > 1) {
        r.reason = "hypothesis (2) fails: position " + std::to_string(k + 1) + " of direction " +
                   std::to_string(i + 1) + " occurs in " + std::to_string(others) + " other directions";
        return r;
      }
    }
    if (!has_private) {
      r.reason = "hypothesis (1) fails: direction " + std::to_string(i + 1) + " has no position of its own";
      return r;
    }
  }
  r.certified = true;
  return r;
}

enum class InjectivityVerdict { CertifiedInjective, NotCertified };

inline const char* to_string(InjectivityVerdict v) {
  return v == InjectivityVerdict::CertifiedInjective ? "CertifiedInjective" : "NotCertified";
}

/// Directions that are not w-vectors give NotCertified.
inline std::pair<InjectivityVerdict, std::string> injectivity_certificate(const CrossSectionSpec& spec) {
  try {
    const Lemma58Result r = lemma58_certificate(spec);
    if (r.certified) return {InjectivityVerdict::CertifiedInjective, "combinatorial hypotheses hold"};
    return {InjectivityVerdict::NotCertified, r.reason};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::WNotQuadrupleDerived) throw;
    return {InjectivityVerdict::NotCertified, e.what()};
  }
}

// ---------------------------------------------------------------------------
// Branch solving at fixture scale

struct SubstitutedEquation {
  Quadruple quad;
  Poly poly;
  std::vector<int> term_signs;  // sign of each product term on the domain
};

/// Linear forms a_k(x) = a0_k + sum x_i W_i[k].
inline std::vector<Poly> coordinate_forms(const CrossSectionSpec& spec) {
  std::vector<Poly> out;
  for (std::size_t k = 0; k < spec.m(); ++k) {
    RationalVector coeffs(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) coeffs[i] = static_cast<long>(spec.W[i][k]);
    out.push_back(Poly::linear(spec.a0[k], coeffs));
  }
  return out;
}

/// Jacobi equations at alpha_t = (-1)^{sign_t} a_t(x)^p.
inline std::vector<SubstitutedEquation> substitute(const CrossSectionSpec& spec, const JacobiSystem& sys,
                                                   const SignVector& sign) {
  if (!(sys.lambda() == spec.lambda)) throw Error(ErrorCode::DimensionMismatch, "system for a different index set");
  if (sign.size() != spec.m()) throw Error(ErrorCode::DimensionMismatch, "sign vector length differs from |Lambda|");
  if (spec.p < 0) throw Error(ErrorCode::UnsupportedShape, "negative exponents give rational functions");
  const auto forms = coordinate_forms(spec);
  const bool integral = integer_exponent(spec.p);
  const Rational twice = 2 * spec.p;
  if (!integral && twice.get_den() != 1)
    throw Error(ErrorCode::UnsupportedShape, "exponent " + to_string(spec.p) + " is not a multiple of 1/2");
  std::vector<SubstitutedEquation> out;
  for (const auto& eq : sys.equations()) {
    SubstitutedEquation se{eq.quad, Poly(spec.dim()), {}};
    for (const auto& t : eq.terms) {
      int s = t.sign * (sign.get(t.p) ? -1 : 1) * (sign.get(t.r) ? -1 : 1);
      Poly prod;
      if (integral) {
        const auto e = static_cast<unsigned>(spec.p.get_num().get_ui());
        prod = forms[t.p].pow(e) * forms[t.r].pow(e);
      } else {
        if (!(forms[t.p] == forms[t.r]))
          throw Error(ErrorCode::UnsupportedShape, "product " + spec.lambda[t.p].to_string() + spec.lambda[t.r].to_string() +
                                                       " is not a polynomial at exponent " + to_string(spec.p));
        prod = forms[t.p].pow(static_cast<unsigned>(twice.get_num().get_ui()));
      }
      se.poly += Poly::constant(spec.dim(), s) * prod;
      se.term_signs.push_back(s);
    }
    out.push_back(std::move(se));
  }
  return out;
}

enum class BranchKind { Inconsistent, WholeDomain, FinitePoints, Curves, Unsupported };

inline const char* to_string(BranchKind k) {
  switch (k) {
    case BranchKind::Inconsistent: return "inconsistent";
    case BranchKind::WholeDomain: return "whole-domain";
    case BranchKind::FinitePoints: return "finite";
    case BranchKind::Curves: return "curves";
    case BranchKind::Unsupported: return "unsupported";
  }
  return "?";
}

struct Interval {
  RealQuadratic lo, hi;
  std::string to_string() const { return "(" + lo.to_string() + ", " + hi.to_string() + ")"; }
};

/// x_solved = numerator(x_free) / denominator(x_free), denominator monic, x_free in the intervals.
struct CurveComponent {
  std::size_t solved = 0, free = 1;
  UPoly numerator, denominator;
  std::vector<Interval> intervals;

  Rational solved_value(const Rational& y) const { return numerator(y) / denominator(y); }
  RationalVector point(const Rational& y) const {
    RationalVector x(2);
    x[free] = y;
    x[solved] = solved_value(y);
    return x;
  }
  std::string to_string(const std::vector<std::string>& names) const {
    const std::string& v = names.at(free);
    std::string rhs = denominator.degree() == 0 ? numerator.to_string(v)
                                                : "(" + numerator.to_string(v) + ")/(" + denominator.to_string(v) + ")";
    return names.at(solved) + " = " + rhs;
  }
};

/// x_fixed = value with x_free ranging over an interval.
struct LineComponent {
  std::size_t fixed = 0, free = 1;
  Rational value;
  Interval interval;

  std::string to_string(const std::vector<std::string>& names) const {
    return names.at(fixed) + " = " + value.get_str();
  }
};

struct BranchSolution {
  SignVector sign;
  BranchKind kind = BranchKind::Unsupported;
  std::vector<SubstitutedEquation> equations;
  std::vector<std::vector<RealQuadratic>> points;
  std::vector<CurveComponent> curves;
  std::vector<LineComponent> lines;
  std::string note;
};

namespace detail {

inline std::optional<Interval> line_interval(const PolytopeDomain& dom, std::size_t fixed, const Rational& value,
                                             std::size_t free) {
  std::optional<Rational> lo, hi;
  for (const auto& q : dom.inequalities) {
    const Rational c = q.constant + q.coeffs[fixed] * value;
    const Rational& a = q.coeffs[free];
    if (a == 0) {
      if (c <= 0) return std::nullopt;
      continue;
    }
    const Rational bound = -c / a;
    if (a > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else if (!hi || bound < *hi) {
      hi = bound;
    }
  }
  if (!lo || !hi || !(*lo < *hi)) return std::nullopt;
  return Interval{*lo, *hi};
}

inline bool all_same_sign(const std::vector<int>& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [&](int x) { return x == s.front(); });
}

inline void add_sorted_unique(std::vector<RealQuadratic>& v, const RealQuadratic& x) {
  for (const auto& y : v)
    if (y == x) return;
  v.push_back(x);
}

}  // namespace detail

inline void solve_one_dimensional(const PolytopeDomain& dom, const std::vector<Poly>& polys, BranchSolution& out) {
  UPoly g;
  for (const auto& p : polys) g = gcd(g, p.univariate(0));
  const auto [lo, hi] = dom.bounds.at(0);
  for (const auto& r : quadratic_real_roots(g, lo, hi)) {
    std::vector<RealQuadratic> x{r};
    if (dom.contains(x)) out.points.push_back(x);
  }
  out.kind = out.points.empty() ? BranchKind::Inconsistent : BranchKind::FinitePoints;
  if (out.points.empty()) out.note = "no root in the domain";
}

inline void add_line_if_nonempty(const PolytopeDomain& dom, std::size_t fixed, const RealQuadratic& v,
                                 std::size_t free, BranchSolution& out) {
  if (!v.is_rational()) throw Error(ErrorCode::UnsupportedShape, "line at irrational parameter value");
  if (auto iv = detail::line_interval(dom, fixed, v.a(), free)) out.lines.push_back({fixed, free, v.a(), *iv});
}

/// Single equation f(x0, x1) = 0 in a 2-dimensional domain.
inline void solve_planar_curve(const PolytopeDomain& dom, const Poly& f, BranchSolution& out) {
  std::optional<std::size_t> solved;
  for (std::size_t v : {std::size_t{1}, std::size_t{0}})
    if (f.degree_in(v) == 1) {
      solved = v;
      break;
    }
  if (!solved) {
    for (std::size_t y : {std::size_t{0}, std::size_t{1}}) {
      const std::size_t x = 1 - y;
      if (f.degree_in(x) > 0) continue;
      const auto [lo, hi] = dom.bounds.at(y);
      for (const auto& r : quadratic_real_roots(f.univariate(y), lo, hi)) add_line_if_nonempty(dom, y, r, x, out);
      out.kind = out.lines.empty() ? BranchKind::Inconsistent : BranchKind::Curves;
      return;
    }
    throw Error(ErrorCode::UnsupportedShape, "equation is not linear in any parameter");
  }
  const std::size_t x = *solved, y = 1 - x;
  const auto coeffs = as_poly_over(f, x, y);
  const UPoly& B = coeffs[0];
  const UPoly& A = coeffs[1];
  const UPoly G = gcd(A, B);
  const auto [ylo, yhi] = dom.bounds.at(y);
  if (G.degree() >= 1)
    for (const auto& r : quadratic_real_roots(G, ylo, yhi)) add_line_if_nonempty(dom, y, r, x, out);
  UPoly N = -exact_div(B, G), D = exact_div(A, G);
  const Rational l = D.lead();
  N = (1 / l) * N;
  D = (1 / l) * D;

  std::vector<RealQuadratic> cuts{RealQuadratic(ylo), RealQuadratic(yhi)};
  auto add_roots = [&](const UPoly& p) {
    if (p.degree() < 1) return;
    for (const auto& r : quadratic_real_roots(p, ylo, yhi))
      if (RealQuadratic(ylo) < r && r < RealQuadratic(yhi)) detail::add_sorted_unique(cuts, r);
  };
  add_roots(D);
  for (const auto& q : dom.inequalities) {
    // (c + beta y) D + alpha N
    const UPoly lin = UPoly(std::vector<Rational>{q.constant, q.coeffs[y]});
    add_roots(lin * D + q.coeffs[x] * N);
  }
  std::sort(cuts.begin(), cuts.end());
  CurveComponent curve{x, y, N, D, {}};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational m = rational_between(cuts[i], cuts[i + 1]);
    if (D(m) == 0) continue;
    if (dom.contains(curve.point(m))) curve.intervals.push_back({cuts[i], cuts[i + 1]});
  }
  if (!curve.intervals.empty()) out.curves.push_back(std::move(curve));
  out.kind = (out.curves.empty() && out.lines.empty()) ? BranchKind::Inconsistent : BranchKind::Curves;
  if (out.kind == BranchKind::Inconsistent) out.note = "solution set misses the domain";
}

/// Two or more independent equations in a 2-dimensional domain: eliminate x1 by a resultant.
inline void solve_planar_system(const PolytopeDomain& dom, const std::vector<Poly>& polys, BranchSolution& out) {
  const Poly& e1 = polys[0];
  const Poly* e2 = nullptr;
  for (std::size_t i = 1; i < polys.size(); ++i)
    if (!Poly::proportion(e1, polys[i])) {
      e2 = &polys[i];
      break;
    }
  const UPoly R = resultant(as_poly_over(e1, 1, 0), as_poly_over(*e2, 1, 0));
  if (R.is_zero()) throw Error(ErrorCode::UnsupportedShape, "equations share a common factor");
  const auto [slo, shi] = dom.bounds.at(0);
  const auto [tlo, thi] = dom.bounds.at(1);
  const auto rat = rational_roots(R);
  const UPoly rest = deflate(squarefree_part(R), rat);
  if (rest.degree() >= 1 && sturm_count(rest, slo, shi) > 0)
    throw Error(ErrorCode::UnsupportedShape, "eliminant has irrational roots in range");
  for (const auto& s0 : rat) {
    if (!(slo < s0 && s0 < shi)) continue;
    UPoly g;
    for (const auto& p : polys) g = gcd(g, p.substitute(0, s0).univariate(1));
    if (g.is_zero()) {
      add_line_if_nonempty(dom, 0, RealQuadratic(s0), 1, out);
      continue;
    }
    for (const auto& t0 : quadratic_real_roots(g, tlo, thi)) {
      std::vector<RealQuadratic> pt{RealQuadratic(s0), t0};
      if (dom.contains(pt)) out.points.push_back(pt);
    }
  }
  if (!out.lines.empty())
    out.kind = BranchKind::Curves;
  else
    out.kind = out.points.empty() ? BranchKind::Inconsistent : BranchKind::FinitePoints;
  if (out.kind == BranchKind::Inconsistent) out.note = "no common solution in the domain";
}

inline BranchSolution solve_branch(const CrossSectionSpec& spec, const PolytopeDomain& dom, const JacobiSystem& sys,
                                   const SignVector& sign) {
  BranchSolution out;
  out.sign = sign;
  try {
    out.equations = substitute(spec, sys, sign);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedShape) throw;
    out.kind = BranchKind::Unsupported;
    out.note = e.what();
    return out;
  }
  for (const auto& e : out.equations)
    if (detail::all_same_sign(e.term_signs)) {
      out.kind = BranchKind::Inconsistent;
      out.note = "all terms of " + e.quad.to_string() + " have the same sign";
      return out;
    }
  std::vector<Poly> polys;
  for (const auto& e : out.equations)
    if (!e.poly.is_zero()) polys.push_back(e.poly);
  const std::size_t d = spec.dim();
  for (const auto& p : polys)
    if (p.is_constant()) {
      out.kind = BranchKind::Inconsistent;
      out.note = "equation reduces to a nonzero constant";
      return out;
    }
  if (polys.empty()) {
    out.kind = d == 0 ? BranchKind::FinitePoints : BranchKind::WholeDomain;
    if (d == 0) out.points.push_back({});
    return out;
  }
  try {
    if (d == 1) {
      solve_one_dimensional(dom, polys, out);
    } else if (d == 2) {
      bool single = true;
      for (std::size_t i = 1; i < polys.size(); ++i) single = single && Poly::proportion(polys[0], polys[i]).has_value();
      if (single)
        solve_planar_curve(dom, polys[0], out);
      else
        solve_planar_system(dom, polys, out);
    } else {
      throw Error(ErrorCode::UnsupportedShape, std::to_string(d) + " parameters exceed fixture scale");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedShape) throw;
    out.kind = BranchKind::Unsupported;
    out.points.clear();
    out.curves.clear();
    out.lines.clear();
    out.note = e.what();
  }
  return out;
}

/// One solution description per element of the sign transversal.
inline std::vector<BranchSolution> solve_branch_fixtures(const CrossSectionSpec& spec, const JacobiSystem& sys) {
  spec.lambda.require_theta("branch solving");
  const PolytopeDomain dom = delta_domain(spec);
  std::vector<BranchSolution> out;
  for (const auto& s : spec.T) out.push_back(solve_branch(spec, dom, sys, s));
  return out;
}

/// Lie points sign . a(x)^p at rational finite solutions, for integer p.
inline std::vector<StructureVector> lie_points(const CrossSectionSpec& spec, const std::vector<BranchSolution>& sols) {
  std::vector<StructureVector> out;
  if (!integer_exponent(spec.p)) return out;
  for (const auto& b : sols) {
    if (b.kind != BranchKind::FinitePoints) continue;
    for (const auto& pt : b.points) {
      RationalVector x;
      bool rational = true;
      for (const auto& c : pt) {
        rational = rational && c.is_rational();
        x.push_back(c.a());
      }
      if (rational) out.push_back(sigma_point(spec, b.sign, x));
    }
  }
  return out;
}

}  // namespace liestrata
