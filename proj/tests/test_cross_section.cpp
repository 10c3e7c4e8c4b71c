#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "liestrata/liestrata.hpp"
#include "oracles.hpp"

using namespace liestrata;

namespace {

const std::vector<IntVector> kQm2W{{1, -1, 0, 0, -1, 1}};

CrossSectionSpec qm2_spec() { return make_cross_section(fixtures::qm2(), fixtures::ones(6), kQm2W); }
CrossSectionSpec qm3_spec() {
  return make_cross_section(fixtures::qm3(), fixtures::qm3_center(), fixtures::qm3_directions());
}
CrossSectionSpec example1_spec() {
  return make_cross_section(fixtures::example1(), fixtures::example1_center(), fixtures::example1_directions());
}

std::set<std::string> domain_strings(const CrossSectionSpec& spec) {
  std::set<std::string> out;
  for (const auto& q : delta_domain(spec).inequalities) out.insert(q.to_string(parameter_names(spec.dim())));
  return out;
}

// Random spec with a nontrivial kernel, positive random center, default directions.
std::optional<CrossSectionSpec> random_spec(oracle::Gen& g, std::size_t max_dim) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const auto l = g.index_set(4, 8, 12);
    const std::size_t k = oracle::kernel_dim(l);
    if (k == 0 || k > max_dim) continue;
    RationalVector a0;
    for (std::size_t t = 0; t < l.size(); ++t) a0.push_back(g.positive_rational(4));
    return make_cross_section(l, a0);
  }
  return std::nullopt;
}

// 20 rationals strictly inside (lo, hi), increasing.
std::vector<Rational> samples(const Interval& iv, int count = 20) {
  std::vector<RealQuadratic> cuts;
  const RealQuadratic width = iv.hi - iv.lo;
  for (int i = 0; i <= count; ++i) {
    Rational f(i, count);
    f.canonicalize();
    cuts.push_back(iv.lo + width * RealQuadratic(f));
  }
  std::vector<Rational> out;
  for (int i = 0; i < count; ++i) out.push_back(rational_between(cuts[static_cast<std::size_t>(i)], cuts[static_cast<std::size_t>(i) + 1]));
  return out;
}

bool equations_vanish(const BranchSolution& b, const RationalVector& x) {
  return std::all_of(b.equations.begin(), b.equations.end(), [&](const SubstitutedEquation& e) { return e.poly(x) == 0; });
}

// Checks every curve and line of every branch at sample points, on and off the solution set.
void check_branches(const CrossSectionSpec& spec, std::size_t expected_curves) {
  const auto sys = jacobi_system(spec.lambda);
  const auto dom = delta_domain(spec);
  std::size_t curves = 0;
  for (const auto& b : solve_branch_fixtures(spec, sys)) {
    for (const auto& c : b.curves) {
      ++curves;
      for (const auto& iv : c.intervals)
        for (const auto& y : samples(iv)) {
          const auto x = c.point(y);
          ASSERT_TRUE(dom.contains(x)) << c.to_string(parameter_names(2)) << " at " << to_string(y);
          EXPECT_TRUE(equations_vanish(b, x));
          const auto a = sigma_point(spec, b.sign, x);
          EXPECT_TRUE(is_lie(sys, a));
          EXPECT_TRUE(brute_force_jacobiator(a));
          auto off = x;
          off[c.solved] += Rational(1, 1000);
          if (dom.contains(off)) EXPECT_FALSE(equations_vanish(b, off));
        }
    }
    for (const auto& ln : b.lines)
      for (const auto& y : samples(ln.interval)) {
        RationalVector x(2);
        x[ln.fixed] = ln.value;
        x[ln.free] = y;
        EXPECT_TRUE(equations_vanish(b, x));
        EXPECT_TRUE(is_lie(sys, sigma_point(spec, b.sign, x)));
      }
  }
  EXPECT_EQ(curves, expected_curves);
}

}  // namespace

TEST(DeltaDomain, DisplayedFixtures) {
  EXPECT_EQ(domain_strings(qm2_spec()), (std::set<std::string>{"s > -1", "s < 1"}));
  EXPECT_EQ(domain_strings(qm3_spec()), (std::set<std::string>{"s > -2", "t > -1", "s + t < 1"}));
  const auto d1 = domain_strings(example1_spec());
  EXPECT_EQ(d1, (std::set<std::string>{"t + u < 1", "s < 1", "t > -1", "s > -1", "u > -1"}));
  EXPECT_TRUE(delta_domain(example1_spec()).fully_reduced);
}

TEST(DeltaDomain, InequalitiesAreExact) {
  const auto dom = delta_domain(qm3_spec());
  for (const auto& q : dom.inequalities) {
    EXPECT_GT(q(RationalVector{0, 0}), 0);
    for (const auto& c : q.coeffs) EXPECT_TRUE(c == 0 || c == 1 || c == -1);
  }
  EXPECT_EQ(dom.vertices.size(), 3u);
}

TEST(PointAt, Examples) {
  const auto s2 = qm2_spec();
  const Rational s(1, 3);
  EXPECT_EQ(point_at(s2, {s}), (RationalVector{1 + s, 1 - s, 1, 1, 1 - s, 1 + s}));
  EXPECT_EQ(point_at(s2, {0}), fixtures::ones(6));
  BitVector e6(6);
  e6.set(5, true);
  EXPECT_EQ(sigma_point(s2, e6, {s}).values(), (RationalVector{1 + s, 1 - s, 1, 1, 1 - s, -(1 + s)}));
  EXPECT_THROW(point_at(s2, {1}), Error);
  try {
    point_at(s2, {Rational(-3, 2)});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsideDomain);
  }

  const auto s3 = qm3_spec();
  const Rational u(1, 5), t(-1, 7);
  EXPECT_EQ(point_at(s3, {u, t}), (RationalVector{1 + t, 2 + u, 1, 1 - u - t, 1 - u - t, 2 + u, 1 + t}));
  EXPECT_EQ(point_at(s3, {0, 0}), fixtures::qm3_center());
}

TEST(MakeCrossSection, Validation) {
  const auto l = fixtures::qm3();
  EXPECT_THROW(make_cross_section(l, RationalVector{1, 2, 1, 0, 1, 2, 1}), Error);
  try {
    make_cross_section(l, RationalVector{1, 2, 1, -1, 1, 2, 1});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveCenter);
  }
  EXPECT_THROW(make_cross_section(l, std::nullopt, std::vector<IntVector>{{1, 0, 0, 0, 0, 0, 0}}), Error);
  EXPECT_THROW(make_cross_section(l, std::nullopt, std::vector<IntVector>{{0, 1, 0, -1, -1, 1, 0}, {0, -1, 0, 1, 1, -1, 0}}), Error);
  const auto spec = make_cross_section(l);
  EXPECT_EQ(spec.dim(), 2u);
  EXPECT_TRUE(spec.spans_kernel);
  EXPECT_TRUE(same_span(spec.W, fixtures::qm3_directions(), 7));
  EXPECT_EQ(spec.T.size(), 4u);
  EXPECT_FALSE(*qm3_spec().center_is_lie);
  EXPECT_TRUE(*qm2_spec().center_is_lie);
}

TEST(FMap, Examples) {
  const auto s2 = qm2_spec();
  for (const Rational s : {Rational(0), Rational(1, 2), Rational(-2, 3)}) {
    const double sd = s.get_d();
    EXPECT_NEAR(F_c(s2, 1, {s})[0], 2 * std::log((1 + sd) / (1 - sd)), 1e-12);
  }
  EXPECT_EQ(F_jacobian(s2, {0}), (std::vector<RationalVector>{{4}}));
  const auto f3 = F_c(qm3_spec(), 1, {0, 0});
  EXPECT_NEAR(f3[0], 2 * std::log(2.0), 1e-12);
  EXPECT_NEAR(f3[1], 0, 1e-12);
  EXPECT_NEAR(F_c(qm3_spec(), Rational(1, 2), {0, 0})[0], std::log(2.0), 1e-12);
}

TEST(FMap, ExampleOneJacobianAtCenter) {
  const auto j = F_jacobian(example1_spec(), {0, 0, 0});
  EXPECT_EQ(j, (std::vector<RationalVector>{{3, 0, Rational(-1, 2)}, {0, 4, 2}, {Rational(-1, 2), 2, Rational(7, 2)}}));
  const auto fd = oracle::fd_jacobian(example1_spec(), 1, {0, 0, 0}, 1e-5);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_NEAR(fd[r][c], j[r][c].get_d(), 1e-6 * std::max(1.0, std::fabs(j[r][c].get_d())));
}

TEST(FMap, JacobianMatchesFiniteDifferences) {
  oracle::Gen g(71);
  int checked = 0;
  for (int rep = 0; rep < 300; ++rep) {
    const auto spec = random_spec(g, 3);
    if (!spec) continue;
    const auto dom = delta_domain(*spec);
    RationalVector x(spec->dim());
    for (auto& v : x) v = Rational(g.uniform(-4, 4), 10);
    if (!dom.contains(x)) continue;
    const Rational c = g.positive_rational(3);
    const auto j = F_jacobian(*spec, x, c);
    const auto fd = oracle::fd_jacobian(*spec, c, x, 1e-5);
    for (std::size_t r = 0; r < spec->dim(); ++r)
      for (std::size_t s = 0; s < spec->dim(); ++s) {
        const double e = j[r][s].get_d();
        EXPECT_NEAR(fd[r][s], e, 1e-6 * std::max(1.0, std::fabs(e)));
        EXPECT_EQ(j[r][s], j[s][r]);
      }
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Certificates, Fixtures) {
  const auto e1 = lemma58_certificate(example1_spec());
  EXPECT_TRUE(e1.certified) << e1.reason;
  EXPECT_TRUE(dominance_certificate(example1_spec(), {0, 0, 0}).dominant);
  const auto q2 = lemma58_certificate(qm2_spec());
  EXPECT_TRUE(q2.certified);
  EXPECT_TRUE(dominance_certificate(qm2_spec(), {Rational(9, 10)}).dominant);
  EXPECT_EQ(injectivity_certificate(qm3_spec()).first, InjectivityVerdict::CertifiedInjective);

  const auto bad = make_cross_section(fixtures::qm3(), fixtures::qm3_center(),
                                      std::vector<IntVector>{{1, 1, 0, -2, -2, 1, 1}, {1, 0, 0, -1, -1, 0, 1}});
  EXPECT_THROW(lemma58_certificate(bad), Error);
  EXPECT_EQ(injectivity_certificate(bad).first, InjectivityVerdict::NotCertified);
  // the completing kernel vector of a non-spanning set is not a w-vector
  const auto ns = make_cross_section(fixtures::non_spanning());
  EXPECT_THROW(lemma58_certificate(ns), Error);
  EXPECT_EQ(injectivity_certificate(ns).first, InjectivityVerdict::NotCertified);
  const auto ns1 = make_cross_section(fixtures::non_spanning(), std::nullopt,
                                      std::vector<IntVector>{{0, 0, -1, 0, 1, 0, 1, -1, 0}});
  const auto r = lemma58_certificate(ns1);
  EXPECT_FALSE(r.certified);
  EXPECT_EQ(r.reason, "index set is not null space spanning");
}

TEST(Certificates, DominanceOnDomainVertices) {
  // strict dominance holds well inside the example-1 domain
  const auto spec = example1_spec();
  oracle::Gen g(72);
  const auto dom = delta_domain(spec);
  for (int rep = 0; rep < 200; ++rep) {
    RationalVector x(3);
    for (auto& v : x) v = Rational(g.uniform(-9, 9), 10);
    if (!dom.contains(x)) continue;
    EXPECT_TRUE(dominance_certificate(spec, x).dominant);
  }
}

TEST(Certificates, HypothesisTwoFailureFoundBySearch) {
  // oracle: hypothesis (2) fails iff some position lies in three or more direction supports
  auto crowded = [](const CrossSectionSpec& s) {
    for (std::size_t k = 0; k < s.m(); ++k) {
      std::size_t in = 0;
      for (const auto& w : s.W) in += w[k] != 0;
      if (in >= 3) return true;
    }
    return false;
  };
  auto private_positions = [](const CrossSectionSpec& s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      bool own = false;
      for (std::size_t k = 0; k < s.m(); ++k) {
        if (s.W[i][k] == 0) continue;
        std::size_t in = 0;
        for (const auto& w : s.W) in += w[k] != 0;
        own = own || in == 1;
      }
      if (!own) return false;
    }
    return true;
  };
  oracle::Gen g(73);
  int failures = 0, certified = 0;
  for (int rep = 0; rep < 4000 && failures < 5; ++rep) {
    const auto l = g.index_set(6, 8, 14);
    if (!null_space_spanning(l) || kernel_dim(l) < 2) continue;
    const auto spec = make_cross_section(l);
    const auto r = lemma58_certificate(spec);
    const bool expect = !crowded(spec) && private_positions(spec);
    EXPECT_EQ(r.certified, expect) << l.to_string() << " " << r.reason;
    if (crowded(spec)) {
      ++failures;
      EXPECT_NE(r.reason.find("hypothesis (2)"), std::string::npos) << r.reason;
    }
    certified += r.certified;
  }
  EXPECT_GE(failures, 1);
  EXPECT_GE(certified, 1);
}

TEST(BranchSolving, Qm2GivesAllOnes) {
  const auto spec = qm2_spec();
  const auto sols = solve_branch_fixtures(spec, jacobi_system(spec.lambda));
  ASSERT_EQ(sols.size(), 2u);
  EXPECT_EQ(sols[0].kind, BranchKind::FinitePoints);
  ASSERT_EQ(sols[0].points.size(), 1u);
  EXPECT_EQ(sols[0].points[0], (std::vector<RealQuadratic>{RealQuadratic(0)}));
  EXPECT_EQ(sols[1].kind, BranchKind::Inconsistent);
  const auto pts = lie_points(spec, sols);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], StructureVector::ones(spec.lambda));
}

TEST(BranchSolving, Qm3Curve) {
  const auto spec = qm3_spec();
  const auto sols = solve_branch_fixtures(spec, jacobi_system(spec.lambda));
  ASSERT_EQ(sols.size(), 4u);
  ASSERT_EQ(sols[0].kind, BranchKind::Curves);
  ASSERT_EQ(sols[0].curves.size(), 1u);
  const auto& c = sols[0].curves[0];
  // s(t) = (1 - t^2)/(t - 3) on -1 < t < 1
  EXPECT_EQ(c.solved, 0u);
  for (const Rational t : {Rational(-1, 2), Rational(0), Rational(3, 4)})
    EXPECT_EQ(c.solved_value(t), (1 - t * t) / (t - 3));
  ASSERT_EQ(c.intervals.size(), 1u);
  EXPECT_EQ(c.intervals[0].lo, RealQuadratic(-1));
  EXPECT_EQ(c.intervals[0].hi, RealQuadratic(1));
  check_branches(spec, 3);
}

TEST(BranchSolving, SharedQuadruplesUniquePoint) {
  const auto spec = make_cross_section(fixtures::qm2b());
  const auto sols = solve_branch_fixtures(spec, jacobi_system(spec.lambda));
  EXPECT_EQ(sols[0].kind, BranchKind::FinitePoints);
  ASSERT_EQ(sols[0].points.size(), 1u);
  EXPECT_EQ(sols[0].points[0], (std::vector<RealQuadratic>{RealQuadratic(0), RealQuadratic(0)}));
  for (const auto& p : lie_points(spec, sols)) EXPECT_TRUE(brute_force_jacobiator(p));
}

TEST(BranchSolving, ExampleOneBranches) {
  const auto spec = example1_spec();
  const auto sols = solve_branch_fixtures(spec, jacobi_system(spec.lambda));
  // |T| = 2^(9 - 6) by the enumerated GF(2) column span
  EXPECT_EQ(oracle::gf2_column_span(spec.lambda).size(), 64u);
  ASSERT_EQ(sols.size(), 8u);
  // sign 0: proportional to 6s - u + su and -2t^2 - 2ut - s + 5u - su
  const Poly s = Poly::var(3, 0), t = Poly::var(3, 1), u = Poly::var(3, 2);
  ASSERT_EQ(sols[0].equations.size(), 2u);
  EXPECT_TRUE(Poly::proportion(sols[0].equations[0].poly, Rational(6) * s - u + s * u));
  EXPECT_TRUE(Poly::proportion(sols[0].equations[1].poly,
                               Rational(-2) * t * t - Rational(2) * u * t - s + Rational(5) * u - s * u));
  int inconsistent = 0;
  for (const auto& b : sols) {
    if (b.kind == BranchKind::Inconsistent) ++inconsistent;
    else EXPECT_EQ(b.kind, BranchKind::Unsupported);
  }
  EXPECT_EQ(inconsistent, 5);
}

TEST(BranchSolving, RandomSpecsSatisfyJacobi) {
  oracle::Gen g(74);
  int solved = 0;
  for (int rep = 0; rep < 300 && solved < 40; ++rep) {
    const auto spec = random_spec(g, 2);
    if (!spec || jacobi_system(spec->lambda).size() == 0) continue;
    std::vector<BranchSolution> sols;
    try {
      sols = solve_branch_fixtures(*spec, jacobi_system(spec->lambda));
    } catch (const Error&) {
      continue;
    }
    const auto dom = delta_domain(*spec);
    for (const auto& b : sols) {
      for (const auto& c : b.curves)
        for (const auto& iv : c.intervals)
          for (const auto& y : samples(iv, 5)) {
            const auto x = c.point(y);
            EXPECT_TRUE(dom.contains(x));
            EXPECT_TRUE(is_lie(jacobi_system(spec->lambda), sigma_point(*spec, b.sign, x)));
          }
    }
    for (const auto& p : lie_points(*spec, sols)) EXPECT_TRUE(brute_force_jacobiator(p));
    ++solved;
  }
  EXPECT_GT(solved, 10);
}

TEST(CrossSectionProperties, DomainsAreBounded) {
  oracle::Gen g(75);
  for (int rep = 0; rep < 200; ++rep) {
    const auto l = g.index_set(4, 8, 14);
    for (const auto& w : left_null_basis(root_matrix(l))) EXPECT_EQ(std::accumulate(w.begin(), w.end(), 0LL), 0);
    if (oracle::kernel_dim(l) == 0 || oracle::kernel_dim(l) > 3) continue;
    const auto dom = delta_domain(make_cross_section(l));
    EXPECT_GE(dom.vertices.size(), make_cross_section(l).dim() + 1);
    for (const auto& [lo, hi] : dom.bounds) EXPECT_LT(lo, hi);
  }
}

TEST(CrossSectionProperties, DomainMatchesPositivityOnGrid) {
  oracle::Gen g(76);
  for (int rep = 0; rep < 60; ++rep) {
    const auto spec = random_spec(g, 3);
    if (!spec) continue;
    const auto dom = delta_domain(*spec);
    const std::size_t d = spec->dim();
    std::vector<int> idx(d, -6);
    while (true) {
      RationalVector x(d);
      for (std::size_t i = 0; i < d; ++i) x[i] = Rational(idx[i], 2);
      const auto a = affine_point(*spec, x);
      const bool positive = std::all_of(a.begin(), a.end(), [](const Rational& v) { return v > 0; });
      EXPECT_EQ(dom.contains(x), positive);
      std::size_t i = 0;
      while (i < d && ++idx[i] > 6) idx[i++] = -6;
      if (i == d) break;
    }
  }
}

TEST(CrossSectionProperties, MagnitudeTestInvariantUnderSquaring) {
  oracle::Gen g(77);
  int equivalent = 0;
  for (int rep = 0; rep < 300; ++rep) {
    const auto l = g.index_set(4, 8, 12);
    if (oracle::kernel_dim(l) == 0) continue;
    const auto a = g.structure(l, 9);
    const auto b = rep % 2 ? g.structure(l, 9) : apply_diagonal(g.diagonal(l.n(), 5), a);
    auto square = [&](const StructureVector& v) {
      RationalVector out;
      for (const auto& x : v.values()) out.push_back(x * x);
      return StructureVector(l, out);
    };
    const bool plain = magnitude_orbit_equivalent(a, b);
    EXPECT_EQ(plain, magnitude_orbit_equivalent(square(a), square(b)));
    equivalent += plain;
  }
  EXPECT_GT(equivalent, 20);
}
