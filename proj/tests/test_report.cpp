#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "liestrata/report.hpp"
#include "liestrata/sweep.hpp"
#include "liestrata/text_format.hpp"
#include "oracles.hpp"

using namespace liestrata;

TEST(AnalysisReport, Qm2) {
  const auto r = analysis_report(fixtures::qm2());
  EXPECT_EQ(r["schema_version"], 1);
  EXPECT_EQ(r["command"], "analyze");
  EXPECT_EQ(r["kernel_basis"].size(), 1u);
  std::vector<IntVector> k{r["kernel_basis"][0].get<IntVector>()};
  EXPECT_TRUE(same_span(k, {{1, -1, 0, 0, -1, 1}}, 6));
  EXPECT_EQ(r["transversal_size"], 2);
  EXPECT_EQ(r["gf2_rank"], 5);
  ASSERT_EQ(r["quadruples"].size(), 1u);
  EXPECT_EQ(r["quadruples"][0]["quadruple"], Json::array({1, 2, 3, 7}));
  EXPECT_EQ(r["quadruples"][0]["multiplicity"], 2);
  EXPECT_EQ(r["obstruction"], "Nontrivial");
  EXPECT_EQ(r["classification"], "Finite-1q2");
  EXPECT_EQ(r["jacobi_system"][0], "(1,2,3,7): -a[1,2,4]*a[3,4,7] + a[1,3,5]*a[2,5,7] = 0");
  EXPECT_FALSE(r.contains("cross_section"));
}

TEST(AnalysisReport, OtherFixtures) {
  const auto l4 = analysis_report(fixtures::l4());
  EXPECT_EQ(l4["obstruction"], "Automatic");
  EXPECT_EQ(l4["classification"], "Unobstructed");
  EXPECT_EQ(l4["root_matrix"], Json::parse("[[1,1,-1,0],[1,0,1,-1]]"));
  const auto ns = analysis_report(fixtures::non_spanning());
  EXPECT_EQ(ns["null_space_spanning"], false);
  EXPECT_EQ(ns["classification"], "Unclassified");
  const auto u = analysis_report(IndexSet::validate({{1, 3, 2}}, 3, Mode::Upsilon));
  EXPECT_TRUE(u.contains("theta_only"));
  EXPECT_FALSE(u.contains("quadruples"));
  const auto cs = analysis_report(fixtures::qm3(), CrossSectionOptions{fixtures::qm3_center(), fixtures::qm3_directions()});
  EXPECT_EQ(cs["cross_section"]["certificate"]["verdict"], "CertifiedInjective");
}

TEST(AnalysisReport, TermCountsEqualMultiplicities) {
  oracle::Gen g(81);
  for (int rep = 0; rep < 100; ++rep) {
    const auto r = analysis_report(g.index_set(3, 8, 12));
    ASSERT_EQ(r["quadruples"].size(), r["jacobi_system"].size());
    for (std::size_t e = 0; e < r["quadruples"].size(); ++e) {
      const auto line = r["jacobi_system"][e].get<std::string>();
      std::size_t terms = 0;
      for (std::size_t pos = line.find('*'); pos != std::string::npos; pos = line.find('*', pos + 1)) ++terms;
      EXPECT_EQ(terms, r["quadruples"][e]["multiplicity"].get<std::size_t>());
      EXPECT_EQ(r["quadruples"][e]["pairs"].size(), terms);
    }
  }
}

TEST(JacobiReport, Residuals) {
  const Rational s(1, 2);
  const auto r = jacobi_report(fixtures::qm2(), RationalVector{1 + s, 1 - s, 1, 1, 1 - s, 1 + s});
  EXPECT_EQ(r["residuals"][0]["value"], "-2");
  EXPECT_EQ(r["is_lie"], false);
  EXPECT_EQ(r["jacobiator_is_zero"], false);
  const auto ok = jacobi_report(fixtures::qm2(), fixtures::ones(6));
  EXPECT_EQ(ok["is_lie"], true);
  EXPECT_EQ(ok["jacobiator_is_zero"], true);
}

TEST(IsomorphicReport, Verdicts) {
  const auto l4 = fixtures::l4();
  const auto r = isomorphic_report(StructureVector(l4, {1, 1}), StructureVector(l4, {Rational(-7, 3), 22}));
  EXPECT_EQ(r["verdict"], "equivalent");
  EXPECT_EQ(r["caveat"], "assumes-D-orbit-classes");
  const auto a = StructureVector::ones(fixtures::qm2());
  EXPECT_EQ(isomorphic_report(a, a.with_value(5, -1))["verdict"], "distinct (sign)");
  EXPECT_EQ(isomorphic_report(a, a)["verdict"], "equivalent");
}

TEST(CrossSectionReport, Qm3) {
  const auto r = cross_section_report(fixtures::qm3(), CrossSectionOptions{fixtures::qm3_center(), fixtures::qm3_directions()});
  const auto& cs = r["cross_section"];
  EXPECT_EQ(cs["domain"]["inequalities"].size(), 3u);
  EXPECT_EQ(cs["certificate"]["jacobian_at_center"], Json::parse(R"([["3","2"],["2","4"]])"));
  EXPECT_EQ(cs["branches"].size(), 4u);
  EXPECT_EQ(cs["branches"][0]["curves"][0]["text"], "s = (-t^2 + 1)/(t - 3)");
  EXPECT_EQ(cs["center_is_lie"], false);
}

TEST(CrossSectionReport, SymbolicLiePointsForHalfExponent) {
  CrossSectionOptions opt;
  opt.exponent = Rational(1, 2);
  const auto r = cross_section_report(fixtures::qm2(), opt);
  ASSERT_EQ(r["cross_section"]["lie_points"].size(), 1u);
  EXPECT_EQ(r["cross_section"]["lie_points"][0][0], "(1)^(1/2)");
}

TEST(TextFormat, RoundTripFixtures) {
  std::vector<Json> docs{analysis_report(fixtures::qm2()),
                         analysis_report(fixtures::example1()),
                         analysis_report(IndexSet::validate({}, 3)),
                         cross_section_report(fixtures::qm3(), CrossSectionOptions{fixtures::qm3_center(), fixtures::qm3_directions()}),
                         cross_section_report(fixtures::qm2b()),
                         jacobi_report(fixtures::qm2(), fixtures::ones(6)),
                         isomorphic_report(StructureVector::ones(fixtures::l4()), StructureVector::ones(fixtures::l4()))};
  for (const auto& d : docs) EXPECT_EQ(parse_text(to_text(d)), d) << to_text(d);
}

TEST(TextFormat, RoundTripRandom) {
  oracle::Gen g(82);
  for (int rep = 0; rep < 100; ++rep) {
    const auto l = g.index_set(3, 8, 12);
    const auto r = analysis_report(l);
    EXPECT_EQ(parse_text(to_text(r)), r);
    const auto s = stratum_json(summarize(l, static_cast<std::uint64_t>(rep)));
    EXPECT_EQ(parse_text(to_text(s)), s);
  }
}

TEST(TextFormat, TrickyScalars) {
  Json j{{"a", "true"}, {"b", "123"}, {"c", ""}, {"d", "x: y"}, {"e", Json::array()}, {"f", Json::object()},
         {"g", 1.5}, {"h", -3}, {"i", false}, {"j", Json::array({"-", "#", "1/2"})}};
  EXPECT_EQ(parse_text(to_text(j)), j);
  EXPECT_THROW(parse_text("a: [1, 2"), Error);
}

TEST(Sweep, CountsAndOrder) {
  SweepOptions opt;
  opt.n = 4;
  std::vector<std::uint64_t> ordinals;
  std::vector<std::size_t> sizes;
  const auto counts = sweep(opt, [&](const StratumSummary& s) {
    ordinals.push_back(s.ordinal);
    sizes.push_back(s.lambda.size());
  });
  EXPECT_EQ(counts.enumerated, 16u);
  EXPECT_EQ(counts.reported, 16u);
  EXPECT_TRUE(std::is_sorted(sizes.begin(), sizes.end()));
  for (std::size_t i = 0; i < ordinals.size(); ++i) EXPECT_EQ(ordinals[i], i);
}

TEST(Sweep, WorkersDoNotChangeResults) {
  SweepOptions a;
  a.n = 6;
  a.max_size = 4;
  a.workers = 1;
  SweepOptions b = a;
  b.workers = 5;
  std::vector<std::string> ra, rb;
  sweep(a, [&](const StratumSummary& s) { ra.push_back(stratum_json(s).dump()); });
  sweep(b, [&](const StratumSummary& s) { rb.push_back(stratum_json(s).dump()); });
  EXPECT_EQ(ra, rb);
  EXPECT_GT(ra.size(), 5000u);
}

TEST(Sweep, FiltersAndCaps) {
  SweepOptions opt;
  opt.n = 5;
  add_filter(opt, "obstruction=Empty");
  std::size_t n = 0;
  sweep(opt, [&](const StratumSummary& s) {
    ++n;
    EXPECT_TRUE(oracle::has_multiplicity_one(s.lambda));
  });
  EXPECT_EQ(n, 568u);
  EXPECT_THROW(add_filter(opt, "size=3"), Error);
  EXPECT_THROW(add_filter(opt, "classification=nope"), Error);
  SweepOptions big;
  big.n = 9;
  EXPECT_THROW(sweep_sizes(big), Error);
  big.n = 7;
  EXPECT_THROW(sweep_sizes(big), Error);
  big.size = 2;
  EXPECT_NO_THROW(sweep_sizes(big));
  SweepOptions disc;
  disc.n = 5;
  disc.discard_obstructed = true;
  const auto c = sweep(disc, [](const StratumSummary& s) { EXPECT_NE(s.obstruction, ObstructionStatus::Empty); });
  EXPECT_EQ(c.enumerated, 1024u);
  EXPECT_EQ(c.reported, 1024u - 568u);
}
