#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "liestrata/combinatorics.hpp"
#include "liestrata/core_types.hpp"
#include "liestrata/cross_section.hpp"
#include "liestrata/exact_linalg.hpp"
#include "liestrata/jacobi.hpp"
#include "liestrata/orbits.hpp"

namespace liestrata {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Json rationals_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

inline Json bits_json(const BitVector& b) {
  Json a = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i) a.push_back(b.get(i) ? 1 : 0);
  return a;
}

inline Json int_rows_json(const std::vector<IntVector>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(r);
  return a;
}

inline Json matrix_json(const IntegerMatrix& y) { return int_rows_json(y.row_vectors()); }

inline Json matrix_json(const GF2Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(bits_json(m.row(r)));
  return a;
}

inline Json triple_json(const Triple& t) { return Json::array({t.i, t.j, t.k}); }

inline Json index_set_json(const IndexSet& lambda) {
  Json triples = Json::array();
  for (const auto& t : lambda.triples()) triples.push_back(triple_json(t));
  return Json{{"n", lambda.n()}, {"mode", to_string(lambda.mode())}, {"triples", triples}, {"text", lambda.to_string()}};
}

inline Json quadruple_json(const Quadruple& q) { return Json::array({q.q[0], q.q[1], q.q[2], q.q[3]}); }

inline Json quadruple_table_json(const QuadrupleTable& table) {
  const auto& lambda = table.lambda();
  Json out = Json::array();
  for (const auto& e : table.entries()) {
    Json pairs = Json::array();
    for (const auto& p : e.pairs)
      pairs.push_back(Json{{"triples", Json::array({triple_json(lambda[p.p]), triple_json(lambda[p.r])})},
                           {"positions", Json::array({p.p + 1, p.r + 1})},
                           {"sign", p.sign},
                           {"case", p.table_case}});
    out.push_back(Json{{"quadruple", quadruple_json(e.quad)}, {"multiplicity", e.multiplicity()}, {"pairs", pairs}});
  }
  return out;
}

inline Json jacobi_lines_json(const JacobiSystem& sys) {
  Json out = Json::array();
  for (std::size_t e = 0; e < sys.size(); ++e) out.push_back(sys.equation_string(e));
  return out;
}

// ---------------------------------------------------------------------------
// Cross-section section

struct CrossSectionOptions {
  std::optional<RationalVector> center;
  std::optional<std::vector<IntVector>> directions;
  Rational exponent = 1;
  Rational c = 1;
};

inline Json quadratic_json(const RealQuadratic& x) { return x.to_string(); }

inline Json interval_json(const Interval& iv) { return Json::array({quadratic_json(iv.lo), quadratic_json(iv.hi)}); }

inline Json branch_json(const BranchSolution& b, const std::vector<std::string>& names) {
  Json eqs = Json::array();
  for (const auto& e : b.equations)
    if (!e.poly.is_zero()) eqs.push_back(e.quad.to_string() + ": " + e.poly.to_string(names) + " = 0");
  Json points = Json::array();
  for (const auto& p : b.points) {
    Json pt = Json::array();
    for (const auto& x : p) pt.push_back(quadratic_json(x));
    points.push_back(pt);
  }
  Json curves = Json::array();
  for (const auto& c : b.curves) {
    Json ivs = Json::array();
    for (const auto& iv : c.intervals) ivs.push_back(interval_json(iv));
    curves.push_back(Json{{"text", c.to_string(names)},
                          {"solved", names.at(c.solved)},
                          {"free", names.at(c.free)},
                          {"numerator", c.numerator.to_string(names.at(c.free))},
                          {"denominator", c.denominator.to_string(names.at(c.free))},
                          {"intervals", ivs}});
  }
  Json lines = Json::array();
  for (const auto& l : b.lines)
    lines.push_back(Json{{"text", l.to_string(names)},
                         {"fixed", names.at(l.fixed)},
                         {"value", rational_json(l.value)},
                         {"free", names.at(l.free)},
                         {"interval", interval_json(l.interval)}});
  return Json{{"sign", bits_json(b.sign)}, {"kind", to_string(b.kind)}, {"note", b.note}, {"equations", eqs},
              {"points", points},          {"curves", curves},          {"lines", lines}};
}

inline Json cross_section_json(const IndexSet& lambda, const CrossSectionOptions& opt = {}) {
  const CrossSectionSpec spec = make_cross_section(lambda, opt.center, opt.directions, opt.exponent);
  const PolytopeDomain dom = delta_domain(spec);
  const auto names = parameter_names(spec.dim());
  Json out;
  out["exponent"] = rational_json(spec.p);
  out["c"] = rational_json(opt.c);
  out["center"] = rationals_json(spec.a0);
  out["center_is_lie"] = spec.center_is_lie ? Json(*spec.center_is_lie) : Json("not applicable");
  out["directions"] = int_rows_json(spec.W);
  out["spans_kernel"] = spec.spans_kernel;
  out["parameters"] = names;
  Json forms = Json::array();
  for (const auto& f : coordinate_forms(spec)) forms.push_back(f.to_string(names));
  out["magnitudes"] = forms;

  Json ineqs = Json::array();
  for (const auto& q : dom.inequalities) {
    Json src = Json::array();
    for (auto k : q.sources) src.push_back(k + 1);
    ineqs.push_back(Json{{"text", q.to_string(names)},
                         {"constant", rational_json(q.constant)},
                         {"coefficients", rationals_json(q.coeffs)},
                         {"positions", src}});
  }
  Json verts = Json::array();
  for (const auto& v : dom.vertices) verts.push_back(rationals_json(v));
  out["domain"] = Json{{"inequalities", ineqs}, {"vertices", verts}, {"fully_reduced", dom.fully_reduced}};

  const RationalVector zero(spec.dim(), Rational(0));
  Json jac = Json::array();
  const DominanceResult dr = dominance_certificate(spec, zero, opt.c);
  for (const auto& row : dr.jacobian) jac.push_back(rationals_json(row));
  Json cert;
  cert["jacobian_at_center"] = jac;
  cert["dominant_at_center"] = dr.dominant;
  if (lambda.mode() == Mode::Theta) {
    const auto [verdict, reason] = injectivity_certificate(spec);
    cert["verdict"] = to_string(verdict);
    cert["reason"] = reason;
  } else {
    cert["verdict"] = to_string(InjectivityVerdict::NotCertified);
    cert["reason"] = "requires an index set in Theta_n";
  }
  out["certificate"] = cert;

  Json branches = Json::array();
  Json lie = Json::array();
  if (lambda.mode() == Mode::Theta) {
    const auto sys = jacobi_system(lambda);
    const auto sols = solve_branch_fixtures(spec, sys);
    for (const auto& b : sols) branches.push_back(branch_json(b, names));
    if (integer_exponent(spec.p)) {
      for (const auto& a : lie_points(spec, sols)) lie.push_back(rationals_json(a.values()));
    } else {
      for (const auto& b : sols) {
        if (b.kind != BranchKind::FinitePoints) continue;
        for (const auto& pt : b.points) {
          RationalVector x;
          bool rational = true;
          for (const auto& c : pt) {
            rational = rational && c.is_rational();
            x.push_back(c.a());
          }
          if (!rational) continue;
          Json e = Json::array();
          for (const auto& s : sigma_point_symbolic(spec, b.sign, x)) e.push_back(s.to_string());
          lie.push_back(e);
        }
      }
    }
  }
  out["branches"] = branches;
  out["lie_points"] = lie;
  return out;
}

// ---------------------------------------------------------------------------
// Command reports

inline Json report_header(const char* command) { return Json{{"schema_version", kSchemaVersion}, {"command", command}}; }

inline Json analysis_report(const IndexSet& lambda, const std::optional<CrossSectionOptions>& cross = std::nullopt) {
  Json r = report_header("analyze");
  r["index_set"] = index_set_json(lambda);
  const IntegerMatrix y = root_matrix(lambda);
  const GF2Matrix yh = gf2_reduce(y);
  r["root_matrix"] = matrix_json(y);
  r["gf2_root_matrix"] = matrix_json(yh);
  r["rank"] = rank(y);
  r["gf2_rank"] = gf2_rank(yh);
  const KernelBasis kernel = left_null_basis(y);
  r["kernel_basis"] = int_rows_json(kernel);
  r["kernel_dim"] = kernel.size();
  Json trans = Json::array();
  const auto t = gf2_coset_transversal(yh);
  for (const auto& s : t) trans.push_back(bits_json(s));
  r["transversal"] = trans;
  r["transversal_size"] = t.size();
  if (lambda.mode() == Mode::Theta) {
    const QuadrupleTable table = quadruple_table(lambda);
    r["quadruples"] = quadruple_table_json(table);
    const KernelBasis w = lambda_subspace(table);
    r["lambda_subspace"] = int_rows_json(w);
    r["lambda_subspace_dim"] = w.size();
    r["null_space_spanning"] = w.size() == kernel.size();
    r["obstruction"] = to_string(obstruction_status(table));
    r["classification"] = to_string(classify(table));
    r["jacobi_system"] = jacobi_lines_json(jacobi_system(table));
  } else {
    r["theta_only"] = "quadruples, obstruction and classification require an index set in Theta_n";
  }
  if (cross) r["cross_section"] = cross_section_json(lambda, *cross);
  return r;
}

inline Json jacobi_report(const IndexSet& lambda, const std::optional<RationalVector>& a = std::nullopt) {
  Json r = report_header("jacobi");
  r["index_set"] = index_set_json(lambda);
  const QuadrupleTable table = quadruple_table(lambda);
  const JacobiSystem sys = jacobi_system(table);
  r["obstruction"] = to_string(obstruction_status(table));
  r["equations"] = jacobi_lines_json(sys);
  if (a) {
    const StructureVector v(lambda, *a);
    const RationalVector res = evaluate_jacobi(sys, v);
    Json residuals = Json::array();
    for (std::size_t e = 0; e < sys.size(); ++e)
      residuals.push_back(Json{{"quadruple", quadruple_json(sys.equations()[e].quad)}, {"value", rational_json(res[e])}});
    r["a"] = rationals_json(*a);
    r["residuals"] = residuals;
    r["is_lie"] = is_lie(sys, v);
    r["jacobiator_is_zero"] = brute_force_jacobiator(v);
  }
  return r;
}

inline Json isomorphic_report(const StructureVector& a, const StructureVector& b) {
  Json r = report_header("isomorphic");
  r["index_set"] = index_set_json(a.lambda());
  r["a"] = rationals_json(a.values());
  r["b"] = rationals_json(b.values());
  const OrbitVerdict v = orbit_verdict(a, b);
  r["magnitude_equivalent"] = v.magnitude;
  r["sign_equivalent"] = v.sign;
  r["verdict"] = v.to_string();
  r["caveat"] = v.caveat();
  return r;
}

inline Json cross_section_report(const IndexSet& lambda, const CrossSectionOptions& opt = {}) {
  Json r = report_header("cross-section");
  r["index_set"] = index_set_json(lambda);
  r["cross_section"] = cross_section_json(lambda, opt);
  return r;
}

}  // namespace liestrata
