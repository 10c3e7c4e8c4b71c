#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "liestrata/io.hpp"
#include "liestrata/report.hpp"
#include "liestrata/sweep.hpp"
#include "liestrata/text_format.hpp"

namespace {

using namespace liestrata;

constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::OutsideDomain:
    case ErrorCode::NonPositiveCenter:
    case ErrorCode::WNotQuadrupleDerived:
    case ErrorCode::UnsupportedShape:
    case ErrorCode::CapExceeded:
      return kExitDomain;
    default:
      return kExitInput;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print(const Json& j, const std::string& format) {
  if (format == "structured")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << to_text(j);
}

struct CrossFlags {
  std::string center, exponent, c = "1", directions;

  CrossSectionOptions resolve(const InputDocument& doc) const {
    CrossSectionOptions o;
    o.center = center.empty() ? doc.center : std::optional(parse_rational_vector(center));
    o.directions = directions.empty() ? doc.directions : std::optional(parse_directions(directions));
    if (!exponent.empty())
      o.exponent = parse_rational(exponent);
    else if (doc.exponent)
      o.exponent = *doc.exponent;
    o.c = parse_rational(c);
    return o;
  }
};

void add_cross_flags(CLI::App* cmd, CrossFlags& f) {
  cmd->add_option("--center", f.center, "center a0 as comma separated rationals (default all ones)");
  cmd->add_option("--exponent", f.exponent, "exponent p (default 1)");
  cmd->add_option("--c", f.c, "scale c of F_c (default 1)");
  cmd->add_option("--directions", f.directions, "direction vectors, ';' separated");
}

void run_sweep(const SweepOptions& opt, const std::vector<std::string>& filters, const std::string& format) {
  sweep_sizes(opt);
  Json params{{"n", opt.n}};
  params["size"] = opt.size ? Json(*opt.size) : Json("any");
  params["max_size"] = opt.max_size ? Json(*opt.max_size) : Json("none");
  params["filters"] = filters;
  params["discard_obstructed"] = opt.discard_obstructed;
  Json header = report_header("sweep");
  header["parameters"] = params;

  const bool structured = format == "structured";
  bool first = true;
  if (structured) {
    std::string h = header.dump();
    h.pop_back();
    std::cout << h << ",\"strata\":[";
  } else {
    std::cout << to_text(header);
  }
  const SweepCounts counts = sweep(opt, [&](const StratumSummary& s) {
    const Json j = stratum_json(s);
    if (structured) {
      std::cout << (first ? "\n" : ",\n") << j.dump();
    } else {
      if (first) std::cout << "strata:\n";
      std::cout << to_text(Json::array({j}));
    }
    first = false;
  });
  if (structured) {
    std::cout << (first ? "" : "\n") << "],\"summary\":" << counts.to_json().dump() << "}\n";
  } else {
    if (first) std::cout << "strata: []\n";
    std::cout << to_text(Json{{"summary", counts.to_json()}});
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liestrata: strata of nilpotent Lie algebra structure constants"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
  };

  std::string path;
  bool with_cross = false;
  CrossFlags cross;

  auto* analyze = app.add_subcommand("analyze", "full report for one index set");
  analyze->add_option("input", path, "input file, '-' for stdin")->required();
  analyze->add_flag("--cross-section", with_cross, "include the cross-section section");
  add_cross_flags(analyze, cross);
  add_format(analyze);

  SweepOptions sweep_opt;
  std::size_t max_size = 0, size = 0;
  std::vector<std::string> filters;
  auto* sweep_cmd = app.add_subcommand("sweep", "enumerate index sets in Theta_n");
  sweep_cmd->add_option("--n", sweep_opt.n, "dimension")->required();
  auto* max_opt = sweep_cmd->add_option("--max-size", max_size, "largest index set size");
  auto* size_opt = sweep_cmd->add_option("--size", size, "exact index set size");
  sweep_cmd->add_option("--filter", filters, "obstruction=<status> or classification=<label>");
  sweep_cmd->add_flag("--discard-obstructed", sweep_opt.discard_obstructed, "skip Empty strata");
  add_format(sweep_cmd);

  auto* iso = app.add_subcommand("isomorphic", "D-orbit test for structure vectors a and b");
  iso->add_option("input", path, "input file, '-' for stdin")->required();
  add_format(iso);

  auto* jac = app.add_subcommand("jacobi", "Jacobi system, evaluated at a when given");
  jac->add_option("input", path, "input file, '-' for stdin")->required();
  add_format(jac);

  auto* cs = app.add_subcommand("cross-section", "cross section, domain and branch solutions");
  cs->add_option("input", path, "input file, '-' for stdin")->required();
  add_cross_flags(cs, cross);
  add_format(cs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*sweep_cmd) {
      if (*max_opt) sweep_opt.max_size = max_size;
      if (*size_opt) sweep_opt.size = size;
      for (const auto& f : filters) add_filter(sweep_opt, f);
      sweep_opt.workers = workers_from_env();
      run_sweep(sweep_opt, filters, format);
      return 0;
    }
    const InputDocument doc = parse_input(read_input(path));
    if (*analyze) {
      print(analysis_report(doc.lambda, with_cross ? std::optional(cross.resolve(doc)) : std::nullopt), format);
    } else if (*iso) {
      if (!doc.a || !doc.b) throw Error(ErrorCode::ParseError, "isomorphic needs both 'a' and 'b'");
      print(isomorphic_report(StructureVector(doc.lambda, *doc.a), StructureVector(doc.lambda, *doc.b)), format);
    } else if (*jac) {
      print(jacobi_report(doc.lambda, doc.a), format);
    } else if (*cs) {
      print(cross_section_report(doc.lambda, cross.resolve(doc)), format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return 0;
}
