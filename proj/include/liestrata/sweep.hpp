#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "liestrata/combinatorics.hpp"
#include "liestrata/core_types.hpp"
#include "liestrata/cross_section.hpp"
#include "liestrata/error.hpp"
#include "liestrata/jacobi.hpp"
#include "liestrata/report.hpp"

namespace liestrata {

struct SweepOptions {
  int n = 4;
  std::optional<std::size_t> size;      // exactly this many triples
  std::optional<std::size_t> max_size;  // at most this many
  std::optional<ObstructionStatus> obstruction;
  std::optional<Classification> classification;
  bool discard_obstructed = false;
  unsigned workers = 1;
  int max_n = 8;
};

/// Applies one "key=value" filter to the options.
inline void add_filter(SweepOptions& opt, const std::string& f) {
  const auto eq = f.find('=');
  if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "filter '" + f + "' needs the form key=value");
  const std::string key = f.substr(0, eq), value = f.substr(eq + 1);
  if (key == "obstruction") {
    opt.obstruction = parse_obstruction(value);
    if (!opt.obstruction) throw Error(ErrorCode::ParseError, "unknown obstruction status '" + value + "'");
  } else if (key == "classification") {
    opt.classification = parse_classification(value);
    if (!opt.classification) throw Error(ErrorCode::ParseError, "unknown classification '" + value + "'");
  } else {
    throw Error(ErrorCode::ParseError, "unknown filter key '" + key + "'");
  }
}

/// LIESTRATA_WORKERS if set and positive, else the hardware concurrency.
inline unsigned workers_from_env() {
  if (const char* s = std::getenv("LIESTRATA_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

struct StratumSummary {
  std::uint64_t ordinal = 0;
  IndexSet lambda;
  ObstructionStatus obstruction = ObstructionStatus::Automatic;
  Classification classification = Classification::Unobstructed;
  std::vector<std::pair<Quadruple, std::size_t>> quadruples;
  std::size_t kernel_dim = 0;
  bool spanning = false;
};

inline StratumSummary summarize(const IndexSet& lambda, std::uint64_t ordinal = 0) {
  const QuadrupleTable table = quadruple_table(lambda);
  StratumSummary s;
  s.ordinal = ordinal;
  s.lambda = lambda;
  s.obstruction = obstruction_status(table);
  s.classification = classify(table);
  for (const auto& e : table.entries()) s.quadruples.emplace_back(e.quad, e.multiplicity());
  s.kernel_dim = kernel_dim(lambda);
  s.spanning = lambda_subspace_dim(table) == s.kernel_dim;
  return s;
}

inline bool matches(const SweepOptions& opt, const StratumSummary& s) {
  if (opt.discard_obstructed && s.obstruction == ObstructionStatus::Empty) return false;
  if (opt.obstruction && s.obstruction != *opt.obstruction) return false;
  if (opt.classification && s.classification != *opt.classification) return false;
  return true;
}

inline Json stratum_json(const StratumSummary& s) {
  Json quads = Json::array();
  for (const auto& [q, m] : s.quadruples) quads.push_back(Json{{"quadruple", quadruple_json(q)}, {"multiplicity", m}});
  Json triples = Json::array();
  for (const auto& t : s.lambda.triples()) triples.push_back(triple_json(t));
  return Json{{"ordinal", s.ordinal},
              {"size", s.lambda.size()},
              {"triples", triples},
              {"obstruction", to_string(s.obstruction)},
              {"classification", to_string(s.classification)},
              {"quadruples", quads},
              {"kernel_dim", s.kernel_dim},
              {"null_space_spanning", s.spanning}};
}

struct SweepCounts {
  std::uint64_t enumerated = 0, reported = 0;
  std::vector<std::pair<std::string, std::uint64_t>> by_obstruction, by_classification;

  SweepCounts() {
    for (auto o : {ObstructionStatus::Empty, ObstructionStatus::Automatic, ObstructionStatus::Nontrivial})
      by_obstruction.emplace_back(to_string(o), 0);
    for (auto c : kAllClassifications) by_classification.emplace_back(to_string(c), 0);
  }

  void record(const StratumSummary& s) {
    ++enumerated;
    for (auto& [k, v] : by_obstruction)
      if (k == to_string(s.obstruction)) ++v;
    for (auto& [k, v] : by_classification)
      if (k == to_string(s.classification)) ++v;
  }

  Json to_json() const {
    Json o = Json::object(), c = Json::object();
    for (const auto& [k, v] : by_obstruction) o[k] = v;
    for (const auto& [k, v] : by_classification) c[k] = v;
    return Json{{"enumerated", enumerated}, {"reported", reported}, {"by_obstruction", o}, {"by_classification", c}};
  }
};

/// Subset sizes [lo, hi] to enumerate (empty when lo > hi); enforces the caps.
inline std::pair<std::size_t, std::size_t> sweep_sizes(const SweepOptions& opt) {
  if (opt.n < 1) throw Error(ErrorCode::IndexOutOfRange, "dimension must be at least 1");
  if (opt.n > opt.max_n)
    throw Error(ErrorCode::CapExceeded, "n=" + std::to_string(opt.n) + " exceeds the cap " + std::to_string(opt.max_n));
  if (opt.n >= 7 && !opt.size && !opt.max_size)
    throw Error(ErrorCode::CapExceeded, "a size cap is required for n >= 7");
  const std::size_t total = enumerate_theta(opt.n).size();
  std::size_t lo = 0, hi = std::min(opt.max_size.value_or(total), total);
  if (opt.size) {
    lo = *opt.size;
    hi = std::min(hi, *opt.size);
  }
  return {lo, hi};
}

/// Enumerates subsets of Theta_n by size, then lexicographically by position; calls sink(summary)
/// for each match in that order.
template <class Sink>
SweepCounts sweep(const SweepOptions& opt, Sink&& sink) {
  const auto theta = enumerate_theta(opt.n);
  const std::size_t total = theta.size();
  SweepCounts counts;
  const auto [lo, hi] = sweep_sizes(opt);
  const unsigned workers = std::max(1u, opt.workers);
  const std::size_t batch_size = 2048 * workers;

  std::vector<std::vector<std::size_t>> batch;
  std::vector<std::optional<StratumSummary>> results;
  std::uint64_t ordinal = 0;

  auto flush = [&] {
    results.assign(batch.size(), std::nullopt);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t b = begin; b < end; ++b) {
        std::vector<Triple> raw;
        for (auto idx : batch[b]) raw.push_back(theta[idx]);
        results[b] = summarize(IndexSet::validate(std::move(raw), opt.n), ordinal + b);
      }
    };
    if (workers == 1 || batch.size() < 64) {
      work(0, batch.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (batch.size() + workers - 1) / workers;
      for (std::size_t b = 0; b < batch.size(); b += chunk) pool.emplace_back(work, b, std::min(batch.size(), b + chunk));
      for (auto& t : pool) t.join();
    }
    for (const auto& r : results) {
      counts.record(*r);
      if (matches(opt, *r)) {
        ++counts.reported;
        sink(*r);
      }
    }
    ordinal += batch.size();
    batch.clear();
  };

  for (std::size_t k = lo; k <= hi; ++k) {
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      batch.push_back(comb);
      if (batch.size() >= batch_size) flush();
      if (!detail::next_combination(comb, total)) break;
    }
  }
  if (!batch.empty()) flush();
  return counts;
}

}  // namespace liestrata
