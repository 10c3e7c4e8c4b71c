#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "liestrata/core_types.hpp"
#include "liestrata/error.hpp"
#include "liestrata/exact_linalg.hpp"

namespace liestrata {

struct Quadruple {
  std::array<int, 4> q{};

  int operator[](std::size_t i) const { return q[i]; }
  auto operator<=>(const Quadruple&) const = default;
  std::string to_string() const {
    return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
           std::to_string(q[3]) + ")";
  }
};

/// Two aligned triples of an index set, by 0-based position, p < r.
struct AlignedPair {
  std::size_t p = 0, r = 0;
  int sign = 1;
  int table_case = 0;  // 1..6

  bool operator==(const AlignedPair&) const = default;
};

struct QuadrupleEntry {
  Quadruple quad;
  std::vector<AlignedPair> pairs;

  std::size_t multiplicity() const noexcept { return pairs.size(); }
};

/// Quadruples of an index set sorted ascending, each with its contributing pairs.
class QuadrupleTable {
 public:
  QuadrupleTable(IndexSet lambda, std::vector<QuadrupleEntry> entries)
      : lambda_(std::move(lambda)), entries_(std::move(entries)) {}

  const IndexSet& lambda() const noexcept { return lambda_; }
  const std::vector<QuadrupleEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const QuadrupleEntry* find(const Quadruple& q) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), q,
                               [](const QuadrupleEntry& e, const Quadruple& x) { return e.quad < x; });
    return it != entries_.end() && it->quad == q ? &*it : nullptr;
  }
  const QuadrupleEntry& at(const Quadruple& q) const {
    if (auto* e = find(q)) return *e;
    throw Error(ErrorCode::UnknownQuadruple, q.to_string() + " is not a quadruple of " + lambda_.to_string());
  }

  std::size_t multiplicity(const Quadruple& q) const { return at(q).multiplicity(); }

 private:
  IndexSet lambda_;
  std::vector<QuadrupleEntry> entries_;
};

inline int root_dot(const Triple& a, const Triple& b) {
  auto coeff = [](const Triple& t, int x) { return (t.i == x) + (t.j == x) - (t.k == x); };
  return coeff(b, a.i) + coeff(b, a.j) - coeff(b, a.k);
}

inline bool aligned(const Triple& a, const Triple& b) { return root_dot(a, b) == -1; }

inline Quadruple quadruple_of(const Triple& a, const Triple& b) {
  if (!aligned(a, b)) throw Error(ErrorCode::NotAligned, a.to_string() + " and " + b.to_string() + " are not aligned");
  std::set<int> sa{a.i, a.j, a.k}, sb{b.i, b.j, b.k};
  std::vector<int> diff;
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(diff));
  if (diff.size() != 4)
    throw Error(ErrorCode::NotAligned, a.to_string() + " and " + b.to_string() + " do not form a quadruple");
  return Quadruple{{diff[0], diff[1], diff[2], diff[3]}};
}

/// Case number (1 to 6) in the pair case table for an aligned pair of triples from Theta_n.
inline int pair_case(const Triple& a, const Triple& b) {
  const Quadruple q = quadruple_of(a, b);
  if (!(a.i < a.j && a.j < a.k && b.i < b.j && b.j < b.k))
    throw Error(ErrorCode::RequiresTheta, "pair classification needs triples with i<j<k");
  // tk is the triple whose k is shared; the other holds it at i or j
  const bool a_top = (a.k == b.i || a.k == b.j);
  const Triple& tk = a_top ? a : b;
  const Triple& other = a_top ? b : a;
  const bool shared_first = other.i == tk.k;
  int low_case;  // 1: {q1,q2}, 3: {q1,q3}, 5: {q2,q3}
  if (tk.i == q[0] && tk.j == q[1])
    low_case = 1;
  else if (tk.i == q[0] && tk.j == q[2])
    low_case = 3;
  else if (tk.i == q[1] && tk.j == q[2])
    low_case = 5;
  else
    throw Error(ErrorCode::NotAligned, "pair " + a.to_string() + "," + b.to_string() + " outside the pair case table");
  int c = 0;
  switch (low_case) {
    case 1: c = shared_first ? 1 : 2; break;
    case 3: c = shared_first ? 4 : 3; break;
    default: c = shared_first ? 6 : 5; break;
  }
  assert(c != 4 && c != 6);
  if (c == 4 || c == 6) throw Error(ErrorCode::NotAligned, "pair case " + std::to_string(c) + " reached");
  return c;
}

inline int case_sign(int c) { return (c == 2 || c == 4 || c == 5) ? -1 : 1; }

inline int pair_sign(const Triple& a, const Triple& b) { return case_sign(pair_case(a, b)); }

inline QuadrupleTable quadruple_table(const IndexSet& lambda) {
  lambda.require_theta("quadruple table");
  std::map<Quadruple, std::vector<AlignedPair>> groups;
  const auto& ts = lambda.triples();
  for (std::size_t p = 0; p < ts.size(); ++p)
    for (std::size_t r = p + 1; r < ts.size(); ++r) {
      if (!aligned(ts[p], ts[r])) continue;
      const int c = pair_case(ts[p], ts[r]);
      groups[quadruple_of(ts[p], ts[r])].push_back(AlignedPair{p, r, case_sign(c), c});
    }
  std::vector<QuadrupleEntry> entries;
  for (auto& [q, pairs] : groups) entries.push_back(QuadrupleEntry{q, std::move(pairs)});
  return QuadrupleTable(lambda, std::move(entries));
}

/// Triples of Lambda occurring in a pair of q1 and in a pair of q2.
inline std::vector<Triple> common_triples(const Quadruple& q1, const Quadruple& q2, const QuadrupleTable& table) {
  const auto& e1 = table.at(q1);
  const auto& e2 = table.at(q2);
  std::set<std::size_t> s1, both;
  for (const auto& pr : e1.pairs) s1.insert({pr.p, pr.r});
  for (const auto& pr : e2.pairs)
    for (auto x : {pr.p, pr.r})
      if (s1.count(x)) both.insert(x);
  std::vector<Triple> out;
  for (auto x : both) out.push_back(table.lambda()[x]);
  return out;
}

/// e_{m1} + e_{m2} - e_{m3} - e_{m4} in Z^m, 0-based positions.
inline IntVector w_vector(std::size_t m, std::size_t m1, std::size_t m2, std::size_t m3, std::size_t m4) {
  IntVector w(m, 0);
  w.at(m1) += 1;
  w.at(m2) += 1;
  w.at(m3) -= 1;
  w.at(m4) -= 1;
  return w;
}

inline IntVector w_vector(std::size_t m, const AlignedPair& plus, const AlignedPair& minus) {
  return w_vector(m, plus.p, plus.r, minus.p, minus.r);
}

/// All w-vectors from unordered pairs of pairs sharing a quadruple, in table order.
inline std::vector<IntVector> w_vectors(const QuadrupleTable& table) {
  const std::size_t m = table.lambda().size();
  std::vector<IntVector> out;
  for (const auto& e : table.entries())
    for (std::size_t a = 0; a < e.pairs.size(); ++a)
      for (std::size_t b = a + 1; b < e.pairs.size(); ++b) out.push_back(w_vector(m, e.pairs[a], e.pairs[b]));
  return out;
}

inline KernelBasis lambda_subspace(const QuadrupleTable& table) {
  return canonical_span_basis(w_vectors(table), table.lambda().size());
}
inline KernelBasis lambda_subspace(const IndexSet& lambda) { return lambda_subspace(quadruple_table(lambda)); }

inline std::size_t lambda_subspace_dim(const QuadrupleTable& table) {
  return rational_rank(w_vectors(table), table.lambda().size());
}

inline std::size_t kernel_dim(const IndexSet& lambda) { return lambda.size() - rank(root_matrix(lambda)); }

inline bool null_space_spanning(const QuadrupleTable& table) {
  return lambda_subspace_dim(table) == kernel_dim(table.lambda());
}
inline bool null_space_spanning(const IndexSet& lambda) { return null_space_spanning(quadruple_table(lambda)); }

enum class Classification {
  Empty,
  Unobstructed,
  Finite1q2,
  Finite2q2Disjoint,
  OneDim2q2Shared,
  OneDim1q3,
  OneDim1q3Plus1q2Shared,
  Unclassified
};

inline constexpr Classification kAllClassifications[] = {
    Classification::Empty,           Classification::Unobstructed, Classification::Finite1q2,
    Classification::Finite2q2Disjoint, Classification::OneDim2q2Shared, Classification::OneDim1q3,
    Classification::OneDim1q3Plus1q2Shared, Classification::Unclassified};

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Empty: return "Empty";
    case Classification::Unobstructed: return "Unobstructed";
    case Classification::Finite1q2: return "Finite-1q2";
    case Classification::Finite2q2Disjoint: return "Finite-2q2-disjoint";
    case Classification::OneDim2q2Shared: return "OneDim-2q2-shared";
    case Classification::OneDim1q3: return "OneDim-1q3";
    case Classification::OneDim1q3Plus1q2Shared: return "OneDim-1q3+1q2-shared";
    case Classification::Unclassified: return "Unclassified";
  }
  return "?";
}

inline std::optional<Classification> parse_classification(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Classification::Unclassified); ++i) {
    auto c = static_cast<Classification>(i);
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

inline Classification classify(const QuadrupleTable& table) {
  const auto& es = table.entries();
  if (es.empty()) return Classification::Unobstructed;
  for (const auto& e : es)
    if (e.multiplicity() == 1) return Classification::Empty;

  std::vector<std::size_t> mult;
  for (const auto& e : es) mult.push_back(e.multiplicity());
  auto shared = [&](std::size_t a, std::size_t b) { return common_triples(es[a].quad, es[b].quad, table).size(); };

  Classification candidate = Classification::Unclassified;
  if (mult.size() == 1 && mult[0] == 2) {
    candidate = Classification::Finite1q2;
  } else if (mult.size() == 1 && mult[0] == 3) {
    candidate = Classification::OneDim1q3;
  } else if (mult.size() == 2 && mult[0] == 2 && mult[1] == 2) {
    const auto c = shared(0, 1);
    if (c == 0) candidate = Classification::Finite2q2Disjoint;
    if (c == 1) candidate = Classification::OneDim2q2Shared;
  } else if (mult.size() == 2 && ((mult[0] == 2 && mult[1] == 3) || (mult[0] == 3 && mult[1] == 2))) {
    if (shared(0, 1) == 1) candidate = Classification::OneDim1q3Plus1q2Shared;
  }
  if (candidate == Classification::Unclassified) return candidate;
  return null_space_spanning(table) ? candidate : Classification::Unclassified;
}

inline Classification classify(const IndexSet& lambda) { return classify(quadruple_table(lambda)); }

}  // namespace liestrata
