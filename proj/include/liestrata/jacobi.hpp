#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "liestrata/combinatorics.hpp"
#include "liestrata/core_types.hpp"
#include "liestrata/error.hpp"
#include "liestrata/rational.hpp"

namespace liestrata {

/// sign * alpha_{t_p} * alpha_{t_r}, 0-based positions p < r.
struct JacobiTerm {
  int sign = 1;
  std::size_t p = 0, r = 0;

  bool operator==(const JacobiTerm&) const = default;
};

struct JacobiEquation {
  Quadruple quad;
  std::vector<JacobiTerm> terms;  // ascending (p, r)

  bool operator==(const JacobiEquation&) const = default;
};

class JacobiSystem {
 public:
  JacobiSystem(IndexSet lambda, std::vector<JacobiEquation> equations)
      : lambda_(std::move(lambda)), equations_(std::move(equations)) {}

  const IndexSet& lambda() const noexcept { return lambda_; }
  const std::vector<JacobiEquation>& equations() const noexcept { return equations_; }
  std::size_t size() const noexcept { return equations_.size(); }

  std::string equation_string(std::size_t e) const {
    const auto& eq = equations_[e];
    auto name = [&](std::size_t p) {
      const auto& t = lambda_[p];
      return "a[" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + "]";
    };
    std::string s = eq.quad.to_string() + ":";
    for (std::size_t i = 0; i < eq.terms.size(); ++i) {
      const auto& t = eq.terms[i];
      if (i == 0)
        s += t.sign < 0 ? " -" : " ";
      else
        s += t.sign < 0 ? " - " : " + ";
      s += name(t.p) + "*" + name(t.r);
    }
    return s + " = 0";
  }

  /// One line per quadruple.
  std::string to_string() const {
    std::string s;
    for (std::size_t e = 0; e < equations_.size(); ++e) s += equation_string(e) + "\n";
    return s;
  }

 private:
  IndexSet lambda_;
  std::vector<JacobiEquation> equations_;
};

inline JacobiSystem jacobi_system(const QuadrupleTable& table) {
  std::vector<JacobiEquation> eqs;
  for (const auto& e : table.entries()) {
    JacobiEquation eq{e.quad, {}};
    for (const auto& pr : e.pairs) eq.terms.push_back(JacobiTerm{pr.sign, pr.p, pr.r});
    std::sort(eq.terms.begin(), eq.terms.end(),
              [](const JacobiTerm& a, const JacobiTerm& b) { return std::tie(a.p, a.r) < std::tie(b.p, b.r); });
    eqs.push_back(std::move(eq));
  }
  return JacobiSystem(table.lambda(), std::move(eqs));
}

inline JacobiSystem jacobi_system(const IndexSet& lambda) { return jacobi_system(quadruple_table(lambda)); }

inline void require_lambda(const IndexSet& expected, const StructureVector& a) {
  if (!(a.lambda() == expected))
    throw Error(ErrorCode::DimensionMismatch, "structure vector indexed by a different index set");
}

/// Residual of each equation at a.
inline RationalVector evaluate_jacobi(const JacobiSystem& sys, const StructureVector& a) {
  require_lambda(sys.lambda(), a);
  RationalVector out;
  out.reserve(sys.size());
  for (const auto& eq : sys.equations()) {
    Rational s = 0;
    for (const auto& t : eq.terms) {
      if (t.sign > 0)
        s += a[t.p] * a[t.r];
      else
        s -= a[t.p] * a[t.r];
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline bool is_lie(const JacobiSystem& sys, const StructureVector& a) {
  for (const auto& r : evaluate_jacobi(sys, a))
    if (r != 0) return false;
  return true;
}

enum class ObstructionStatus { Empty, Automatic, Nontrivial };

inline const char* to_string(ObstructionStatus s) {
  switch (s) {
    case ObstructionStatus::Empty: return "Empty";
    case ObstructionStatus::Automatic: return "Automatic";
    case ObstructionStatus::Nontrivial: return "Nontrivial";
  }
  return "?";
}

inline std::optional<ObstructionStatus> parse_obstruction(std::string_view s) {
  for (auto v : {ObstructionStatus::Empty, ObstructionStatus::Automatic, ObstructionStatus::Nontrivial})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

inline ObstructionStatus obstruction_status(const QuadrupleTable& table) {
  if (table.empty()) return ObstructionStatus::Automatic;
  for (const auto& e : table.entries())
    if (e.multiplicity() == 1) return ObstructionStatus::Empty;
  return ObstructionStatus::Nontrivial;
}

inline ObstructionStatus obstruction_status(const IndexSet& lambda) {
  return obstruction_status(quadruple_table(lambda));
}

/// Full skew-symmetric bracket on the standard basis of K^n.
class Bracket {
 public:
  explicit Bracket(const StructureVector& a) : n_(static_cast<std::size_t>(a.lambda().n())), table_(n_ * n_) {
    for (std::size_t p = 0; p < a.size(); ++p) {
      const auto& t = a.lambda()[p];
      const auto i = static_cast<std::size_t>(t.i - 1), j = static_cast<std::size_t>(t.j - 1);
      const auto k = static_cast<std::size_t>(t.k - 1);
      table_[i * n_ + j].push_back({k, a[p]});
      table_[j * n_ + i].push_back({k, -a[p]});
    }
  }

  std::size_t n() const noexcept { return n_; }

  /// [x_i, x_j] as a sparse list of (basis index, coefficient), 0-based.
  const std::vector<std::pair<std::size_t, Rational>>& basis_bracket(std::size_t i, std::size_t j) const {
    return table_[i * n_ + j];
  }

  /// [[x_i, x_j], x_k] added into acc.
  void add_double(std::size_t i, std::size_t j, std::size_t k, RationalVector& acc) const {
    for (const auto& [s, c] : basis_bracket(i, j))
      for (const auto& [m, d] : basis_bracket(s, k)) acc[m] += c * d;
  }

  /// J(x_i, x_j, x_k), 0-based indices.
  RationalVector jacobiator(std::size_t i, std::size_t j, std::size_t k) const {
    RationalVector acc(n_, Rational(0));
    add_double(i, j, k, acc);
    add_double(j, k, i, acc);
    add_double(k, i, j, acc);
    return acc;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;
};

/// J(x_i, x_j, x_k) for 1-based i, j, k.
inline RationalVector jacobiator(const StructureVector& a, int i, int j, int k) {
  return Bracket(a).jacobiator(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                               static_cast<std::size_t>(k - 1));
}

/// Ground truth: the Jacobiator vanishes on every basis triple.
inline bool brute_force_jacobiator(const StructureVector& a) {
  const Bracket b(a);
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = i + 1; j < b.n(); ++j)
      for (std::size_t k = j + 1; k < b.n(); ++k)
        for (const auto& x : b.jacobiator(i, j, k))
          if (x != 0) return false;
  return true;
}

}  // namespace liestrata
