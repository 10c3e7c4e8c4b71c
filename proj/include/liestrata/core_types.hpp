#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "liestrata/bitvector.hpp"
#include "liestrata/error.hpp"
#include "liestrata/rational.hpp"

namespace liestrata {

/// Index (i, j, k) of the structure constant alpha_{ij}^k, 1-based.
struct Triple {
  int i = 0, j = 0, k = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;

  std::string to_string() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  }
};

/// Upsilon: i < j.  Theta: i < j < k (triangular, nilpotent case).
enum class Mode { Upsilon, Theta };

inline const char* to_string(Mode m) { return m == Mode::Theta ? "theta" : "upsilon"; }

/// All triples i < j < k in [n], dictionary order.
inline std::vector<Triple> enumerate_theta(int n) {
  std::vector<Triple> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back({i, j, k});
  return out;
}

/// A dictionary-sorted, duplicate-free set of triples in [n].
class IndexSet {
 public:
  IndexSet() = default;

  /// Validates and sorts. Throws IndexOutOfRange, OrderViolation or Duplicate.
  static IndexSet validate(std::vector<Triple> raw, int n, Mode mode = Mode::Theta) {
    if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "dimension must be at least 1");
    for (const auto& t : raw) {
      if (t.i < 1 || t.j < 1 || t.k < 1 || t.i > n || t.j > n || t.k > n)
        throw Error(ErrorCode::IndexOutOfRange, t.to_string() + " not in [" + std::to_string(n) + "]");
      if (t.i >= t.j) throw Error(ErrorCode::OrderViolation, t.to_string() + " needs i < j");
      if (mode == Mode::Theta && t.j >= t.k)
        throw Error(ErrorCode::OrderViolation, t.to_string() + " needs i < j < k");
    }
    std::sort(raw.begin(), raw.end());
    auto dup = std::adjacent_find(raw.begin(), raw.end());
    if (dup != raw.end()) throw Error(ErrorCode::Duplicate, dup->to_string() + " listed twice");
    IndexSet s;
    s.n_ = n;
    s.mode_ = mode;
    s.triples_ = std::move(raw);
    return s;
  }

  int n() const noexcept { return n_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const std::vector<Triple>& triples() const noexcept { return triples_; }
  const Triple& operator[](std::size_t p) const { return triples_[p]; }

  std::optional<std::size_t> position(const Triple& t) const {
    auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
    if (it == triples_.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - triples_.begin());
  }

  void require_theta(const char* what) const {
    if (mode_ != Mode::Theta)
      throw Error(ErrorCode::RequiresTheta, std::string(what) + " is defined only for index sets in Theta_n");
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  /// Text form "n=7; (1,2,4) (1,3,5) ...".
  std::string to_string() const {
    std::string s = "n=" + std::to_string(n_) + ";";
    for (const auto& t : triples_) s += " " + t.to_string();
    return s;
  }

 private:
  int n_ = 0;
  Mode mode_ = Mode::Theta;
  std::vector<Triple> triples_;
};

/// Nonzero exact structure constants indexed by an index set.
class StructureVector {
 public:
  StructureVector() = default;
  StructureVector(IndexSet lambda, RationalVector values)
      : lambda_(std::move(lambda)), values_(std::move(values)) {
    if (values_.size() != lambda_.size())
      throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(lambda_.size()) + " values, got " +
                                                    std::to_string(values_.size()));
    for (std::size_t p = 0; p < values_.size(); ++p)
      if (values_[p] == 0)
        throw Error(ErrorCode::ZeroEntry, "structure constant at " + lambda_[p].to_string() + " is zero");
  }

  static StructureVector ones(const IndexSet& lambda) {
    return StructureVector(lambda, RationalVector(lambda.size(), Rational(1)));
  }

  const IndexSet& lambda() const noexcept { return lambda_; }
  const RationalVector& values() const noexcept { return values_; }
  const Rational& operator[](std::size_t p) const { return values_[p]; }
  std::size_t size() const noexcept { return values_.size(); }

  StructureVector with_value(std::size_t p, Rational v) const {
    RationalVector vals = values_;
    vals[p] = std::move(v);
    return StructureVector(lambda_, std::move(vals));
  }

  friend bool operator==(const StructureVector&, const StructureVector&) = default;

 private:
  IndexSet lambda_;
  RationalVector values_;
};

/// Z/2 vector recording negative entries.
using SignVector = BitVector;

inline SignVector sign_vector(const StructureVector& a) {
  SignVector s(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) s.set(p, a[p] < 0);
  return s;
}

/// s . x : negate the coordinates where s is set.
inline RationalVector apply_signs(const SignVector& s, RationalVector x) {
  if (s.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "sign mask length differs from vector");
  for (std::size_t p = 0; p < x.size(); ++p)
    if (s.get(p)) x[p] = -x[p];
  return x;
}

inline void require_same_lambda(const IndexSet& a, const IndexSet& b) {
  if (!(a == b)) throw Error(ErrorCode::DimensionMismatch, "index sets differ: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace liestrata
