#pragma once

#include <string>
#include <vector>

#include "liestrata/core_types.hpp"
#include "liestrata/error.hpp"
#include "liestrata/exact_linalg.hpp"
#include "liestrata/rational.hpp"

namespace liestrata {

/// g = diag(c_1, ..., c_n), every c_i nonzero.
class DiagonalElement {
 public:
  explicit DiagonalElement(RationalVector c) : c_(std::move(c)) {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] == 0) throw Error(ErrorCode::ZeroEntry, "diagonal entry " + std::to_string(i + 1) + " is zero");
  }
  static DiagonalElement identity(int n) { return DiagonalElement(RationalVector(static_cast<std::size_t>(n), Rational(1))); }

  const RationalVector& entries() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

 private:
  RationalVector c_;
};

/// beta_t = c_k / (c_i c_j) * alpha_t.
inline StructureVector apply_diagonal(const DiagonalElement& g, const StructureVector& a) {
  const auto& lambda = a.lambda();
  if (g.size() != static_cast<std::size_t>(lambda.n()))
    throw Error(ErrorCode::DimensionMismatch, "diagonal element of size " + std::to_string(g.size()) +
                                                  " for dimension " + std::to_string(lambda.n()));
  RationalVector out(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) {
    const auto& t = lambda[p];
    out[p] = g[static_cast<std::size_t>(t.k - 1)] /
             (g[static_cast<std::size_t>(t.i - 1)] * g[static_cast<std::size_t>(t.j - 1)]) * a[p];
  }
  return StructureVector(lambda, std::move(out));
}

inline void require_same_index_set(const StructureVector& a, const StructureVector& b) {
  if (!(a.lambda() == b.lambda()))
    throw Error(ErrorCode::DimensionMismatch, "structure vectors are indexed by different index sets");
}

/// prod_t (a_t^2 / b_t^2)^{w_t} = 1 for every w of the given kernel basis.
inline bool magnitude_orbit_equivalent(const StructureVector& a, const StructureVector& b, const KernelBasis& kernel) {
  require_same_index_set(a, b);
  for (const auto& w : kernel) {
    if (w.size() != a.size()) throw Error(ErrorCode::DimensionMismatch, "kernel vector length mismatch");
    Rational prod = 1;
    for (std::size_t t = 0; t < w.size(); ++t)
      if (w[t] != 0) {
        const Rational ratio = a[t] * a[t] / (b[t] * b[t]);
        prod *= pow(ratio, w[t]);
      }
    if (prod != 1) return false;
  }
  return true;
}

inline bool magnitude_orbit_equivalent(const StructureVector& a, const StructureVector& b) {
  require_same_index_set(a, b);
  return magnitude_orbit_equivalent(a, b, left_null_basis(root_matrix(a.lambda())));
}

/// sgn(a) + sgn(b) in Col(Y-hat).
inline bool sign_orbit_equivalent(const StructureVector& a, const StructureVector& b) {
  require_same_index_set(a, b);
  return gf2_column_space_contains(gf2_root_matrix(a.lambda()), sign_vector(a) ^ sign_vector(b));
}

inline bool d_orbit_equivalent(const StructureVector& a, const StructureVector& b) {
  return magnitude_orbit_equivalent(a, b) && sign_orbit_equivalent(a, b);
}

inline constexpr const char* kOrbitCaveat = "assumes-D-orbit-classes";

struct OrbitVerdict {
  bool magnitude = false;
  bool sign = false;

  bool equivalent() const noexcept { return magnitude && sign; }
  std::string to_string() const {
    if (magnitude && sign) return "equivalent";
    if (!magnitude && !sign) return "distinct (both)";
    return magnitude ? "distinct (sign)" : "distinct (magnitude)";
  }
  const char* caveat() const noexcept { return kOrbitCaveat; }
};

inline OrbitVerdict orbit_verdict(const StructureVector& a, const StructureVector& b) {
  return OrbitVerdict{magnitude_orbit_equivalent(a, b), sign_orbit_equivalent(a, b)};
}

}  // namespace liestrata
