#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <numeric>
#include <string>
#include <vector>

#include "liestrata/bitvector.hpp"
#include "liestrata/core_types.hpp"
#include "liestrata/error.hpp"
#include "liestrata/rational.hpp"

namespace liestrata {

using IntVector = std::vector<long long>;

/// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  long long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  long long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
  }
  IntVector column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<IntVector> row_vectors() const {
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }
  std::vector<IntVector> column_vectors() const {
    std::vector<IntVector> out;
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<long long> data_;
};

/// Dense matrix over Z/2 with packed rows.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector column(std::size_t c) const {
    BitVector v(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) v.set(r, rows_[r].get(c));
    return v;
  }

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Primitive integer basis vectors of a kernel, canonical for the subspace.
using KernelBasis = std::vector<IntVector>;

// ---------------------------------------------------------------------------
// Rational elimination

/// Reduced row echelon form over Q of a list of row vectors.
struct Echelon {
  std::vector<RationalVector> rows;  // nonzero rows, pivot entry 1
  std::vector<std::size_t> pivots;   // pivot column of each row, ascending
  std::size_t width = 0;

  std::size_t rank() const noexcept { return pivots.size(); }

  /// v minus its projection onto the row span along pivot coordinates.
  RationalVector reduce(RationalVector v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational f = v[pivots[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < width; ++c)
        if (rows[r][c] != 0) v[c] -= f * rows[r][c];
    }
    return v;
  }
};

inline Echelon rref(std::vector<RationalVector> rows, std::size_t width) {
  Echelon e;
  e.width = width;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < width && lead < rows.size(); ++col) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[lead]);
    const Rational inv = 1 / rows[lead][col];
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c < width; ++c)
        if (rows[lead][c] != 0) rows[r][c] -= f * rows[lead][c];
    }
    e.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  e.rows = std::move(rows);
  return e;
}

inline RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline std::vector<RationalVector> to_rational(const std::vector<IntVector>& vs) {
  std::vector<RationalVector> out;
  for (const auto& v : vs) out.push_back(to_rational(v));
  return out;
}

/// Scales a rational vector to a primitive integer vector whose first nonzero entry is positive.
inline IntVector primitive_integer(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  IntVector out(v.size(), 0);
  if (g == 0) return out;
  int first_sign = 0;
  for (const auto& z : ints)
    if (z != 0) {
      first_sign = sgn(z);
      break;
    }
  for (std::size_t i = 0; i < ints.size(); ++i) {
    Integer z = ints[i] / g;
    if (first_sign < 0) z = -z;
    if (!z.fits_slong_p()) throw Error(ErrorCode::DimensionMismatch, "kernel entry exceeds 64-bit range");
    out[i] = z.get_si();
  }
  return out;
}

namespace detail {

// Fraction-free Bareiss elimination in 128-bit arithmetic; nullopt on overflow.
inline std::optional<std::size_t> bareiss_rank(std::vector<IntVector> a, std::size_t width) {
  using wide = __int128;
  constexpr wide lim = static_cast<wide>(std::numeric_limits<long long>::max());
  std::size_t r = 0;
  long long prev = 1;
  for (std::size_t c = 0; c < width && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        const wide v = (static_cast<wide>(a[r][c]) * a[i][j] - static_cast<wide>(a[i][c]) * a[r][j]) / prev;
        if (v > lim || v < -lim) return std::nullopt;
        a[i][j] = static_cast<long long>(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace detail

inline std::size_t rational_rank(const std::vector<IntVector>& vectors, std::size_t width) {
  if (auto r = detail::bareiss_rank(vectors, width)) return *r;
  return rref(to_rational(vectors), width).rank();
}

inline std::size_t rank(const IntegerMatrix& y) { return rational_rank(y.row_vectors(), y.cols()); }

/// RREF-derived primitive integer basis of span(vectors).
inline KernelBasis canonical_span_basis(const std::vector<IntVector>& vectors, std::size_t width) {
  KernelBasis out;
  for (const auto& row : rref(to_rational(vectors), width).rows) out.push_back(primitive_integer(row));
  return out;
}

inline bool same_span(const std::vector<IntVector>& a, const std::vector<IntVector>& b, std::size_t width) {
  const std::size_t ra = rational_rank(a, width);
  if (ra != rational_rank(b, width)) return false;
  std::vector<IntVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rational_rank(both, width) == ra;
}

inline bool in_span(const std::vector<IntVector>& basis, const IntVector& v, std::size_t width) {
  std::vector<IntVector> ext = basis;
  ext.push_back(v);
  return rational_rank(ext, width) == rational_rank(basis, width);
}

inline long long dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Root vectors and matrices

/// e_i + e_j - e_k in Z^n (coinciding indices summed).
inline IntVector root_vector(const Triple& t, int n) {
  if (t.i < 1 || t.j < 1 || t.k < 1 || t.i > n || t.j > n || t.k > n)
    throw Error(ErrorCode::IndexOutOfRange, t.to_string() + " not in [" + std::to_string(n) + "]");
  IntVector y(static_cast<std::size_t>(n), 0);
  y[static_cast<std::size_t>(t.i - 1)] += 1;
  y[static_cast<std::size_t>(t.j - 1)] += 1;
  y[static_cast<std::size_t>(t.k - 1)] -= 1;
  return y;
}

/// Rows are the root vectors of the triples of lambda in dictionary order.
inline IntegerMatrix root_matrix(const IndexSet& lambda) {
  const auto n = static_cast<std::size_t>(lambda.n());
  IntegerMatrix y(lambda.size(), n);
  for (std::size_t p = 0; p < lambda.size(); ++p) {
    const auto v = root_vector(lambda[p], lambda.n());
    for (std::size_t c = 0; c < n; ++c) y(p, c) = v[c];
  }
  return y;
}

inline GF2Matrix gf2_reduce(const IntegerMatrix& y) {
  GF2Matrix m(y.rows(), y.cols());
  for (std::size_t r = 0; r < y.rows(); ++r)
    for (std::size_t c = 0; c < y.cols(); ++c) m.set(r, c, (y(r, c) & 1) != 0);
  return m;
}

inline GF2Matrix gf2_root_matrix(const IndexSet& lambda) { return gf2_reduce(root_matrix(lambda)); }

// ---------------------------------------------------------------------------
// Kernels and column spaces over Q

/// Primitive integer basis of {w : Y^T w = 0}, one vector per free column of rref(Y^T).
inline KernelBasis left_null_basis(const IntegerMatrix& y) {
  const std::size_t m = y.rows();
  const Echelon e = rref(to_rational(y.column_vectors()), m);
  std::vector<bool> is_pivot(m, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  KernelBasis basis;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(primitive_integer(v));
  }
  // normalize so the free coordinate is positive
  for (std::size_t b = 0, f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    if (basis[b][f] < 0)
      for (auto& x : basis[b]) x = -x;
    ++b;
  }
  return basis;
}

/// v in Col(Y) iff v is orthogonal to Null(Y^T).
inline bool in_column_space(const IntegerMatrix& y, const RationalVector& v) {
  if (v.size() != y.rows())
    throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()) + " but Y has " +
                                                  std::to_string(y.rows()) + " rows");
  for (const auto& w : left_null_basis(y)) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (w[i]) s += v[i] * static_cast<long>(w[i]);
    if (s != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// GF(2)

/// Span over Z/2 kept in fully reduced echelon form.
class Gf2Span {
 public:
  explicit Gf2Span(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<BitVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// The unique element of v + span vanishing at every pivot coordinate.
  BitVector reduce(BitVector v) const {
    for (std::size_t b = 0; b < basis_.size(); ++b)
      if (v.get(pivots_[b])) v ^= basis_[b];
    return v;
  }

  bool contains(const BitVector& v) const { return reduce(v).none(); }

  /// Returns true when v enlarged the span.
  bool insert(BitVector v) {
    if (v.size() != width_) throw Error(ErrorCode::DimensionMismatch, "GF(2) vector width mismatch");
    v = reduce(std::move(v));
    if (v.none()) return false;
    const std::size_t p = v.first_set();
    for (auto& b : basis_)
      if (b.get(p)) b ^= v;
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    basis_.insert(basis_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
    return true;
  }

 private:
  std::size_t width_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

inline Gf2Span gf2_column_span(const GF2Matrix& m) {
  Gf2Span span(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) span.insert(m.column(c));
  return span;
}

inline std::size_t gf2_rank(const GF2Matrix& m) {
  Gf2Span span(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) span.insert(m.row(r));
  return span.rank();
}

inline bool gf2_column_space_contains(const GF2Matrix& m, const BitVector& v) {
  if (v.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()) + " but matrix has " +
                                                  std::to_string(m.rows()) + " rows");
  return gf2_column_span(m).contains(v);
}

/// One vector per coset of Col(M) in Z/2^m: all vectors supported on the non-pivot
/// coordinates of the reduced column space, in lexicographic order.
inline std::vector<BitVector> gf2_coset_transversal(const GF2Matrix& m) {
  const Gf2Span span = gf2_column_span(m);
  std::vector<bool> is_pivot(m.rows(), false);
  for (auto p : span.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!is_pivot[r]) free.push_back(r);
  if (free.size() > 24) throw Error(ErrorCode::CapExceeded, "transversal would have 2^" + std::to_string(free.size()) + " elements");
  std::vector<BitVector> out;
  const std::size_t count = std::size_t{1} << free.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    BitVector v(m.rows());
    // last free coordinate is the least significant bit, giving lexicographic order
    for (std::size_t b = 0; b < free.size(); ++b)
      if ((mask >> b) & 1u) v.set(free[free.size() - 1 - b], true);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace liestrata
