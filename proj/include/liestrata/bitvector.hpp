#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "liestrata/error.hpp"

namespace liestrata {

/// Fixed-length vector over Z/2, packed 64 coordinates per word.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index, true);
    return v;
  }

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Lowest set coordinate, or size() when zero.
  std::size_t first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  BitVector& operator^=(const BitVector& other) {
    if (other.size_ != size_) throw Error(ErrorCode::DimensionMismatch, "bit vector lengths differ");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Lexicographic order with coordinate 0 most significant.
  friend bool operator<(const BitVector& a, const BitVector& b) {
    for (std::size_t i = 0; i < a.size_ && i < b.size_; ++i)
      if (a.get(i) != b.get(i)) return !a.get(i);
    return a.size_ < b.size_;
  }

  std::vector<int> to_ints() const {
    std::vector<int> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size_; ++i) {
      if (i) s += ",";
      s += get(i) ? '1' : '0';
    }
    return s + ")";
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace liestrata
