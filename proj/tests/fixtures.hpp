#pragma once

#include "liestrata/liestrata.hpp"

namespace fixtures {

using liestrata::IndexSet;

inline IndexSet l4() { return IndexSet::validate({{1, 2, 3}, {1, 3, 4}}, 4); }
inline IndexSet h5() { return IndexSet::validate({{1, 2, 5}, {3, 4, 5}}, 5); }
inline IndexSet qm2() { return IndexSet::validate({{1, 2, 4}, {1, 3, 5}, {1, 5, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}}, 7); }
inline IndexSet qm3() {
  return IndexSet::validate({{1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 6, 7}, {2, 3, 6}, {2, 5, 7}, {3, 4, 7}}, 7);
}
inline IndexSet example1() {
  return IndexSet::validate(
      {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 7}, {2, 3, 5}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}}, 7);
}
inline IndexSet qm2b() {
  return IndexSet::validate({{1, 3, 4}, {1, 4, 6}, {1, 6, 7}, {1, 7, 8}, {2, 3, 6}, {2, 4, 7}, {2, 6, 8}, {3, 5, 8}}, 8);
}
inline IndexSet non_spanning() {
  return IndexSet::validate(
      {{1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 7}, {1, 7, 8}, {2, 3, 6}, {2, 4, 7}, {2, 6, 8}, {3, 5, 8}}, 8);
}

// displayed centers and directions
inline liestrata::RationalVector qm3_center() { return {1, 2, 1, 1, 1, 2, 1}; }
inline std::vector<liestrata::IntVector> qm3_directions() { return {{0, 1, 0, -1, -1, 1, 0}, {1, 0, 0, -1, -1, 0, 1}}; }
inline liestrata::RationalVector example1_center() { return {1, 1, 1, 1, 1, 2, 2, 1, 1}; }
inline std::vector<liestrata::IntVector> example1_directions() {
  return {{0, -1, 0, 1, 0, 1, -1, 0, 0}, {-1, 0, 1, 0, 0, 0, 0, 1, -1}, {-1, 0, 0, 0, 1, 0, 1, 0, -1}};
}

inline liestrata::RationalVector ones(std::size_t m) { return liestrata::RationalVector(m, liestrata::Rational(1)); }

}  // namespace fixtures
