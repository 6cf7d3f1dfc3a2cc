// Frozen expected values for the verification suites.

#pragma once

#include <set>
#include <vector>

#include "f2iso/classify.hpp"

namespace f2iso::verify {

// The 11 DD-invariants of the involution classes of TO(6), one row per
// family: (a) with mirrors, (b) with mirrors, (c).
inline const std::vector<DDInvariant>& to6_dd_table() {
  static const std::vector<DDInvariant> table = {
      {1, 1, 2, 1}, {2, 1, 1, 1}, {2, 1, 3, 1}, {3, 1, 2, 1},
      {1, 0, 0, 1}, {0, 1, 1, 0}, {2, 0, 2, 1}, {2, 1, 2, 0},
      {3, 0, 2, 1}, {2, 1, 3, 0},
      {3, 1, 3, 1},
  };
  return table;
}

struct To8Row {
  DDInvariant dd;
  std::array<long long, 8> profile;  // I1..I8
};

// The I-profile values on the 16 involution classes of TO(8).
inline const std::vector<To8Row>& to8_table() {
  static const std::vector<To8Row> table = {
      {{0, 1, 1, 0}, {128, 0, 0, 0, 128, 0, 0, 0}},
      {{1, 0, 0, 1}, {128, 0, 0, 128, 0, 0, 0, 128}},
      {{1, 1, 2, 1}, {64, 0, 64, 64, 64, 0, 0, 0}},
      {{2, 1, 1, 1}, {64, 0, 64, 64, 0, 64, 0, 64}},
      {{2, 0, 2, 1}, {64, 64, 0, 128, 0, 0, 64, 0}},
      {{2, 1, 2, 0}, {64, 64, 0, 0, 0, 128, 64, 0}},
      {{2, 1, 3, 0}, {32, 96, 0, 0, 32, 96, 0, 0}},
      {{3, 0, 2, 1}, {32, 96, 0, 128, 0, 0, 0, 32}},
      {{2, 1, 3, 1}, {32, 32, 64, 64, 32, 32, 0, 0}},
      {{3, 1, 2, 1}, {32, 32, 64, 64, 0, 64, 0, 32}},
      {{3, 1, 3, 1}, {32, 32, 64, 64, 0, 64, 32, 0}},
      {{3, 1, 4, 1}, {16, 48, 64, 64, 16, 48, 0, 0}},
      {{4, 1, 3, 1}, {16, 48, 64, 64, 0, 64, 0, 16}},
      {{4, 0, 4, 1}, {16, 112, 0, 128, 0, 0, 16, 0}},
      {{4, 1, 4, 0}, {16, 112, 0, 0, 0, 128, 16, 0}},
      {{4, 1, 4, 1}, {16, 48, 64, 64, 0, 64, 16, 0}},
  };
  return table;
}

// The matrix shown alongside its mirror in the dimension-6 discussion; a
// handy nontrivial involution of TO(6) with DD = [3,1,3,1].
inline BitMatrix sample_to6_involution() {
  return BitMatrix::from_rows({
      "001110",
      "000001",
      "101100",
      "101010",
      "100110",
      "010000",
  });
}

}  // namespace f2iso::verify
