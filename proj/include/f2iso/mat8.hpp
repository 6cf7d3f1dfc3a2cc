// Matrices of dimension at most 8 over F2 packed into a single word, one
// row per byte.  Used by the exhaustive sweeps, where the general BitMatrix
// would spend its time allocating.

#pragma once

#include "f2iso/bitmatrix.hpp"

namespace f2iso {

struct Mat8 {
  std::uint64_t bits = 0;
  int n = 0;

  static Mat8 identity(int n) {
    Mat8 m{0, n};
    for (int i = 0; i < n; ++i) m.bits |= std::uint64_t{1} << (9 * i);
    return m;
  }

  static Mat8 from(const BitMatrix& b) {
    if (!b.is_square() || b.rows() > 8)
      throw std::invalid_argument("Mat8 holds square matrices of dim <= 8");
    Mat8 m{0, b.rows()};
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j)
        if (b.get(i, j)) m.bits |= std::uint64_t{1} << (8 * i + j);
    return m;
  }

  BitMatrix to_bitmatrix() const {
    BitMatrix b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (get(i, j)) b.set(i, j, true);
    return b;
  }

  std::uint8_t row(int i) const {
    return static_cast<std::uint8_t>(bits >> (8 * i));
  }

  bool get(int i, int j) const { return (bits >> (8 * i + j)) & 1; }

  Mat8 transposed() const {
    Mat8 t{0, n};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (get(i, j)) t.bits |= std::uint64_t{1} << (8 * j + i);
    return t;
  }

  bool operator==(const Mat8&) const = default;
};

inline Mat8 multiply(const Mat8& a, const Mat8& b) {
  Mat8 r{0, a.n};
  for (int i = 0; i < a.n; ++i) {
    std::uint64_t acc = 0;
    std::uint8_t ar = a.row(i);
    while (ar) {
      int j = std::countr_zero(static_cast<unsigned>(ar));
      ar &= static_cast<std::uint8_t>(ar - 1);
      acc ^= b.row(j);
    }
    r.bits |= acc << (8 * i);
  }
  return r;
}

inline Mat8 conjugate(const Mat8& p, const Mat8& s, const Mat8& p_inv) {
  return multiply(multiply(p, s), p_inv);
}

}  // namespace f2iso

template <>
struct std::hash<f2iso::Mat8> {
  std::size_t operator()(const f2iso::Mat8& m) const {
    return std::hash<std::uint64_t>{}(m.bits * 31 + static_cast<unsigned>(m.n));
  }
};
