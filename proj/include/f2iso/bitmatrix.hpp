// Bit-packed vectors and matrices over the two-element field.
//
// Coordinates are stored LSB-first: coordinate i of a vector lives at bit
// (i mod 64) of word (i / 64).  Bits at positions >= length are kept zero
// so that equality and hashing work on the raw words.

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace f2iso {

// Guard for the packing arithmetic; far beyond any dimension this library
// is used at in practice.
inline constexpr int kMaxDim = 4096;

namespace detail {

inline int words_for(int bits) { return (bits + 63) / 64; }

inline std::uint64_t tail_mask(int bits) {
  int r = bits % 64;
  return r == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
}

[[noreturn]] inline void shape_error(const std::string& msg) {
  throw std::invalid_argument(msg);
}

inline void check_dim(int d, const char* what) {
  if (d < 0 || d > kMaxDim)
    shape_error(std::string(what) + " out of range [0, 4096]");
}

}  // namespace detail

class BitVector {
 public:
  BitVector() = default;

  explicit BitVector(int length) : len_(length) {
    detail::check_dim(length, "vector length");
    w_.assign(detail::words_for(length), 0);
  }

  // Parses a string of '0'/'1' characters, coordinate i = character i.
  static BitVector from_string(std::string_view bits) {
    BitVector v(static_cast<int>(bits.size()));
    for (int i = 0; i < v.len_; ++i) {
      char c = bits[static_cast<std::size_t>(i)];
      if (c == '1')
        v.set(i, true);
      else if (c != '0')
        detail::shape_error("bit string must contain only '0' and '1'");
    }
    return v;
  }

  static BitVector unit(int length, int index) {
    BitVector v(length);
    v.set(index, true);
    return v;
  }

  int size() const { return len_; }

  bool get(int i) const {
    return (w_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
  }

  void set(int i, bool value) {
    std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (value)
      w_[static_cast<std::size_t>(i) / 64] |= m;
    else
      w_[static_cast<std::size_t>(i) / 64] &= ~m;
  }

  BitVector& operator^=(const BitVector& o) {
    if (o.len_ != len_) detail::shape_error("length mismatch in vector sum");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  // Addition over F2 is XOR.
  friend BitVector operator+(BitVector a, const BitVector& b) { return a ^ b; }

  bool operator==(const BitVector&) const = default;

  // Numeric order of the packed value (coordinate 0 least significant).
  friend bool operator<(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    for (std::size_t k = a.w_.size(); k-- > 0;)
      if (a.w_[k] != b.w_[k]) return a.w_[k] < b.w_[k];
    return false;
  }

  bool is_zero() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  int weight() const {
    int n = 0;
    for (std::uint64_t w : w_) n += std::popcount(w);
    return n;
  }

  // Dot product: popcount of the AND, reduced mod 2.
  bool dot(const BitVector& o) const {
    if (o.len_ != len_) detail::shape_error("length mismatch in dot product");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i = 0; i < len_; ++i)
      if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  std::span<const std::uint64_t> words() const { return w_; }
  std::span<std::uint64_t> words() { return w_; }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(len_);
    for (std::uint64_t w : w_) h = h * 0x9e3779b97f4a7c15ull + w;
    return h;
  }

 private:
  int len_ = 0;
  std::vector<std::uint64_t> w_;
};

// Row-major packed matrix.  Every row obeys the BitVector padding rule.
class BitMatrix {
 public:
  BitMatrix() = default;

  BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    detail::check_dim(rows, "row count");
    detail::check_dim(cols, "column count");
    wpr_ = detail::words_for(cols);
    w_.assign(static_cast<std::size_t>(rows) * wpr_, 0);
  }

  static BitMatrix identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static BitMatrix from_rows(const std::vector<std::string>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    BitMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
        detail::shape_error("rows must all have the same length");
      for (int j = 0; j < c; ++j) {
        char ch = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (ch == '1')
          m.set(i, j, true);
        else if (ch != '0')
          detail::shape_error("matrix rows must contain only '0' and '1'");
      }
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  bool get(int r, int c) const {
    return (w_[idx(r) + static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1u;
  }

  void set(int r, int c, bool value) {
    std::uint64_t m = std::uint64_t{1} << (c % 64);
    if (value)
      w_[idx(r) + static_cast<std::size_t>(c) / 64] |= m;
    else
      w_[idx(r) + static_cast<std::size_t>(c) / 64] &= ~m;
  }

  BitVector row(int r) const {
    BitVector v(cols_);
    auto dst = v.words();
    for (int k = 0; k < wpr_; ++k) dst[static_cast<std::size_t>(k)] = w_[idx(r) + static_cast<std::size_t>(k)];
    return v;
  }

  void set_row(int r, const BitVector& v) {
    if (v.size() != cols_) detail::shape_error("row length mismatch");
    auto src = v.words();
    for (int k = 0; k < wpr_; ++k) w_[idx(r) + static_cast<std::size_t>(k)] = src[static_cast<std::size_t>(k)];
  }

  BitVector column(int c) const {
    BitVector v(rows_);
    for (int i = 0; i < rows_; ++i)
      if (get(i, c)) v.set(i, true);
    return v;
  }

  void set_column(int c, const BitVector& v) {
    if (v.size() != rows_) detail::shape_error("column length mismatch");
    for (int i = 0; i < rows_; ++i) set(i, c, v.get(i));
  }

  void xor_rows(int dst, int src) {
    for (int k = 0; k < wpr_; ++k)
      w_[idx(dst) + static_cast<std::size_t>(k)] ^= w_[idx(src) + static_cast<std::size_t>(k)];
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int k = 0; k < wpr_; ++k)
      std::swap(w_[idx(a) + static_cast<std::size_t>(k)], w_[idx(b) + static_cast<std::size_t>(k)]);
  }

  std::span<const std::uint64_t> row_words(int r) const {
    return {w_.data() + idx(r), static_cast<std::size_t>(wpr_)};
  }

  std::span<std::uint64_t> row_words(int r) {
    return {w_.data() + idx(r), static_cast<std::size_t>(wpr_)};
  }

  bool operator==(const BitMatrix&) const = default;

  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      detail::shape_error("shape mismatch in matrix sum");
    BitMatrix r = a;
    for (std::size_t k = 0; k < r.w_.size(); ++k) r.w_[k] ^= b.w_[k];
    return r;
  }

  // Entrywise complement (respects the padding of the trailing word).
  BitMatrix complemented() const {
    BitMatrix r = *this;
    if (cols_ == 0) return r;
    std::uint64_t tm = detail::tail_mask(cols_);
    for (int i = 0; i < rows_; ++i) {
      auto rw = r.row_words(i);
      for (int k = 0; k < wpr_; ++k) rw[static_cast<std::size_t>(k)] = ~rw[static_cast<std::size_t>(k)];
      rw[static_cast<std::size_t>(wpr_ - 1)] &= tm;
    }
    return r;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(rows_ * 8191 + cols_);
    for (std::uint64_t w : w_) h = h * 0x9e3779b97f4a7c15ull + w;
    return h;
  }

 private:
  std::size_t idx(int r) const { return static_cast<std::size_t>(r) * wpr_; }

  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> w_;
};

// Product over F2: row i of the result is the XOR of the rows of b selected
// by the set bits of row i of a.
inline BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows())
    detail::shape_error("dimension mismatch in matrix product");
  BitMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    auto dst = r.row_words(i);
    auto ar = a.row_words(i);
    for (int wk = 0; wk < static_cast<int>(ar.size()); ++wk) {
      std::uint64_t w = ar[static_cast<std::size_t>(wk)];
      while (w) {
        int j = wk * 64 + std::countr_zero(w);
        w &= w - 1;
        auto br = b.row_words(j);
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= br[k];
      }
    }
  }
  return r;
}

inline BitVector multiply(const BitMatrix& a, const BitVector& v) {
  if (a.cols() != v.size())
    detail::shape_error("dimension mismatch in matrix-vector product");
  BitVector r(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    auto ar = a.row_words(i);
    auto vw = v.words();
    for (std::size_t k = 0; k < ar.size(); ++k) acc ^= ar[k] & vw[k];
    if (std::popcount(acc) & 1) r.set(i, true);
  }
  return r;
}

// The diagonal of a square matrix, as a vector.
inline BitVector diagonal(const BitMatrix& m) {
  if (!m.is_square()) detail::shape_error("diagonal requires a square matrix");
  BitVector d(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    if (m.get(i, i)) d.set(i, true);
  return d;
}

inline BitMatrix transpose(const BitMatrix& m) {
  BitMatrix r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.get(i, j)) r.set(j, i, true);
  return r;
}

namespace detail {

// In-place reduced row echelon form; pivot is always the lowest-index
// nonzero column, eliminating both downward and upward.  Returns the pivot
// columns (their count is the rank).
inline std::vector<int> rref_in_place(BitMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.get(i, c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(p, r);
    for (int i = 0; i < m.rows(); ++i)
      if (i != r && m.get(i, c)) m.xor_rows(i, r);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

// Row rank over F2.  Operates on a copy; the input is never mutated.
inline int rank(const BitMatrix& m) {
  BitMatrix work = m;
  return static_cast<int>(detail::rref_in_place(work).size());
}

inline std::optional<BitMatrix> inverse(const BitMatrix& m) {
  if (!m.is_square()) detail::shape_error("inverse requires a square matrix");
  int n = m.rows();
  BitMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (m.get(i, j)) aug.set(i, j, true);
    aug.set(i, n + i, true);
  }
  auto pivots = detail::rref_in_place(aug);
  // Singular input shows up as a pivot escaping into the augmented half.
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() >= n))
    return std::nullopt;
  BitMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (aug.get(i, n + j)) inv.set(i, j, true);
  return inv;
}

// Basis of the right null space { x : Mx = 0 }.
inline std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  BitMatrix work = m;
  auto pivots = detail::rref_in_place(work);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<BitVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    BitVector x(m.cols());
    x.set(f, true);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (work.get(static_cast<int>(r), f)) x.set(pivots[r], true);
    basis.push_back(std::move(x));
  }
  return basis;
}

// All solutions of Mx = b, described as particular + span(kernel).
struct AffineSolution {
  BitVector particular;
  std::vector<BitVector> kernel;
};

inline std::optional<AffineSolution> solve_affine(const BitMatrix& m,
                                                  const BitVector& b) {
  if (b.size() != m.rows())
    detail::shape_error("right-hand side length mismatch");
  int n = m.cols();
  BitMatrix aug(m.rows(), n + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < n; ++j)
      if (m.get(i, j)) aug.set(i, j, true);
    if (b.get(i)) aug.set(i, n, true);
  }
  auto pivots = detail::rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1
  AffineSolution sol;
  sol.particular = BitVector(n);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (aug.get(static_cast<int>(r), n)) sol.particular.set(pivots[r], true);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    BitVector x(n);
    x.set(f, true);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (aug.get(static_cast<int>(r), f)) x.set(pivots[r], true);
    sol.kernel.push_back(std::move(x));
  }
  return sol;
}

inline std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  auto sol = solve_affine(m, b);
  if (!sol) return std::nullopt;
  return sol->particular;
}

inline BitMatrix block_diag(const std::vector<BitMatrix>& blocks) {
  int r = 0, c = 0;
  for (const BitMatrix& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  BitMatrix m(r, c);
  int ro = 0, co = 0;
  for (const BitMatrix& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j)
        if (b.get(i, j)) m.set(ro + i, co + j, true);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

inline BitMatrix block_diag(const BitMatrix& a, const BitMatrix& b) {
  return block_diag(std::vector<BitMatrix>{a, b});
}

// Text format: one row per line of '0'/'1' characters with no separators.
// Blank lines and lines starting with '#' are ignored; all rows must have
// equal length.
inline BitMatrix parse_matrix(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t");
    rows.push_back(line.substr(start, end - start + 1));
  }
  if (rows.empty()) detail::shape_error("matrix text contains no rows");
  return BitMatrix::from_rows(rows);
}

inline BitMatrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

inline std::string format_matrix(const BitMatrix& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.rows()) * (static_cast<std::size_t>(m.cols()) + 1));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out += m.get(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace f2iso

template <>
struct std::hash<f2iso::BitVector> {
  std::size_t operator()(const f2iso::BitVector& v) const { return v.hash(); }
};

template <>
struct std::hash<f2iso::BitMatrix> {
  std::size_t operator()(const f2iso::BitMatrix& m) const { return m.hash(); }
};
