// Nondegenerate symmetric bilinear spaces over F2.
//
// Every such space is isomorphic to either a sum of hyperbolic planes
// (symplectic) or to F2^n with the dot product (orthogonal).  The three
// resulting classification types are spelled SYMP, EVO (even-dimensional
// orthogonal) and ODDO (odd-dimensional orthogonal).

#pragma once

#include <string>
#include <utility>

#include "f2iso/bitmatrix.hpp"

namespace f2iso {

enum class SpaceType { Symp, Evo, Oddo };

inline const char* to_string(SpaceType t) {
  switch (t) {
    case SpaceType::Symp: return "symp";
    case SpaceType::Evo: return "evo";
    case SpaceType::Oddo: return "oddo";
  }
  return "?";
}

inline SpaceType parse_space_type(std::string_view s) {
  if (s == "symp") return SpaceType::Symp;
  if (s == "evo") return SpaceType::Evo;
  if (s == "oddo") return SpaceType::Oddo;
  throw std::invalid_argument("unknown space type '" + std::string(s) +
                              "' (expected symp|evo|oddo)");
}

// Since b(v,v) is linear over F2, the diagonal of the Gram matrix is the
// coefficient vector of the norm form v -> b(v,v).
inline BitVector gram_diagonal(const BitMatrix& gram) { return diagonal(gram); }

// Basis of the hyperplane orthogonal to the distinguished vector:
// b(v, Omega) = v . diag(G).
inline std::vector<BitVector> omega_perp_basis(const BitMatrix& gram) {
  BitMatrix pairing_row(1, gram.cols());
  pairing_row.set_row(0, diagonal(gram));
  return kernel_basis(pairing_row);
}

// A dimension, a symmetric invertible Gram matrix, and two cached values:
// the distinguished vector Omega (the unique vector with b(Omega,v)=b(v,v)
// for all v) and the classification type.
class BilinearSpace {
 public:
  static BilinearSpace from_gram(BitMatrix gram) {
    if (!gram.is_square())
      throw std::invalid_argument("Gram matrix must be square");
    if (gram != transpose(gram))
      throw std::invalid_argument("Gram matrix must be symmetric");
    BitVector diag = gram_diagonal(gram);
    // G*Omega = diag(G), solvable iff G is invertible.
    auto omega = solve(gram, diag);
    if (!omega || rank(gram) != gram.rows())
      throw std::invalid_argument("Gram matrix is degenerate");
    SpaceType t;
    if (omega->is_zero())
      t = SpaceType::Symp;
    else if (omega->dot(diag))  // b(Omega,Omega) = Omega . diag(G)
      t = SpaceType::Oddo;
    else
      t = SpaceType::Evo;
    return BilinearSpace(gram.rows(), std::move(gram), std::move(*omega), t);
  }

  int dim() const { return dim_; }
  const BitMatrix& gram() const { return gram_; }
  const BitVector& omega() const { return omega_; }
  SpaceType type() const { return type_; }

  bool bilinear(const BitVector& v, const BitVector& w) const {
    return v.dot(multiply(gram_, w));
  }

  // b(v,v), evaluated through the diagonal coefficient vector.
  bool norm(const BitVector& v) const { return gram_diagonal(gram_).dot(v); }

  bool operator==(const BilinearSpace& o) const {
    return dim_ == o.dim_ && gram_ == o.gram_;
  }

 private:
  BilinearSpace(int dim, BitMatrix gram, BitVector omega, SpaceType t)
      : dim_(dim), gram_(std::move(gram)), omega_(std::move(omega)), type_(t) {}

  int dim_;
  BitMatrix gram_;
  BitVector omega_;
  SpaceType type_;
};

// Standard models: identity Gram for EVO/ODDO, and for SYMP the block sum
// of hyperbolic planes with basis ordered u1,v1,u2,v2,...
inline BilinearSpace standard_space(SpaceType type, int dim) {
  if (dim < 0 || dim > kMaxDim)
    throw std::invalid_argument("dimension out of range");
  switch (type) {
    case SpaceType::Symp:
      if (dim % 2 != 0)
        throw std::invalid_argument("symplectic spaces have even dimension");
      break;
    case SpaceType::Evo:
      if (dim % 2 != 0 || dim < 2)
        throw std::invalid_argument(
            "even orthogonal spaces have even dimension >= 2");
      break;
    case SpaceType::Oddo:
      if (dim % 2 != 1)
        throw std::invalid_argument("odd orthogonal spaces have odd dimension");
      break;
  }
  BitMatrix gram(dim, dim);
  if (type == SpaceType::Symp) {
    for (int i = 0; i + 1 < dim; i += 2) {
      gram.set(i, i + 1, true);
      gram.set(i + 1, i, true);
    }
  } else {
    gram = BitMatrix::identity(dim);
  }
  return BilinearSpace::from_gram(std::move(gram));
}

inline BitMatrix standard_gram(SpaceType type, int dim) {
  return standard_space(type, dim).gram();
}

struct Standardization {
  SpaceType type;
  BitMatrix basis;  // columns: U with U^T * gram * U = standard_gram(type)
};

// Constructive classification.  Peels off orthonormal vectors while any
// basis vector of the current complement has b(x,x)=1, then hyperbolic
// pairs, and finally rewrites each trailing <1> (+) H block as 3<1> using
// the basis x+y, x+z, x+y+z.
inline Standardization classify_and_standardize(const BitMatrix& gram) {
  BilinearSpace probe = BilinearSpace::from_gram(gram);  // validates input
  int n = gram.rows();
  auto pairing = [&](const BitVector& v, const BitVector& w) {
    return probe.bilinear(v, w);
  };

  std::vector<BitVector> current;
  current.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) current.push_back(BitVector::unit(n, i));

  std::vector<BitVector> ortho;
  std::vector<std::pair<BitVector, BitVector>> pairs;

  while (!current.empty()) {
    int oi = -1;
    for (std::size_t i = 0; i < current.size(); ++i)
      if (pairing(current[i], current[i])) {
        oi = static_cast<int>(i);
        break;
      }
    if (oi >= 0) {
      BitVector v = current[static_cast<std::size_t>(oi)];
      std::vector<BitVector> next;
      next.reserve(current.size() - 1);
      for (std::size_t j = 0; j < current.size(); ++j) {
        if (static_cast<int>(j) == oi) continue;
        BitVector c = current[j];
        if (pairing(c, v)) c ^= v;
        next.push_back(std::move(c));
      }
      ortho.push_back(std::move(v));
      current = std::move(next);
      continue;
    }
    // No vector of norm 1 remains: the rest is symplectic.
    BitVector x = current[0];
    int yi = -1;
    for (std::size_t j = 1; j < current.size(); ++j)
      if (pairing(x, current[j])) {
        yi = static_cast<int>(j);
        break;
      }
    if (yi < 0)
      throw std::logic_error("nondegeneracy lost during standardization");
    BitVector y = current[static_cast<std::size_t>(yi)];
    std::vector<BitVector> next;
    next.reserve(current.size() - 2);
    for (std::size_t j = 1; j < current.size(); ++j) {
      if (static_cast<int>(j) == yi) continue;
      BitVector c = current[j];
      if (pairing(c, y)) c ^= x;
      if (pairing(c, x)) c ^= y;
      next.push_back(std::move(c));
    }
    pairs.emplace_back(std::move(x), std::move(y));
    current = std::move(next);
  }

  SpaceType type;
  std::vector<BitVector> basis;
  if (ortho.empty()) {
    type = SpaceType::Symp;
    for (auto& [x, y] : pairs) {
      basis.push_back(x);
      basis.push_back(y);
    }
  } else {
    // <1> (+) H == 3<1>: consume one orthonormal vector per pair.
    for (auto& [x, y] : pairs) {
      BitVector o = ortho.back();
      ortho.pop_back();
      ortho.push_back(o ^ x);
      ortho.push_back(o ^ y);
      ortho.push_back(o ^ x ^ y);
    }
    basis = std::move(ortho);
    type = (n % 2 == 0) ? SpaceType::Evo : SpaceType::Oddo;
  }

  BitMatrix u(n, n);
  for (int j = 0; j < n; ++j) u.set_column(j, basis[static_cast<std::size_t>(j)]);
  BitMatrix check = multiply(multiply(transpose(u), gram), u);
  if (check != standard_gram(type, n))
    throw std::logic_error("standardization produced a non-standard Gram");
  return Standardization{type, std::move(u)};
}

// Semi-norm on a symplectic space in the standard basis u1,v1,...:
// q(v) = sum_i v[2i] v[2i+1], optionally plus a linear form.  Any two
// semi-norms for the same form differ by a linear form, so this family is
// exhaustive.
class SemiNorm {
 public:
  explicit SemiNorm(BilinearSpace space)
      : SemiNorm(std::move(space), BitVector()) {}

  SemiNorm(BilinearSpace space, BitVector linear_offset)
      : space_(std::move(space)) {
    if (space_.type() != SpaceType::Symp ||
        space_.gram() != standard_gram(SpaceType::Symp, space_.dim()))
      throw std::invalid_argument(
          "semi-norms are represented on standard-basis symplectic spaces "
          "only; standardize first");
    if (linear_offset.size() == 0) linear_offset = BitVector(space_.dim());
    if (linear_offset.size() != space_.dim())
      throw std::invalid_argument("linear offset length mismatch");
    offset_ = std::move(linear_offset);
  }

  bool eval(const BitVector& v) const {
    if (v.size() != space_.dim())
      throw std::invalid_argument("vector length mismatch in semi-norm");
    bool q = false;
    for (int i = 0; i + 1 < space_.dim(); i += 2)
      q ^= v.get(i) && v.get(i + 1);
    return q ^ offset_.dot(v);
  }

  const BilinearSpace& space() const { return space_; }
  const BitVector& offset() const { return offset_; }

 private:
  BilinearSpace space_;
  BitVector offset_;
};

inline SemiNorm semi_norm_standard(const BilinearSpace& space) {
  return SemiNorm(space);
}

}  // namespace f2iso
