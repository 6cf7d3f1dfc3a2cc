// Canonical representatives for the conjugacy classes of involutions,
// class counting, the conjugacy decision, and a brute-force conjugator
// search used as an independent oracle.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "f2iso/invariants.hpp"

namespace f2iso {

enum class Family { A, AMirror, B, BMirror, C, SpJ, SpM };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::AMirror: return "A-mirror";
    case Family::B: return "B";
    case Family::BMirror: return "B-mirror";
    case Family::C: return "C";
    case Family::SpJ: return "SP-J";
    case Family::SpM: return "SP-M";
  }
  return "?";
}

struct ClassDescriptor {
  SpaceType type;
  int dim;
  DDInvariant dd;
  Family family;
  int k;

  bool operator==(const ClassDescriptor&) const = default;
};

namespace detail {

inline BitMatrix j_block() {
  return BitMatrix::from_rows({"01", "10"});
}

// The 4x4 symplectic involution with D = 2, alpha = 0.
inline BitMatrix m_block() {
  return BitMatrix::from_rows({"1011", "0111", "1110", "1101"});
}

inline BitMatrix repeated_blocks(const BitMatrix& b, int count) {
  return block_diag(std::vector<BitMatrix>(static_cast<std::size_t>(count), b));
}

}  // namespace detail

using Representative = std::pair<ClassDescriptor, Involution>;

// One involution per conjugacy class.
//
// EVO, dim 2n: three families (I-blocks first, then J-blocks, with the
// sub-block mirror m(...) meaning the entrywise complement of that block):
//   (a) I^(n-k) (+) J^k,            1 <= k <= n-1,  DD [k,1,k+1,1], plus mirrors
//   (b) m(I^(n-k)) (+) J^k,         0 <= k <= n-1,  DD [k+1,0,k,1] (k even)
//                                                      [k+1,0,k+1,1] (k odd),
//                                                   plus mirrors
//   (c) m(I^(n-k-1) (+) J^k) (+) J, 1 <= k <= n-2,  DD [k+2,1,k+2,1]
// SYMP, dim 2n: J^k (+) I^(n-k) for k = 1..n (D = k, alpha = 1) and
//   M^j (+) I^(n-2j) for j = 0..floor(n/2) (D = 2j, alpha = 0).
// ODDO, dim 2n+1: the SYMP representatives acting on the hyperplane
//   orthogonal to Omega, extended by fixing Omega (built in a basis where
//   Omega is the last coordinate).
inline std::vector<Representative> representatives(SpaceType type, int dim) {
  std::vector<Representative> out;

  if (type == SpaceType::Evo) {
    auto space = std::make_shared<BilinearSpace>(standard_space(type, dim));
    int n = dim / 2;
    const BitMatrix J = detail::j_block();
    auto push = [&](DDInvariant dd, Family fam, int k, BitMatrix m) {
      out.emplace_back(
          ClassDescriptor{type, dim, dd, fam, k},
          Involution(Isometry(space, std::move(m))));
    };
    auto family_a = [&](int k) {
      return block_diag(BitMatrix::identity(2 * (n - k)),
                        detail::repeated_blocks(J, k));
    };
    auto family_b = [&](int k) {
      return block_diag(BitMatrix::identity(2 * (n - k)).complemented(),
                        detail::repeated_blocks(J, k));
    };
    auto dd_b = [](int k) {
      return k % 2 == 0 ? DDInvariant{k + 1, 0, k, 1}
                        : DDInvariant{k + 1, 0, k + 1, 1};
    };
    for (int k = 1; k <= n - 1; ++k)
      push({k, 1, k + 1, 1}, Family::A, k, family_a(k));
    for (int k = 1; k <= n - 1; ++k)
      push(DDInvariant{k, 1, k + 1, 1}.mirrored(), Family::AMirror, k,
           family_a(k).complemented());
    for (int k = 0; k <= n - 1; ++k)
      push(dd_b(k), Family::B, k, family_b(k));
    for (int k = 0; k <= n - 1; ++k)
      push(dd_b(k).mirrored(), Family::BMirror, k,
           family_b(k).complemented());
    for (int k = 1; k <= n - 2; ++k) {
      BitMatrix sub = block_diag(BitMatrix::identity(2 * (n - k - 1)),
                                 detail::repeated_blocks(J, k))
                          .complemented();
      push({k + 2, 1, k + 2, 1}, Family::C, k, block_diag(sub, J));
    }
    return out;
  }

  if (type == SpaceType::Symp) {
    auto space = std::make_shared<BilinearSpace>(standard_space(type, dim));
    int n = dim / 2;
    const BitMatrix J = detail::j_block();
    const BitMatrix M = detail::m_block();
    for (int k = 1; k <= n; ++k) {
      BitMatrix m = block_diag(detail::repeated_blocks(J, k),
                               BitMatrix::identity(2 * (n - k)));
      out.emplace_back(
          ClassDescriptor{type, dim, {k, 1, k, 1}, Family::SpJ, k},
          Involution(Isometry(space, std::move(m))));
    }
    for (int j = 0; j <= n / 2; ++j) {
      BitMatrix m = block_diag(detail::repeated_blocks(M, j),
                               BitMatrix::identity(2 * (n - 2 * j)));
      out.emplace_back(
          ClassDescriptor{type, dim, {2 * j, 0, 2 * j, 0}, Family::SpM, j},
          Involution(Isometry(space, std::move(m))));
    }
    return out;
  }

  // ODDO: conjugate SYMP representatives into the standard orthogonal
  // space through a basis (symplectic basis of the Omega hyperplane, Omega).
  if (dim % 2 != 1)
    throw std::invalid_argument("ODDO requires odd dimension");
  auto space = std::make_shared<BilinearSpace>(standard_space(type, dim));
  auto perp = omega_perp_basis(space->gram());
  int k = static_cast<int>(perp.size());
  BitMatrix w(dim, k);
  for (int j = 0; j < k; ++j) w.set_column(j, perp[static_cast<std::size_t>(j)]);
  BitMatrix gram_p = multiply(multiply(transpose(w), space->gram()), w);
  Standardization std_p = classify_and_standardize(gram_p);
  if (std_p.type != SpaceType::Symp)
    throw std::logic_error("Omega hyperplane of an ODDO space must be symplectic");
  BitMatrix basis(dim, dim);
  BitMatrix symp_cols = multiply(w, std_p.basis);
  for (int j = 0; j < k; ++j) basis.set_column(j, symp_cols.column(j));
  basis.set_column(dim - 1, space->omega());
  auto basis_inv = inverse(basis);
  if (!basis_inv) throw std::logic_error("ODDO basis change is singular");
  for (auto& [desc, rep] : representatives(SpaceType::Symp, dim - 1)) {
    BitMatrix ext = block_diag(rep.matrix(), BitMatrix::identity(1));
    BitMatrix m = multiply(multiply(basis, ext), *basis_inv);
    out.emplace_back(
        ClassDescriptor{type, dim, desc.dd, desc.family, desc.k},
        Involution(Isometry(space, std::move(m))));
  }
  return out;
}

// Number of conjugacy classes of involutions:
//   EVO dim 2n:  5n - 4 for n >= 2.  At dim 2 the group {I, J} is abelian,
//                so there are two classes and the closed form does not
//                apply; enumeration truth is reported.
//   SYMP dim 2n: (3n+2)/2 for n even, (3n+1)/2 for n odd.
//   ODDO:        the SYMP count one dimension down.
inline long long class_count(SpaceType type, int dim) {
  switch (type) {
    case SpaceType::Evo: {
      if (dim % 2 != 0 || dim < 2)
        throw std::invalid_argument("EVO requires even dimension >= 2");
      int n = dim / 2;
      return n == 1 ? 2 : 5LL * n - 4;
    }
    case SpaceType::Symp: {
      if (dim % 2 != 0 || dim < 0)
        throw std::invalid_argument("SYMP requires even dimension");
      int n = dim / 2;
      return n % 2 == 0 ? (3LL * n + 2) / 2 : (3LL * n + 1) / 2;
    }
    case SpaceType::Oddo:
      if (dim % 2 != 1)
        throw std::invalid_argument("ODDO requires odd dimension");
      return class_count(SpaceType::Symp, dim - 1);
  }
  throw std::invalid_argument("unknown space type");
}

// The conjugacy class of an involution, keyed by its DD-invariant (which for
// SYMP/ODDO is the duplicated (D, alpha) pair).
inline ClassDescriptor classify_involution(const Involution& s) {
  DDInvariant dd = dd_invariant(s);
  for (const auto& [desc, rep] : representatives(s.space().type(), s.space().dim()))
    if (desc.dd == dd) return desc;
  throw std::logic_error(
      "no representative matches DD " + dd.compact() +
      "; an invalid involution slipped through validation");
}

inline bool are_conjugate(const Involution& s, const Involution& t) {
  if (!(s.space() == t.space()))
    throw std::invalid_argument("involutions live on different spaces");
  return dd_invariant(s) == dd_invariant(t);
}

// Exhaustive search for P with P s P^-1 = t (equivalently P s = t P),
// in enumeration order.  Independent of the invariant machinery.
inline std::optional<Isometry> find_conjugator(const Involution& s,
                                               const Involution& t,
                                               bool allow_large = false) {
  if (!(s.space() == t.space()))
    throw std::invalid_argument("involutions live on different spaces");
  std::optional<Isometry> found;
  EnumerationOptions opt;
  opt.allow_large = allow_large;
  for_each_isometry_while(
      s.space(),
      [&](const BitMatrix& p) {
        if (multiply(p, s.matrix()) == multiply(t.matrix(), p)) {
          found = Isometry::unchecked(s.iso().space_ptr(), p);
          return false;
        }
        return true;
      },
      opt);
  return found;
}

namespace detail {

// Greedy echelon filter keeping vectors that enlarge the span.
class SpanTracker {
 public:
  bool insert(BitVector v) {
    for (const BitVector& r : rows_) {
      BitVector reduced = v ^ r;
      if (reduced < v) v = std::move(reduced);
    }
    if (v.is_zero()) return false;
    rows_.push_back(std::move(v));
    std::sort(rows_.begin(), rows_.end(),
              [](const BitVector& a, const BitVector& b) { return b < a; });
    return true;
  }

 private:
  std::vector<BitVector> rows_;
};

// Extends `first` to a full symplectic basis u1,v1,u2,v2,... of the space.
inline std::vector<BitVector> symplectic_basis_through(
    const BilinearSpace& space, const BitVector& first) {
  std::vector<BitVector> pending;
  for (int i = 0; i < space.dim(); ++i)
    pending.push_back(BitVector::unit(space.dim(), i));
  std::vector<BitVector> out;
  BitVector x = first;
  bool first_pass = true;  // x is spanned by pending but not drawn from it
  while (true) {
    int yi = -1;
    for (std::size_t j = 0; j < pending.size(); ++j)
      if (space.bilinear(x, pending[j])) {
        yi = static_cast<int>(j);
        break;
      }
    if (yi < 0) throw std::logic_error("no symplectic partner found");
    BitVector y = pending[static_cast<std::size_t>(yi)];
    pending.erase(pending.begin() + yi);
    std::size_t target = first_pass ? pending.size() - 1 : pending.size();
    std::vector<BitVector> next;
    SpanTracker span;
    for (BitVector& c : pending) {
      if (space.bilinear(c, y)) c ^= x;
      if (space.bilinear(c, x)) c ^= y;
      if (next.size() < target && span.insert(c)) next.push_back(c);
    }
    if (next.size() != target)
      throw std::logic_error("projection lost symplectic complement vectors");
    out.push_back(std::move(x));
    out.push_back(std::move(y));
    pending = std::move(next);
    first_pass = false;
    if (pending.empty()) break;
    x = pending.front();
    pending.erase(pending.begin());
  }
  return out;
}

}  // namespace detail

// A symplectic isometry carrying v to w; the symplectic group acts
// transitively on the nonzero vectors.
inline Isometry symplectic_transitive_map(const BilinearSpace& space,
                                          const BitVector& v,
                                          const BitVector& w) {
  if (space.type() != SpaceType::Symp)
    throw std::invalid_argument("transitive map requires a symplectic space");
  if (v.size() != space.dim() || w.size() != space.dim())
    throw std::invalid_argument("vector length mismatch");
  if (v.is_zero() || w.is_zero())
    throw std::invalid_argument("the symplectic group fixes only 0");
  auto bv = detail::symplectic_basis_through(space, v);
  auto bw = detail::symplectic_basis_through(space, w);
  BitMatrix mv(space.dim(), space.dim()), mw(space.dim(), space.dim());
  for (int j = 0; j < space.dim(); ++j) {
    mv.set_column(j, bv[static_cast<std::size_t>(j)]);
    mw.set_column(j, bw[static_cast<std::size_t>(j)]);
  }
  auto mv_inv = inverse(mv);
  if (!mv_inv) throw std::logic_error("symplectic basis is singular");
  Isometry p = Isometry(space, multiply(mw, *mv_inv));
  if (p.apply(v) != w) throw std::logic_error("transitive map misses target");
  return p;
}

}  // namespace f2iso
