// Conjugacy invariants of involutions: the Dickson invariant D, the alpha
// invariant, the double-Dickson 4-tuple DD = [D, alpha, D~, alpha~] (tilded
// values taken on the mirror), the eight vector-counting invariants
// I1..I8, and the charge.

#pragma once

#include <array>
#include <string>

#include "f2iso/isometry.hpp"

namespace f2iso {

struct DDInvariant {
  int D = 0;
  int alpha = 0;
  int Dt = 0;
  int alphat = 0;

  bool operator==(const DDInvariant&) const = default;

  // Digits concatenated, e.g. [2,1,3,0] -> "2130".
  std::string compact() const {
    return std::to_string(D) + std::to_string(alpha) + std::to_string(Dt) +
           std::to_string(alphat);
  }

  DDInvariant mirrored() const { return {Dt, alphat, D, alpha}; }
};

struct IProfile {
  std::array<long long, 8> counts{};

  long long operator[](int j) const {
    return counts[static_cast<std::size_t>(j - 1)];  // 1-based, as in I_j
  }
  bool operator==(const IProfile&) const = default;
};

struct Charge {
  int value = 0;  // -1, 0 or +1
  bool operator==(const Charge&) const = default;
};

// D(sigma) = rank(sigma + Id).  For involutions 0 <= D <= dim/2.
inline int dickson_D(const Involution& s) {
  return rank(s.matrix() + BitMatrix::identity(s.space().dim()));
}

// The coefficient vector of the linear map v -> b(v, sigma v); entry i is
// (G M)_ii.  Its rank (0 or 1) is the alpha invariant on SYMP and EVO
// spaces.  In an orthonormal basis this reduces to "does the matrix have a
// 1 on its diagonal".
inline BitVector alpha_functional(const BilinearSpace& space,
                                  const BitMatrix& m) {
  return diagonal(multiply(space.gram(), m));
}

// Restriction of an ODDO involution to the symplectic hyperplane
// orthogonal to Omega.
inline Involution restrict_to_omega_perp(const Involution& s) {
  const BilinearSpace& sp = s.space();
  if (sp.type() != SpaceType::Oddo)
    throw std::invalid_argument(
        "restriction to the Omega hyperplane requires an ODDO space");
  auto basis = omega_perp_basis(sp.gram());
  int k = static_cast<int>(basis.size());
  BitMatrix w(sp.dim(), k);
  for (int j = 0; j < k; ++j) w.set_column(j, basis[static_cast<std::size_t>(j)]);
  BitMatrix gram_p = multiply(multiply(transpose(w), sp.gram()), w);
  BitMatrix m_p(k, k);
  for (int j = 0; j < k; ++j) {
    auto coords = solve(w, multiply(s.matrix(), basis[static_cast<std::size_t>(j)]));
    if (!coords)
      throw std::logic_error("involution does not preserve the hyperplane");
    m_p.set_column(j, *coords);
  }
  return Involution(BilinearSpace::from_gram(std::move(gram_p)),
                    std::move(m_p));
}

// alpha on SYMP/EVO is the rank of v -> b(v, sigma v); on ODDO that form is
// identically useless (it is 1 on Omega), so alpha is taken on the
// restriction to the hyperplane orthogonal to Omega.
inline int alpha_invariant(const Involution& s) {
  if (s.space().type() == SpaceType::Oddo)
    return alpha_invariant(restrict_to_omega_perp(s));
  return alpha_functional(s.space(), s.matrix()).is_zero() ? 0 : 1;
}

// EVO: [D(s), alpha(s), D(ms), alpha(ms)].  SYMP and ODDO carry no mirror,
// and the pair is duplicated.
inline DDInvariant dd_invariant(const Involution& s) {
  int d = dickson_D(s);
  int a = alpha_invariant(s);
  if (s.space().type() != SpaceType::Evo) return {d, a, d, a};
  Involution m = mirror(s);
  return {d, a, dickson_D(m), alpha_invariant(m)};
}

inline Charge charge_of(const DDInvariant& dd) {
  if (dd.Dt > dd.D) return Charge{0};
  if (dd.Dt == dd.D) return Charge{+1};
  return Charge{-1};
}

inline Charge charge(const Involution& s) {
  if (s.space().type() != SpaceType::Evo)
    throw std::invalid_argument("charge is defined on EVO spaces only");
  return charge_of(dd_invariant(s));
}

namespace detail {

inline std::uint64_t pack_low(const BitVector& v) {
  return v.words().empty() ? 0 : v.words()[0];
}

inline bool is_pow2(long long x) { return x > 0 && (x & (x - 1)) == 0; }

inline int exact_log2(long long x) {
  if (!is_pow2(x))
    throw std::invalid_argument("profile entry is not a power of two");
  return std::countr_zero(static_cast<std::uint64_t>(x));
}

inline void check_dd_evo(const DDInvariant& dd, int dim) {
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("EVO dimension must be even and >= 2");
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("inconsistent DD-invariant " + dd.compact() +
                                ": " + why);
  };
  if (dd.alpha < 0 || dd.alpha > 1 || dd.alphat < 0 || dd.alphat > 1)
    bad("alpha values must be 0 or 1");
  if (dd.D < 0 || dd.D > dim / 2 || dd.Dt < 0 || dd.Dt > dim / 2)
    bad("D values must lie in [0, dim/2]");
  if (dd.D - dd.Dt > 1 || dd.Dt - dd.D > 1) bad("|D - D~| must be <= 1");
  if (dd.alpha == 0 && dd.alphat == 0) bad("alpha and alpha~ cannot both be 0");
}

}  // namespace detail

// Direct count of the eight vector sets over all 2^dim vectors, walked in
// Gray-code order so each step is a constant number of word operations.
// The predicates, with . the bilinear form:
//   I1: v.v=0, v=sv       I2: v.v=0, v.sv=0, v!=sv   I3: v.v=0, v.sv=1
//   I4: v.v=1, v.sv=0     I5: v.v=1, v=sv            I6: v.v=1, v.sv=1, v!=sv
//   I7: v=sv+Omega, v.v=0 I8: v=sv+Omega, v.v=1
inline IProfile i_profile(const Involution& s) {
  const BilinearSpace& sp = s.space();
  if (sp.type() != SpaceType::Evo)
    throw std::invalid_argument("the I-profile is defined on EVO spaces only");
  int n = sp.dim();
  if (n > 24)
    throw std::invalid_argument(
        "i_profile sweeps 2^dim vectors; refuse above dim 24 "
        "(derive the profile from the DD-invariant instead)");

  BitMatrix fixed = s.matrix() + BitMatrix::identity(n);  // sigma + Id
  std::array<std::uint64_t, 24> col{};
  for (int j = 0; j < n; ++j)
    col[static_cast<std::size_t>(j)] = detail::pack_low(fixed.column(j));
  std::uint64_t diag_g = detail::pack_low(gram_diagonal(sp.gram()));
  std::uint64_t c_vec = detail::pack_low(alpha_functional(sp, s.matrix()));
  std::uint64_t omega = detail::pack_low(sp.omega());

  IProfile p;
  auto& I = p.counts;
  std::uint64_t w = 0;  // (sigma + Id) v
  bool bvv = false, bvsv = false;
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0;; ++k) {
    if (!bvv) {
      if (w == 0)
        ++I[0];
      else if (!bvsv)
        ++I[1];
      else
        ++I[2];
    } else {
      if (w == 0)
        ++I[4];
      else if (!bvsv)
        ++I[3];
      else
        ++I[5];
    }
    if (w == omega) ++I[bvv ? 7 : 6];
    if (k + 1 == total) break;
    int i = std::countr_zero(k + 1);
    w ^= col[static_cast<std::size_t>(i)];
    bvv ^= (diag_g >> i) & 1;
    bvsv ^= (c_vec >> i) & 1;
  }
  return p;
}

// The I-profile is determined by the DD-invariant:
//   I1 = 2^(dim - max{D, D~})
//   I3 = 0 if alpha != alpha~, else 2^(dim-2)
//   I4 = 0 / 2^(dim-1) / 2^(dim-2) as alpha >,<,= alpha~
//   I5 = 2^(dim-1-D) when D < D~, else 0
//   I7 = 2^(dim-D)   when D = D~, else 0
//   I8 = 2^(dim-1-D~) when D > D~, else 0
//   I2, I6 complete each half-space to 2^(dim-1).
inline IProfile dd_to_profile(const DDInvariant& dd, int dim) {
  detail::check_dd_evo(dd, dim);
  auto pw = [](int e) { return static_cast<long long>(1) << e; };
  IProfile p;
  auto& I = p.counts;
  I[0] = pw(dim - std::max(dd.D, dd.Dt));
  I[2] = dd.alpha != dd.alphat ? 0 : pw(dim - 2);
  if (dd.alpha > dd.alphat)
    I[3] = 0;
  else if (dd.alpha < dd.alphat)
    I[3] = pw(dim - 1);
  else
    I[3] = pw(dim - 2);
  I[4] = dd.D < dd.Dt ? pw(dim - 1 - dd.D) : 0;
  I[6] = dd.D == dd.Dt ? pw(dim - dd.D) : 0;
  I[7] = dd.D > dd.Dt ? pw(dim - 1 - dd.Dt) : 0;
  I[1] = pw(dim - 1) - I[0] - I[2];
  I[5] = pw(dim - 1) - I[3] - I[4];
  if (I[1] < 0 || I[5] < 0)
    throw std::invalid_argument("inconsistent DD-invariant " + dd.compact() +
                                ": derived profile has negative entries");
  return p;
}

// Inverse direction:
//   D  = dim - log2(I1 + I5)
//   D~ = dim - log2(I1 + I8)
//   alpha  = 0 iff I4 = 2^(dim-1)
//   alpha~ = 0 iff I4 = 0
inline DDInvariant profile_to_dd(const IProfile& p, int dim) {
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("EVO dimension must be even and >= 2");
  const auto& I = p.counts;
  auto malformed = [&](const std::string& why) {
    throw std::invalid_argument("malformed I-profile: " + why);
  };
  for (long long x : I)
    if (x < 0) malformed("negative count");
  long long half = static_cast<long long>(1) << (dim - 1);
  if (I[0] + I[1] + I[2] != half || I[3] + I[4] + I[5] != half)
    malformed("each half-space must contain 2^(dim-1) vectors");
  if (!detail::is_pow2(I[0])) malformed("I1 must be a positive power of two");
  int nonzero = (I[4] != 0) + (I[6] != 0) + (I[7] != 0);
  if (nonzero > 1) malformed("at most one of I5, I7, I8 may be nonzero");
  for (long long x : {I[4], I[6], I[7]})
    if (x != 0 && x != I[0]) malformed("I5, I7, I8 must be 0 or I1");
  DDInvariant dd;
  dd.D = dim - detail::exact_log2(I[0] + I[4]);
  dd.Dt = dim - detail::exact_log2(I[0] + I[7]);
  dd.alpha = I[3] == half ? 0 : 1;
  dd.alphat = I[3] == 0 ? 0 : 1;
  detail::check_dd_evo(dd, dim);
  if (dd_to_profile(dd, dim) != p)
    malformed("entries do not satisfy the profile relations");
  return dd;
}

}  // namespace f2iso
