// Direct sums of involutions and the calculus predicting the DD-invariant
// of a sum from the DD-invariants of its pieces.

#pragma once

#include "f2iso/invariants.hpp"

namespace f2iso {

// Block-diagonal involution on the orthogonal direct sum.  Omega and the
// space type of the sum are re-derived from the block Gram, not assumed.
inline Involution direct_sum(const Involution& s, const Involution& t) {
  BitMatrix gram = block_diag(s.space().gram(), t.space().gram());
  BitMatrix m = block_diag(s.matrix(), t.matrix());
  return Involution(BilinearSpace::from_gram(std::move(gram)), std::move(m));
}

// X # Y = [X1+Y1, max(X2,Y2), X3+Y3, max(X4,Y4)], the baseline combination.
inline DDInvariant sharp(const DDInvariant& x, const DDInvariant& y) {
  return {x.D + y.D, std::max(x.alpha, y.alpha), x.Dt + y.Dt,
          std::max(x.alphat, y.alphat)};
}

enum class SumRule { SharpOnly, OddoOddo, OddoEvo, EvoEvo };

inline const char* to_string(SumRule r) {
  switch (r) {
    case SumRule::SharpOnly: return "sharp";
    case SumRule::OddoOddo: return "oddo+oddo";
    case SumRule::OddoEvo: return "oddo+evo";
    case SumRule::EvoEvo: return "evo+evo";
  }
  return "?";
}

struct SumPrediction {
  DDInvariant base;               // the # combination
  std::array<int, 4> correction;  // result - base, componentwise
  DDInvariant result;
  SumRule rule;
};

namespace detail {

inline void check_extended_dd(const DDInvariant& dd, SpaceType type) {
  if (dd.alpha < 0 || dd.alpha > 1 || dd.alphat < 0 || dd.alphat > 1 ||
      dd.D < 0 || dd.Dt < 0)
    throw std::invalid_argument("invalid DD-invariant " + dd.compact());
  if (type != SpaceType::Evo && (dd.Dt != dd.D || dd.alphat != dd.alpha))
    throw std::invalid_argument(
        "SYMP/ODDO DD-invariants are duplicated pairs; got " + dd.compact());
  if (type == SpaceType::Evo) {
    if (dd.D - dd.Dt > 1 || dd.Dt - dd.D > 1 ||
        (dd.alpha == 0 && dd.alphat == 0))
      throw std::invalid_argument("invalid EVO DD-invariant " + dd.compact());
  }
}

inline SumPrediction finish(DDInvariant base, DDInvariant result,
                            SumRule rule) {
  SumPrediction p;
  p.base = base;
  p.result = result;
  p.rule = rule;
  p.correction = {result.D - base.D, result.alpha - base.alpha,
                  result.Dt - base.Dt, result.alphat - base.alphat};
  return p;
}

}  // namespace detail

// DD(s (+) t) from DD(s) and DD(t):
//   (a) either side SYMP:  DD(s) # DD(t)
//   (b) ODDO (+) ODDO:     [DD(s) # DD(t)] # [0,1,1,0]
//   (c) ODDO (+) EVO:      the duplicated pair
//                          [D+D', max(alpha_s, alpha~_t), ...]
//   (d) EVO (+) EVO:       [DD(s) # DD(t)] + E, where E depends on how
//                          D~ compares with D on each side:
//                            some side has D~ = D        -> [0,0, 0,0]
//                            both D~ > D                 -> [0,0,-1,0]
//                            one D~ > D, the other D~ < D-> [0,0, 1,0]
//                            both D~ < D                 -> [0,0, 2,0]
inline SumPrediction predict_dd_sum(const DDInvariant& s_dd, SpaceType s_type,
                                    const DDInvariant& t_dd, SpaceType t_type) {
  detail::check_extended_dd(s_dd, s_type);
  detail::check_extended_dd(t_dd, t_type);
  DDInvariant base = sharp(s_dd, t_dd);

  if (s_type == SpaceType::Symp || t_type == SpaceType::Symp)
    return detail::finish(base, base, SumRule::SharpOnly);

  if (s_type == SpaceType::Oddo && t_type == SpaceType::Oddo)
    return detail::finish(base, sharp(base, DDInvariant{0, 1, 1, 0}),
                          SumRule::OddoOddo);

  if (s_type != t_type) {
    // Normalize to the (ODDO, EVO) orientation; (+) commutes up to isometry.
    const DDInvariant& oddo = s_type == SpaceType::Oddo ? s_dd : t_dd;
    const DDInvariant& evo = s_type == SpaceType::Evo ? s_dd : t_dd;
    int a = std::max(oddo.alpha, evo.alphat);
    int d = oddo.D + evo.D;
    return detail::finish(base, DDInvariant{d, a, d, a}, SumRule::OddoEvo);
  }

  Charge cs = charge_of(s_dd), ct = charge_of(t_dd);
  std::array<int, 4> e{0, 0, 0, 0};
  if (cs.value == 1 || ct.value == 1)
    e = {0, 0, 0, 0};
  else if (cs.value == 0 && ct.value == 0)
    e = {0, 0, -1, 0};
  else if (cs.value == -1 && ct.value == -1)
    e = {0, 0, 2, 0};
  else
    e = {0, 0, 1, 0};
  DDInvariant result{base.D + e[0], base.alpha + e[1], base.Dt + e[2],
                     base.alphat + e[3]};
  return detail::finish(base, result, SumRule::EvoEvo);
}

inline SumPrediction predict_dd_sum(const Involution& s, const Involution& t) {
  return predict_dd_sum(dd_invariant(s), s.space().type(), dd_invariant(t),
                        t.space().type());
}

// Charges multiply in the monoid {-1, 0, +1}.
inline Charge charge_product(const Charge& a, const Charge& b) {
  return Charge{a.value * b.value};
}

}  // namespace f2iso
