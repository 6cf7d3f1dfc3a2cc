// Isometries and involutions of a bilinear space, the mirror operation,
// group orders, and exhaustive enumeration of isometry groups.

#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "f2iso/space.hpp"

namespace f2iso {

using GroupOrder = boost::multiprecision::cpp_int;

// A validated isometry: M^T G M = G.  For the standard dot product this is
// exactly A^T A = I.  Isometries necessarily fix the distinguished vector.
class Isometry {
 public:
  Isometry(const BilinearSpace& space, BitMatrix m)
      : Isometry(std::make_shared<BilinearSpace>(space), std::move(m)) {}

  Isometry(std::shared_ptr<const BilinearSpace> space, BitMatrix m)
      : space_(std::move(space)), m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() != space_->dim())
      throw std::invalid_argument("isometry matrix has the wrong shape");
    if (multiply(multiply(transpose(m_), space_->gram()), m_) != space_->gram())
      throw std::invalid_argument("not an isometry: M^T G M differs from G");
  }

  // Skips validation; for matrices produced by constructions that guarantee
  // the isometry condition.
  static Isometry unchecked(std::shared_ptr<const BilinearSpace> space,
                            BitMatrix m) {
    Isometry f;
    f.space_ = std::move(space);
    f.m_ = std::move(m);
    return f;
  }

  const BilinearSpace& space() const { return *space_; }
  const std::shared_ptr<const BilinearSpace>& space_ptr() const {
    return space_;
  }
  const BitMatrix& matrix() const { return m_; }

  BitVector apply(const BitVector& v) const { return multiply(m_, v); }

  bool operator==(const Isometry& o) const {
    return *space_ == *o.space_ && m_ == o.m_;
  }

 private:
  Isometry() = default;

  std::shared_ptr<const BilinearSpace> space_;
  BitMatrix m_;
};

inline Isometry validate_isometry(const BilinearSpace& space,
                                  const BitMatrix& m) {
  return Isometry(space, m);
}

class Involution {
 public:
  explicit Involution(Isometry f) : iso_(std::move(f)) {
    const BitMatrix& m = iso_.matrix();
    if (multiply(m, m) != BitMatrix::identity(m.rows()))
      throw std::invalid_argument("not an involution: M^2 differs from I");
  }

  Involution(const BilinearSpace& space, BitMatrix m)
      : Involution(Isometry(space, std::move(m))) {}

  static Involution unchecked(Isometry f) {
    return Involution(Unchecked{}, std::move(f));
  }

  const Isometry& iso() const { return iso_; }
  const BilinearSpace& space() const { return iso_.space(); }
  const BitMatrix& matrix() const { return iso_.matrix(); }

  bool operator==(const Involution& o) const { return iso_ == o.iso_; }

 private:
  struct Unchecked {};
  Involution(Unchecked, Isometry f) : iso_(std::move(f)) {}

  Isometry iso_;
};

// Mirror of an isometry on an even orthogonal space:
//   (mL)(v) = L(v) + b(v, Omega) Omega.
// In matrix terms this adds Omega to column j whenever G_jj = 1, so on the
// standard space it is the entrywise complement.
inline Isometry mirror(const Isometry& f) {
  const BilinearSpace& sp = f.space();
  if (sp.type() != SpaceType::Evo)
    throw std::invalid_argument(
        "mirror is defined only on even orthogonal spaces");
  BitMatrix m = f.matrix();
  BitVector diag = gram_diagonal(sp.gram());
  for (int j = 0; j < sp.dim(); ++j)
    if (diag.get(j)) {
      for (int i = 0; i < sp.dim(); ++i)
        if (sp.omega().get(i)) m.set(i, j, !m.get(i, j));
    }
  return Isometry::unchecked(f.space_ptr(), std::move(m));
}

inline Involution mirror(const Involution& s) {
  // (mF)(mL) = FL, so the mirror of an involution is an involution.
  return Involution::unchecked(mirror(s.iso()));
}

// |TO(2n)|   = 2^n (4^n - 4^1)(4^n - 4^2) ... (4^n - 4^(n-1))
// |Sp(2n)|   = 2^n (4^n - 4^0)(4^n - 4^1) ... (4^n - 4^(n-1)) = |TO(2n+1)|
inline GroupOrder group_order(SpaceType type, int dim) {
  if (dim < 0) throw std::invalid_argument("dimension must be nonnegative");
  auto evo_order = [](int n) {
    GroupOrder o = GroupOrder(1) << n;
    GroupOrder q = GroupOrder(1) << (2 * n);  // 4^n
    for (int i = 1; i < n; ++i) o *= q - (GroupOrder(1) << (2 * i));
    return o;
  };
  auto sp_order = [](int n) {
    GroupOrder o = GroupOrder(1) << n;
    GroupOrder q = GroupOrder(1) << (2 * n);
    for (int i = 0; i < n; ++i) o *= q - (GroupOrder(1) << (2 * i));
    return o;
  };
  switch (type) {
    case SpaceType::Evo:
      if (dim % 2 != 0 || dim < 2)
        throw std::invalid_argument("EVO requires even dimension >= 2");
      return evo_order(dim / 2);
    case SpaceType::Symp:
      if (dim % 2 != 0)
        throw std::invalid_argument("SYMP requires even dimension");
      return sp_order(dim / 2);
    case SpaceType::Oddo:
      if (dim % 2 != 1)
        throw std::invalid_argument("ODDO requires odd dimension");
      return sp_order((dim - 1) / 2);
  }
  throw std::invalid_argument("unknown space type");
}

struct EnumerationOptions {
  // Full-group enumeration is refused above these sizes unless allow_large
  // is set: |TO(8)| is about 1.86e8 and must be opted into.
  bool allow_large = false;
  // Deterministic partitioned enumeration: this call visits only the
  // subtrees whose first-column candidate index is congruent to `part`
  // modulo `num_parts`.  The parts are disjoint and their union is the
  // whole group.
  int part = 0;
  int num_parts = 1;
};

namespace detail {

inline void check_enumeration_cap(const BilinearSpace& space,
                                  const EnumerationOptions& opt) {
  int cap = space.type() == SpaceType::Symp ? 6 : 7;
  if (space.dim() > cap && !opt.allow_large)
    throw std::invalid_argument(
        "group enumeration at dimension " + std::to_string(space.dim()) +
        " exceeds the safety cap (" + std::to_string(cap) + " for " +
        to_string(space.type()) + "); pass allow_large / --force to opt in");
  if (opt.num_parts < 1 || opt.part < 0 || opt.part >= opt.num_parts)
    throw std::invalid_argument("invalid enumeration partition");
}

// Backtracking over columns.  A partial tuple c_0..c_{k-1} extends by any v
// with b(c_i, v) = G_ik and b(v,v) = G_kk; both constraint families are
// linear over F2, so the candidates at each node form an affine subspace
// and are enumerated directly, in increasing packed-value order.
class IsometryEnumerator {
 public:
  IsometryEnumerator(const BilinearSpace& space,
                     const std::function<bool(const BitMatrix&)>& fn,
                     const EnumerationOptions& opt)
      : sp_(space), fn_(fn), opt_(opt), n_(space.dim()) {
    cols_.reserve(static_cast<std::size_t>(n_));
    gram_rows_.reserve(static_cast<std::size_t>(n_));
    diag_ = gram_diagonal(sp_.gram());
  }

  // Returns false if the visitor stopped the walk early.
  bool run() {
    if (n_ == 0) return fn_(BitMatrix(0, 0));
    extend(0);
    return !stopped_;
  }

 private:
  std::vector<BitVector> candidates(int k) const {
    BitMatrix system(k + 1, n_);
    BitVector rhs(k + 1);
    for (int i = 0; i < k; ++i) {
      system.set_row(i, gram_rows_[static_cast<std::size_t>(i)]);
      if (sp_.gram().get(i, k)) rhs.set(i, true);
    }
    system.set_row(k, diag_);
    if (sp_.gram().get(k, k)) rhs.set(k, true);
    auto sol = solve_affine(system, rhs);
    std::vector<BitVector> out;
    if (!sol) return out;
    std::size_t count = std::size_t{1} << sol->kernel.size();
    out.reserve(count);
    BitVector cur = sol->particular;
    out.push_back(cur);
    // Gray-code walk through the affine coset.
    for (std::size_t t = 1; t < count; ++t) {
      cur ^= sol->kernel[static_cast<std::size_t>(std::countr_zero(t))];
      out.push_back(cur);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void extend(int k) {
    if (k == n_) {
      BitMatrix m(n_, n_);
      for (int j = 0; j < n_; ++j) m.set_column(j, cols_[static_cast<std::size_t>(j)]);
      if (!fn_(m)) stopped_ = true;
      return;
    }
    auto cands = candidates(k);
    for (std::size_t ci = 0; ci < cands.size() && !stopped_; ++ci) {
      if (k == 0 && static_cast<int>(ci % static_cast<std::size_t>(opt_.num_parts)) != opt_.part)
        continue;
      cols_.push_back(cands[ci]);
      gram_rows_.push_back(multiply(sp_.gram(), cands[ci]));
      extend(k + 1);
      cols_.pop_back();
      gram_rows_.pop_back();
    }
  }

  const BilinearSpace& sp_;
  const std::function<bool(const BitMatrix&)>& fn_;
  EnumerationOptions opt_;
  int n_;
  bool stopped_ = false;
  BitVector diag_;
  std::vector<BitVector> cols_;       // chosen columns
  std::vector<BitVector> gram_rows_;  // G * c_i, the constraint rows
};

}  // namespace detail

// Visits every isometry of the space exactly once, in a deterministic
// order.  Matrices are rebuilt per call; copy if you keep them.
inline void for_each_isometry(const BilinearSpace& space,
                              const std::function<void(const BitMatrix&)>& fn,
                              const EnumerationOptions& opt = {}) {
  detail::check_enumeration_cap(space, opt);
  std::function<bool(const BitMatrix&)> wrapped = [&fn](const BitMatrix& m) {
    fn(m);
    return true;
  };
  detail::IsometryEnumerator(space, wrapped, opt).run();
}

// As for_each_isometry, but the visitor returns false to stop the walk.
// Returns true iff the walk ran to completion.
inline bool for_each_isometry_while(
    const BilinearSpace& space, const std::function<bool(const BitMatrix&)>& fn,
    const EnumerationOptions& opt = {}) {
  detail::check_enumeration_cap(space, opt);
  return detail::IsometryEnumerator(space, fn, opt).run();
}

inline std::vector<Isometry> enumerate_group(const BilinearSpace& space,
                                             const EnumerationOptions& opt = {}) {
  auto shared = std::make_shared<BilinearSpace>(space);
  std::vector<Isometry> out;
  for_each_isometry(
      space,
      [&](const BitMatrix& m) { out.push_back(Isometry::unchecked(shared, m)); },
      opt);
  return out;
}

inline std::vector<Involution> enumerate_involutions(
    const BilinearSpace& space, const EnumerationOptions& opt = {}) {
  auto shared = std::make_shared<BilinearSpace>(space);
  std::vector<Involution> out;
  for_each_isometry(
      space,
      [&](const BitMatrix& m) {
        if (multiply(m, m) == BitMatrix::identity(m.rows()))
          out.push_back(
              Involution::unchecked(Isometry::unchecked(shared, m)));
      },
      opt);
  return out;
}

}  // namespace f2iso
