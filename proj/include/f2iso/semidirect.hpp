// The symplectic side of the even orthogonal story: the S_q functionals,
// the (2n+1)-dimensional Sp(2n)-module M_V, the isomorphism
// theta : M_V x| Sp(V) -> Iso(V^), and orbit counting for the fibers S_A
// of involution classes over a symplectic class.

#pragma once

#include <map>
#include <utility>

#include "f2iso/classify.hpp"

namespace f2iso {

// The linear functional v -> q(v) + q(Av), stored by its coefficient vector.
struct SqFunctional {
  BitVector coeffs;

  bool eval(const BitVector& v) const { return coeffs.dot(v); }
};

inline SqFunctional sq(const SemiNorm& q, const BitMatrix& a) {
  const BilinearSpace& sp = q.space();
  if (!a.is_square() || a.rows() != sp.dim())
    throw std::invalid_argument("matrix shape mismatch in sq");
  if (multiply(multiply(transpose(a), sp.gram()), a) != sp.gram())
    throw std::invalid_argument("sq requires a symplectic matrix");
  // The functional is linear, so its coefficients are its values on the
  // standard basis.
  BitVector c(sp.dim());
  for (int i = 0; i < sp.dim(); ++i) {
    BitVector e = BitVector::unit(sp.dim(), i);
    if (q.eval(e) ^ q.eval(multiply(a, e))) c.set(i, true);
  }
  return SqFunctional{std::move(c)};
}

// A point of M_V = V (+) F2.
struct MVElement {
  BitVector v;
  int lambda = 0;

  bool operator==(const MVElement&) const = default;
};

// A . (v, lambda) = (Av, (S_q A)(v) + lambda).
inline MVElement mv_act(const SemiNorm& q, const BitMatrix& a,
                        const MVElement& x) {
  SqFunctional f = sq(q, a);
  return MVElement{multiply(a, x.v), x.lambda ^ static_cast<int>(f.eval(x.v))};
}

// The action as a (2n+1)x(2n+1) matrix [[A, 0], [S_q A, 1]] on column
// vectors (v, lambda).
inline BitMatrix mv_matrix(const SemiNorm& q, const BitMatrix& a) {
  SqFunctional f = sq(q, a);
  int n = a.rows();
  BitMatrix m(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.get(i, j)) m.set(i, j, true);
  for (int j = 0; j < n; ++j)
    if (f.coeffs.get(j)) m.set(n, j, true);
  m.set(n, n, true);
  return m;
}

struct SemiDirectElement {
  BitVector v;
  int lambda = 0;
  BitMatrix a;

  bool operator==(const SemiDirectElement&) const = default;
};

// M_V x| Sp(V) over the standard symplectic space of dimension dim_v, with
// the standard semi-norm.  theta lands in the isometries of
// V^ = V (+) <1> (+) <1>, written in the basis (V-basis..., Omega, f) where
// b(Omega, Omega) = 0, b(Omega, f) = b(f, f) = 1.
class SemiDirectGroup {
 public:
  explicit SemiDirectGroup(int dim_v)
      : base_(std::make_shared<BilinearSpace>(
            standard_space(SpaceType::Symp, dim_v))),
        q_(*base_) {
    int n = dim_v;
    BitMatrix gram = block_diag(base_->gram(),
                                BitMatrix::from_rows({"01", "11"}));
    hat_ = std::make_shared<BilinearSpace>(BilinearSpace::from_gram(gram));
    if (hat_->type() != SpaceType::Evo ||
        hat_->omega() != BitVector::unit(n + 2, n))
      throw std::logic_error("unexpected structure on the extended space");
  }

  int dim_v() const { return base_->dim(); }
  const BilinearSpace& base_space() const { return *base_; }
  const SemiNorm& seminorm() const { return q_; }
  const BilinearSpace& hat_space() const { return *hat_; }
  const std::shared_ptr<const BilinearSpace>& hat_space_ptr() const {
    return hat_;
  }

  SemiDirectElement identity() const {
    return SemiDirectElement{BitVector(dim_v()), 0,
                             BitMatrix::identity(dim_v())};
  }

  // (x, A)(y, B) = (x + A.y, AB).
  SemiDirectElement multiply_elements(const SemiDirectElement& x,
                                      const SemiDirectElement& y) const {
    MVElement ay = mv_act(q_, x.a, MVElement{y.v, y.lambda});
    return SemiDirectElement{x.v ^ ay.v, x.lambda ^ ay.lambda,
                             multiply(x.a, y.a)};
  }

  SemiDirectElement inverse_element(const SemiDirectElement& x) const {
    auto ainv = inverse(x.a);
    if (!ainv) throw std::invalid_argument("group element must be invertible");
    MVElement y = mv_act(q_, *ainv, MVElement{x.v, x.lambda});
    return SemiDirectElement{std::move(y.v), y.lambda, std::move(*ainv)};
  }

  SemiDirectElement conjugate(const SemiDirectElement& p,
                              const SemiDirectElement& x) const {
    return multiply_elements(multiply_elements(p, x), inverse_element(p));
  }

  // m(x, A) flips the F2 coordinate of x; through theta this is the mirror.
  SemiDirectElement mirror_element(const SemiDirectElement& x) const {
    return SemiDirectElement{x.v, x.lambda ^ 1, x.a};
  }

  // (x, A) is an involution iff A^2 = Id and x is fixed by the A-action.
  bool is_involution(const SemiDirectElement& x) const {
    if (multiply(x.a, x.a) != BitMatrix::identity(dim_v())) return false;
    return mv_act(q_, x.a, MVElement{x.v, x.lambda}) == MVElement{x.v, x.lambda};
  }

  // theta(x, A) = phi(x) . j(A):
  //   w in V   |-> Aw + b(Aw, v) Omega
  //   Omega    |-> Omega
  //   f        |-> v + (lambda + q(v)) Omega + f
  Isometry theta(const SemiDirectElement& x) const {
    int n = dim_v();
    BitMatrix m(n + 2, n + 2);
    BitVector gv = multiply(base_->gram(), x.v);
    for (int j = 0; j < n; ++j) {
      BitVector aj = x.a.column(j);
      for (int i = 0; i < n; ++i)
        if (aj.get(i)) m.set(i, j, true);
      if (gv.dot(aj)) m.set(n, j, true);
    }
    m.set(n, n, true);
    for (int i = 0; i < n; ++i)
      if (x.v.get(i)) m.set(i, n + 1, true);
    if (x.lambda ^ static_cast<int>(q_.eval(x.v))) m.set(n, n + 1, true);
    m.set(n + 1, n + 1, true);
    return Isometry(hat_, std::move(m));
  }

  // All 2^(dim V + 1) * |Sp(V)| elements, Sp factor outermost.
  std::vector<SemiDirectElement> elements(bool allow_large = false) const {
    std::vector<SemiDirectElement> out;
    EnumerationOptions opt;
    opt.allow_large = allow_large;
    int n = dim_v();
    for_each_isometry(
        *base_,
        [&](const BitMatrix& a) {
          for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            BitVector v(n);
            for (int i = 0; i < n; ++i)
              if ((bits >> i) & 1) v.set(i, true);
            for (int lambda = 0; lambda < 2; ++lambda)
              out.push_back(SemiDirectElement{v, lambda, a});
          }
        },
        opt);
    return out;
  }

 private:
  std::shared_ptr<const BilinearSpace> base_;
  SemiNorm q_;
  std::shared_ptr<const BilinearSpace> hat_;
};

inline SemiDirectElement sd_mirror(const SemiDirectGroup& g,
                                   const SemiDirectElement& x) {
  return g.mirror_element(x);
}

inline bool sd_is_involution(const SemiDirectGroup& g,
                             const SemiDirectElement& x) {
  return g.is_involution(x);
}

inline Isometry theta(const SemiDirectGroup& g, const SemiDirectElement& x) {
  return g.theta(x);
}

namespace detail {

// Echelon set with a reduction operation; rows keep distinct leading bits.
class EchelonReducer {
 public:
  BitVector reduce(BitVector v) const {
    for (const BitVector& r : rows_) {
      BitVector candidate = v ^ r;
      if (candidate < v) v = std::move(candidate);
    }
    return v;
  }

  bool insert(const BitVector& v) {
    BitVector r = reduce(v);
    if (r.is_zero()) return false;
    rows_.push_back(std::move(r));
    std::sort(rows_.begin(), rows_.end(),
              [](const BitVector& a, const BitVector& b) { return b < a; });
    return true;
  }

  const std::vector<BitVector>& rows() const { return rows_; }

 private:
  std::vector<BitVector> rows_;
};

inline BitVector mv_coords(const MVElement& x) {
  BitVector out(x.v.size() + 1);
  for (int i = 0; i < x.v.size(); ++i)
    if (x.v.get(i)) out.set(i, true);
  if (x.lambda) out.set(x.v.size(), true);
  return out;
}

inline MVElement mv_from_coords(const BitVector& c) {
  MVElement x;
  x.v = BitVector(c.size() - 1);
  for (int i = 0; i + 1 < c.size(); ++i)
    if (c.get(i)) x.v.set(i, true);
  x.lambda = c.get(c.size() - 1) ? 1 : 0;
  return x;
}

}  // namespace detail

// The data controlling the fiber S_A of semidirect involution classes over
// the class of a symplectic involution A:
//   Eig(A) = ker(A + Id),  Z(A) = Eig(A) (+) F2  (the kernel of A~ + Id),
//   B(A)   = { (v + Av, (S_q A)(v)) }  (its image),
//   H(A)   = Z(A)/B(A), acted on by the centralizer C(A).
struct InvolutionLocalData {
  std::vector<BitVector> eig_basis;   // in V
  std::vector<BitVector> z_basis;     // in V (+) F2 coordinates
  std::vector<BitVector> b_basis;     // echelon basis of B(A)
  std::vector<BitVector> h_reps;      // reduced coset representatives
  std::vector<BitMatrix> centralizer; // C(A), by brute-force filter of Sp(V)
};

inline InvolutionLocalData involution_local_data(const SemiDirectGroup& g,
                                                 const BitMatrix& a,
                                                 bool allow_large = false) {
  Involution(g.base_space(), a);  // validates: symplectic involution
  int n = g.dim_v();
  InvolutionLocalData data;

  data.eig_basis = kernel_basis(a + BitMatrix::identity(n));
  for (const BitVector& e : data.eig_basis)
    data.z_basis.push_back(detail::mv_coords(MVElement{e, 0}));
  data.z_basis.push_back(detail::mv_coords(MVElement{BitVector(n), 1}));

  SqFunctional f = sq(g.seminorm(), a);
  detail::EchelonReducer b_echelon;
  BitMatrix fixed = a + BitMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    MVElement gen{fixed.column(j), f.coeffs.get(j) ? 1 : 0};
    b_echelon.insert(detail::mv_coords(gen));
  }
  data.b_basis = b_echelon.rows();

  // Coset representatives: reduce every element of Z(A).
  std::map<BitVector, bool> seen;
  std::size_t count = std::size_t{1} << data.z_basis.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    BitVector z(n + 1);
    for (std::size_t b = 0; b < data.z_basis.size(); ++b)
      if ((mask >> b) & 1) z ^= data.z_basis[b];
    BitVector rep = b_echelon.reduce(z);
    if (!seen.count(rep)) {
      seen[rep] = true;
      data.h_reps.push_back(std::move(rep));
    }
  }

  EnumerationOptions opt;
  opt.allow_large = allow_large;
  for_each_isometry(
      g.base_space(),
      [&](const BitMatrix& p) {
        if (multiply(p, a) == multiply(a, p)) data.centralizer.push_back(p);
      },
      opt);
  return data;
}

// Number of C(A)-orbits on H(A); this is |S_A|, the number of conjugacy
// classes of involutions (x, B) with B conjugate to A.
inline long long s_a_orbit_count(const SemiDirectGroup& g, const BitMatrix& a,
                                 bool allow_large = false) {
  InvolutionLocalData data = involution_local_data(g, a, allow_large);
  detail::EchelonReducer b_echelon;
  for (const BitVector& r : data.b_basis) b_echelon.insert(r);

  std::map<BitVector, int> index;
  for (std::size_t i = 0; i < data.h_reps.size(); ++i)
    index[data.h_reps[i]] = static_cast<int>(i);

  // Precompute the S_q coefficients of each centralizer element.
  std::vector<std::pair<const BitMatrix*, BitVector>> action;
  action.reserve(data.centralizer.size());
  for (const BitMatrix& p : data.centralizer)
    action.emplace_back(&p, sq(g.seminorm(), p).coeffs);

  std::vector<bool> visited(data.h_reps.size(), false);
  long long orbits = 0;
  for (std::size_t start = 0; start < data.h_reps.size(); ++start) {
    if (visited[start]) continue;
    ++orbits;
    std::vector<int> queue{static_cast<int>(start)};
    visited[start] = true;
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      MVElement x = detail::mv_from_coords(data.h_reps[static_cast<std::size_t>(cur)]);
      for (const auto& [p, coeffs] : action) {
        MVElement image{multiply(*p, x.v),
                        x.lambda ^ static_cast<int>(coeffs.dot(x.v))};
        BitVector rep = b_echelon.reduce(detail::mv_coords(image));
        auto it = index.find(rep);
        if (it == index.end())
          throw std::logic_error("centralizer action left the quotient");
        if (!visited[static_cast<std::size_t>(it->second)]) {
          visited[static_cast<std::size_t>(it->second)] = true;
          queue.push_back(it->second);
        }
      }
    }
  }
  return orbits;
}

}  // namespace f2iso
