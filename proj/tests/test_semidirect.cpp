#include "test_helpers.hpp"

using namespace f2iso;

namespace {

std::vector<BitMatrix> sp_elements(int dim) {
  std::vector<BitMatrix> out;
  for_each_isometry(standard_space(SpaceType::Symp, dim),
                    [&](const BitMatrix& m) { out.push_back(m); });
  return out;
}

std::vector<MVElement> mv_elements(int dim) {
  std::vector<MVElement> out;
  testutil::for_each_vector(dim, [&](const BitVector& v) {
    out.push_back(MVElement{v, 0});
    out.push_back(MVElement{v, 1});
  });
  return out;
}

}  // namespace

TEST_CASE("S_q of the identity vanishes") {
  SemiNorm q(standard_space(SpaceType::Symp, 4));
  CHECK(sq(q, BitMatrix::identity(4)).coeffs.is_zero());
}

TEST_CASE("S_q matches its definition pointwise") {
  SemiNorm q(standard_space(SpaceType::Symp, 4));
  auto sp4 = sp_elements(4);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const BitMatrix& a = sp4[rng() % sp4.size()];
    SqFunctional f = sq(q, a);
    testutil::for_each_vector(4, [&](const BitVector& v) {
      CHECK(f.eval(v) == (q.eval(v) ^ q.eval(multiply(a, v))));
    });
  }
  // Swapping u1 and u2 alone breaks the pairing b(u1, v1) = 1.
  BitMatrix not_symplectic = BitMatrix::identity(4);
  not_symplectic.set(0, 0, false);
  not_symplectic.set(2, 2, false);
  not_symplectic.set(0, 2, true);
  not_symplectic.set(2, 0, true);
  CHECK_THROWS_AS(sq(q, not_symplectic), std::invalid_argument);
}

TEST_CASE("S_q cocycle identity") {
  // Exhaustive on Sp(2).
  {
    SemiNorm q(standard_space(SpaceType::Symp, 2));
    auto sp2 = sp_elements(2);
    for (const BitMatrix& a : sp2)
      for (const BitMatrix& b : sp2) {
        BitVector lhs = sq(q, multiply(a, b)).coeffs;
        BitVector rhs = sq(q, b).coeffs ^ multiply(transpose(b), sq(q, a).coeffs);
        CHECK(lhs == rhs);
      }
  }
  // Seeded random pairs in Sp(4) and Sp(6).
  {
    SemiNorm q(standard_space(SpaceType::Symp, 4));
    auto sp4 = sp_elements(4);
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 500; ++trial) {
      const BitMatrix& a = sp4[rng() % sp4.size()];
      const BitMatrix& b = sp4[rng() % sp4.size()];
      CHECK(sq(q, multiply(a, b)).coeffs ==
            (sq(q, b).coeffs ^ multiply(transpose(b), sq(q, a).coeffs)));
    }
  }
  {
    SemiNorm q(standard_space(SpaceType::Symp, 6));
    // Deterministic sample: every 1450th element of Sp(6).
    std::vector<BitMatrix> sample;
    long long index = 0;
    for_each_isometry(standard_space(SpaceType::Symp, 6),
                      [&](const BitMatrix& m) {
                        if (index++ % 1450 == 0) sample.push_back(m);
                      });
    REQUIRE(sample.size() >= 1000);
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 500; ++trial) {
      const BitMatrix& a = sample[rng() % sample.size()];
      const BitMatrix& b = sample[rng() % sample.size()];
      CHECK(sq(q, multiply(a, b)).coeffs ==
            (sq(q, b).coeffs ^ multiply(transpose(b), sq(q, a).coeffs)));
    }
  }
}

TEST_CASE("the M_V action") {
  SemiNorm q2(standard_space(SpaceType::Symp, 2));
  auto sp2 = sp_elements(2);
  auto points = mv_elements(2);

  for (const MVElement& x : points)
    CHECK(mv_act(q2, BitMatrix::identity(2), x) == x);

  // (AB) . x = A . (B . x), exhaustively: 36 pairs x 8 points.
  for (const BitMatrix& a : sp2)
    for (const BitMatrix& b : sp2)
      for (const MVElement& x : points)
        CHECK(mv_act(q2, multiply(a, b), x) == mv_act(q2, a, mv_act(q2, b, x)));

  // Matrix form: last row carries q of the columns of A.
  SemiNorm q4(standard_space(SpaceType::Symp, 4));
  auto sp4 = sp_elements(4);
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const BitMatrix& a = sp4[rng() % sp4.size()];
    BitMatrix m = mv_matrix(q4, a);
    for (int j = 0; j < 4; ++j)
      CHECK(m.get(4, j) == q4.eval(a.column(j)));
    CHECK(m.get(4, 4));
    testutil::for_each_vector(4, [&](const BitVector& v) {
      for (int lambda = 0; lambda < 2; ++lambda) {
        BitVector packed(5);
        for (int i = 0; i < 4; ++i)
          if (v.get(i)) packed.set(i, true);
        if (lambda) packed.set(4, true);
        BitVector image = multiply(m, packed);
        MVElement acted = mv_act(q4, a, MVElement{v, lambda});
        for (int i = 0; i < 4; ++i) CHECK(image.get(i) == acted.v.get(i));
        CHECK(image.get(4) == (acted.lambda == 1));
      }
    });
  }
}

TEST_CASE("theta at dim V = 2 is an isomorphism onto TO(4)") {
  SemiDirectGroup g(2);
  auto elements = g.elements();
  REQUIRE(elements.size() == 48);

  CHECK(g.theta(g.identity()).matrix() == BitMatrix::identity(4));

  std::set<std::string> images;
  for (const auto& x : elements) {
    Isometry t = g.theta(x);
    images.insert(format_matrix(t.matrix()));
    // Everything fixes the distinguished vector.
    CHECK(t.apply(g.hat_space().omega()) == g.hat_space().omega());
  }
  CHECK(images.size() == 48);

  std::set<std::string> to4;
  for_each_isometry(g.hat_space(),
                    [&](const BitMatrix& m) { to4.insert(format_matrix(m)); });
  CHECK(images == to4);

  // Homomorphism, exhaustively.
  for (const auto& x : elements)
    for (const auto& y : elements)
      CHECK(g.theta(g.multiply_elements(x, y)).matrix() ==
            multiply(g.theta(x).matrix(), g.theta(y).matrix()));
}

TEST_CASE("the extended space standardizes to the orthogonal model") {
  SemiDirectGroup g(4);
  auto result = classify_and_standardize(g.hat_space().gram());
  CHECK(result.type == SpaceType::Evo);
  BitMatrix u_inv = *inverse(result.basis);
  std::mt19937_64 rng(55);
  auto elements = g.elements();
  for (int trial = 0; trial < 10; ++trial) {
    const auto& x = elements[rng() % elements.size()];
    BitMatrix conj = multiply(multiply(u_inv, g.theta(x).matrix()), result.basis);
    CHECK(multiply(transpose(conj), conj) == BitMatrix::identity(6));
  }
}

TEST_CASE("theta intertwines the mirrors") {
  SemiDirectGroup g(2);
  for (const auto& x : g.elements()) {
    CHECK(g.mirror_element(g.mirror_element(x)) == x);
    CHECK(g.theta(g.mirror_element(x)).matrix() ==
          mirror(g.theta(x)).matrix());
  }
  // The mirror of the identity sends f to Omega + f; in the basis
  // (V..., Omega, f) that is one extra entry, not the entrywise
  // complement, because this basis is not orthonormal.
  CHECK(g.theta(g.mirror_element(g.identity())).matrix() ==
        parse_matrix_text("1000\n0100\n0011\n0001\n"));
  // Conjugated into the standard orthogonal basis it is the complement.
  auto standardized = classify_and_standardize(g.hat_space().gram());
  BitMatrix u_inv = *inverse(standardized.basis);
  BitMatrix in_standard =
      multiply(multiply(u_inv, g.theta(g.mirror_element(g.identity())).matrix()),
               standardized.basis);
  CHECK(in_standard == BitMatrix::identity(4).complemented());
}

TEST_CASE("semidirect involutions") {
  for (int dim_v : {2, 4}) {
    SemiDirectGroup g(dim_v);
    BitMatrix id_hat = BitMatrix::identity(dim_v + 2);
    for (const auto& x : g.elements()) {
      BitMatrix t = g.theta(x).matrix();
      bool theta_involution = multiply(t, t) == id_hat;
      CHECK(g.is_involution(x) == theta_involution);
    }
  }
  // (v, lambda, Id) is always an involution since S_q(Id) = 0.
  SemiDirectGroup g(4);
  testutil::for_each_vector(4, [&](const BitVector& v) {
    CHECK(g.is_involution(SemiDirectElement{v, 0, BitMatrix::identity(4)}));
    CHECK(g.is_involution(SemiDirectElement{v, 1, BitMatrix::identity(4)}));
  });
}

TEST_CASE("S_A orbit counts") {
  {
    SemiDirectGroup g(2);
    // Sp(2) classes: the identity and the J class (D = 1 = dim/2).
    CHECK(s_a_orbit_count(g, BitMatrix::identity(2)) == 4);
    CHECK(s_a_orbit_count(g, testutil::j_block()) == 2);
    // Total = 6 = class count of the dimension-4 orthogonal group.
    CHECK(4 + 2 == class_count(SpaceType::Evo, 4));
  }
  {
    SemiDirectGroup g(4);
    auto reps = representatives(SpaceType::Symp, 4);
    std::vector<long long> counts;
    long long total = 0;
    for (const auto& [desc, rep] : reps) {
      counts.push_back(s_a_orbit_count(g, rep.matrix()));
      total += counts.back();
    }
    // J+I: alpha = 1, 0 < D < 2 -> 3.  J+J: D = dim/2 -> 2.
    // Id: -> 4.  M: D = 2 = dim/2 -> 2.
    CHECK(counts == std::vector<long long>{3, 2, 4, 2});
    CHECK(total == 11);
    CHECK(total == class_count(SpaceType::Evo, 6));
  }
  SemiDirectGroup g(2);
  CHECK_THROWS_AS(s_a_orbit_count(g, BitMatrix::from_rows({"11", "11"})),
                  std::invalid_argument);
}

TEST_CASE("involution fiber data") {
  SemiDirectGroup g(4);
  auto reps = representatives(SpaceType::Symp, 4);
  for (const auto& [desc, rep] : reps) {
    InvolutionLocalData data = involution_local_data(g, rep.matrix());
    // B(A) lies inside Z(A): every generator reduces into the Z span.
    BitMatrix z_span(static_cast<int>(data.z_basis.size()), 5);
    for (std::size_t i = 0; i < data.z_basis.size(); ++i)
      z_span.set_row(static_cast<int>(i), data.z_basis[i]);
    for (const BitVector& b : data.b_basis)
      CHECK(solve(transpose(z_span), b).has_value());
    // |H(A)| = 2^(dim Z - dim B).
    CHECK(data.h_reps.size() ==
          (std::size_t{1} << (data.z_basis.size() - data.b_basis.size())));
    // The centralizer action preserves B(A).
    detail::EchelonReducer reducer;
    for (const BitVector& b : data.b_basis) reducer.insert(b);
    for (std::size_t pi = 0; pi < std::min<std::size_t>(data.centralizer.size(), 40); ++pi) {
      const BitMatrix& p = data.centralizer[pi];
      SqFunctional f = sq(g.seminorm(), p);
      for (const BitVector& b : data.b_basis) {
        MVElement x = detail::mv_from_coords(b);
        MVElement image{multiply(p, x.v),
                        x.lambda ^ static_cast<int>(f.eval(x.v))};
        CHECK(reducer.reduce(detail::mv_coords(image)).is_zero());
      }
    }
  }
}

TEST_CASE("conjugacy classes transfer through theta at dim V = 2") {
  SemiDirectGroup g(2);
  auto elements = g.elements();
  std::vector<SemiDirectElement> invols;
  for (const auto& x : elements)
    if (g.is_involution(x)) invols.push_back(x);

  // Brute-force orbit count under conjugation in the semidirect group.
  std::vector<bool> assigned(invols.size(), false);
  auto find_index = [&](const SemiDirectElement& x) {
    for (std::size_t i = 0; i < invols.size(); ++i)
      if (invols[i] == x) return static_cast<int>(i);
    return -1;
  };
  int orbit_count = 0;
  for (std::size_t i = 0; i < invols.size(); ++i) {
    if (assigned[i]) continue;
    ++orbit_count;
    for (const auto& p : elements) {
      int j = find_index(g.conjugate(p, invols[i]));
      REQUIRE(j >= 0);
      assigned[static_cast<std::size_t>(j)] = true;
    }
  }
  CHECK(orbit_count == class_count(SpaceType::Evo, 4));
}

TEST_CASE("changing the semi-norm gives an isomorphic module") {
  BilinearSpace space = standard_space(SpaceType::Symp, 2);
  SemiNorm q(space);
  auto sp2 = sp_elements(2);
  testutil::for_each_vector(2, [&](const BitVector& offset) {
    SemiNorm q_prime(space, offset);
    // Phi(v, lambda) = (v, q(v) + q'(v) + lambda) intertwines the actions.
    auto phi = [&](const MVElement& x) {
      return MVElement{x.v, x.lambda ^ static_cast<int>(q.eval(x.v)) ^
                                static_cast<int>(q_prime.eval(x.v))};
    };
    for (const BitMatrix& a : sp2)
      for (const MVElement& x : mv_elements(2))
        CHECK(phi(mv_act(q, a, x)) == mv_act(q_prime, a, phi(x)));
  });
}
