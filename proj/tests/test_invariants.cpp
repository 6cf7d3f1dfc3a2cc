#include "test_helpers.hpp"

using namespace f2iso;

namespace {

Involution evo_involution(int dim, const BitMatrix& m) {
  return Involution(standard_space(SpaceType::Evo, dim), m);
}

}  // namespace

TEST_CASE("Dickson invariant") {
  CHECK(dickson_D(evo_involution(6, BitMatrix::identity(6))) == 0);
  CHECK(dickson_D(evo_involution(6, testutil::sample_a6())) == 3);
  CHECK(dickson_D(evo_involution(2, testutil::j_block())) == 1);
}

TEST_CASE("alpha invariant") {
  CHECK(alpha_invariant(evo_involution(6, BitMatrix::identity(6))) == 1);
  CHECK(alpha_invariant(evo_involution(6, testutil::sample_a6())) == 1);

  // On ODDO alpha is taken on the restriction to the Omega hyperplane;
  // the identity restricts to the symplectic identity, where b(v, v) = 0.
  Involution odd_id(standard_space(SpaceType::Oddo, 3), BitMatrix::identity(3));
  CHECK(alpha_invariant(odd_id) == 0);

  // Symplectic: the identity has alpha 0, the J representative alpha 1.
  CHECK(alpha_invariant(Involution(standard_space(SpaceType::Symp, 4),
                                   BitMatrix::identity(4))) == 0);
  CHECK(alpha_invariant(Involution(standard_space(SpaceType::Symp, 2),
                                   testutil::j_block())) == 1);
}

TEST_CASE("DD invariant") {
  CHECK(dd_invariant(evo_involution(6, BitMatrix::identity(6))) ==
        DDInvariant{0, 1, 1, 0});
  CHECK(dd_invariant(evo_involution(6, testutil::sample_a6())) ==
        DDInvariant{3, 1, 3, 1});
  CHECK(dd_invariant(evo_involution(6, BitMatrix::identity(6).complemented())) ==
        DDInvariant{1, 0, 0, 1});
  CHECK(DDInvariant{2, 1, 3, 0}.compact() == "2130");

  // SYMP and ODDO duplicate the pair.
  CHECK(dd_invariant(Involution(standard_space(SpaceType::Symp, 4),
                                testutil::m_block())) ==
        DDInvariant{2, 0, 2, 0});
  CHECK(dd_invariant(Involution(standard_space(SpaceType::Oddo, 3),
                                BitMatrix::identity(3))) ==
        DDInvariant{0, 0, 0, 0});
}

TEST_CASE("DD of the mirror swaps the pairs") {
  for (const Involution& s :
       enumerate_involutions(standard_space(SpaceType::Evo, 6))) {
    DDInvariant dd = dd_invariant(s);
    CHECK(dd_invariant(mirror(s)) == dd.mirrored());
  }
}

TEST_CASE("DD is constant on conjugacy classes") {
  // Exhaustive on TO(4).
  auto group4 = enumerate_group(standard_space(SpaceType::Evo, 4));
  auto invols4 = enumerate_involutions(standard_space(SpaceType::Evo, 4));
  for (const Involution& s : invols4) {
    DDInvariant dd = dd_invariant(s);
    for (const Isometry& p : group4) {
      BitMatrix conj = multiply(multiply(p.matrix(), s.matrix()),
                                *inverse(p.matrix()));
      CHECK(dd_invariant(Involution(s.space(), conj)) == dd);
    }
  }
  // Sampled on TO(6).
  auto group6 = enumerate_group(standard_space(SpaceType::Evo, 6));
  auto invols6 = enumerate_involutions(standard_space(SpaceType::Evo, 6));
  std::mt19937_64 rng(60606);
  for (int trial = 0; trial < 400; ++trial) {
    const Involution& s = invols6[rng() % invols6.size()];
    const Isometry& p = group6[rng() % group6.size()];
    BitMatrix conj =
        multiply(multiply(p.matrix(), s.matrix()), transpose(p.matrix()));
    CHECK(dd_invariant(Involution(s.space(), conj)) == dd_invariant(s));
  }
}

TEST_CASE("I-profile by direct count") {
  auto reps = representatives(SpaceType::Evo, 8);
  auto find_rep = [&](DDInvariant dd) -> const Involution& {
    for (const auto& [desc, rep] : reps)
      if (desc.dd == dd) return rep;
    FAIL("representative not found");
    return reps.front().second;
  };
  CHECK(i_profile(evo_involution(8, BitMatrix::identity(8))).counts ==
        std::array<long long, 8>{128, 0, 0, 0, 128, 0, 0, 0});
  CHECK(i_profile(find_rep({4, 1, 4, 1})).counts ==
        std::array<long long, 8>{16, 48, 64, 64, 0, 64, 16, 0});
  CHECK(i_profile(find_rep({1, 0, 0, 1})).counts ==
        std::array<long long, 8>{128, 0, 0, 128, 0, 0, 0, 128});

  CHECK_THROWS_AS(i_profile(Involution(standard_space(SpaceType::Symp, 4),
                                       BitMatrix::identity(4))),
                  std::invalid_argument);
  CHECK_THROWS_AS(i_profile(evo_involution(26, BitMatrix::identity(26))),
                  std::invalid_argument);
}

TEST_CASE("I-profile against a naive per-vector oracle") {
  // Independent oracle: evaluate the defining predicates vector by vector.
  auto naive = [](const Involution& s) {
    const BilinearSpace& sp = s.space();
    IProfile p;
    testutil::for_each_vector(sp.dim(), [&](const BitVector& v) {
      BitVector sv = multiply(s.matrix(), v);
      bool vv = sp.norm(v);
      bool vsv = sp.bilinear(v, sv);
      bool fixed = sv == v;
      if (!vv && fixed) ++p.counts[0];
      if (!vv && !vsv && !fixed) ++p.counts[1];
      if (!vv && vsv) ++p.counts[2];
      if (vv && !vsv) ++p.counts[3];
      if (vv && fixed) ++p.counts[4];
      if (vv && vsv && !fixed) ++p.counts[5];
      if ((sv ^ sp.omega()) == v && !vv) ++p.counts[6];
      if ((sv ^ sp.omega()) == v && vv) ++p.counts[7];
    });
    return p;
  };
  for (const Involution& s :
       enumerate_involutions(standard_space(SpaceType::Evo, 4)))
    CHECK(i_profile(s) == naive(s));
  Involution a = evo_involution(6, testutil::sample_a6());
  CHECK(i_profile(a) == naive(a));
}

TEST_CASE("profile from DD and back") {
  CHECK(dd_to_profile({0, 1, 1, 0}, 8).counts ==
        std::array<long long, 8>{128, 0, 0, 0, 128, 0, 0, 0});
  CHECK(dd_to_profile({2, 1, 3, 0}, 8).counts ==
        std::array<long long, 8>{32, 96, 0, 0, 32, 96, 0, 0});
  CHECK(dd_to_profile({3, 0, 2, 1}, 8).counts ==
        std::array<long long, 8>{32, 96, 0, 128, 0, 0, 0, 32});

  for (const auto& row : verify::to8_table()) {
    IProfile p;
    p.counts = row.profile;
    CHECK(dd_to_profile(row.dd, 8) == p);
    CHECK(profile_to_dd(p, 8) == row.dd);
  }

  IProfile q;
  q.counts = {128, 0, 0, 0, 128, 0, 0, 0};
  CHECK(profile_to_dd(q, 8) == DDInvariant{0, 1, 1, 0});
  q.counts = {16, 112, 0, 128, 0, 0, 16, 0};
  CHECK(profile_to_dd(q, 8) == DDInvariant{4, 0, 4, 1});
}

TEST_CASE("inconsistent DD tuples and malformed profiles are rejected") {
  CHECK_THROWS_AS(dd_to_profile({2, 0, 4, 1}, 8), std::invalid_argument);
  CHECK_THROWS_AS(dd_to_profile({1, 0, 1, 0}, 8), std::invalid_argument);
  CHECK_THROWS_AS(dd_to_profile({0, 0, 1, 1}, 8), std::invalid_argument);
  CHECK_THROWS_AS(dd_to_profile({5, 1, 5, 1}, 8), std::invalid_argument);
  CHECK_THROWS_AS(dd_to_profile({0, 1, 1, 0}, 7), std::invalid_argument);

  IProfile p;
  p.counts = {128, 0, 0, 0, 128, 0, 0, 0};
  IProfile bad = p;
  bad.counts[0] = 127;
  CHECK_THROWS_AS(profile_to_dd(bad, 8), std::invalid_argument);
  bad = p;
  bad.counts[6] = 64;  // I7 must be 0 or I1
  CHECK_THROWS_AS(profile_to_dd(bad, 8), std::invalid_argument);
  bad = p;
  bad.counts[7] = 128;  // two of I5, I7, I8 nonzero
  CHECK_THROWS_AS(profile_to_dd(bad, 8), std::invalid_argument);
}

TEST_CASE("charge") {
  CHECK(charge(evo_involution(6, BitMatrix::identity(6))) == Charge{0});
  CHECK(charge(evo_involution(6, BitMatrix::identity(6).complemented())) ==
        Charge{-1});
  CHECK(charge(evo_involution(6, testutil::sample_a6())) == Charge{+1});
  CHECK_THROWS_AS(charge(Involution(standard_space(SpaceType::Symp, 2),
                                    testutil::j_block())),
                  std::invalid_argument);
}

TEST_CASE("D stays within [0, dim/2] and EVO constraints hold") {
  for (int dim : {2, 4, 6}) {
    for (const Involution& s :
         enumerate_involutions(standard_space(SpaceType::Evo, dim))) {
      DDInvariant dd = dd_invariant(s);
      CHECK(dd.D >= 0);
      CHECK(2 * dd.D <= dim);
      CHECK(std::abs(dd.D - dd.Dt) <= 1);
      CHECK((dd.alpha != 0 || dd.alphat != 0));
      CHECK(i_profile(s) == dd_to_profile(dd, dim));
    }
  }
  for (int dim : {2, 4}) {
    for (const Involution& s :
         enumerate_involutions(standard_space(SpaceType::Symp, dim))) {
      DDInvariant dd = dd_invariant(s);
      CHECK(dd.D >= 0);
      CHECK(2 * dd.D <= dim);
      if (dd.D % 2 == 1) CHECK(dd.alpha == 1);
    }
  }
}
