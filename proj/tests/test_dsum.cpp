#include "test_helpers.hpp"

using namespace f2iso;

namespace {

Involution standard_involution(SpaceType type, int dim, const BitMatrix& m) {
  return Involution(standard_space(type, dim), m);
}

}  // namespace

TEST_CASE("direct sums assemble blocks and re-derive the space") {
  Involution id2 = standard_involution(SpaceType::Evo, 2, BitMatrix::identity(2));
  Involution sum = direct_sum(id2, id2);
  CHECK(sum.matrix() == BitMatrix::identity(4));
  CHECK(sum.space().type() == SpaceType::Evo);
  CHECK(sum.space().gram() == BitMatrix::identity(4));

  Involution j2 = standard_involution(SpaceType::Evo, 2, testutil::j_block());
  Involution ij = direct_sum(id2, j2);
  CHECK(ij.matrix() == block_diag(BitMatrix::identity(2), testutil::j_block()));

  Involution one = standard_involution(SpaceType::Oddo, 1, BitMatrix::identity(1));
  Involution two = direct_sum(one, one);
  CHECK(two.space().type() == SpaceType::Evo);
  CHECK(two.matrix() == BitMatrix::identity(2));
}

TEST_CASE("space types add according to the chart") {
  auto piece = [&](SpaceType t) {
    int dim = t == SpaceType::Oddo ? 3 : 2;
    return standard_involution(t, dim, BitMatrix::identity(dim));
  };
  auto expect = [&](SpaceType a, SpaceType b, SpaceType c) {
    CHECK(direct_sum(piece(a), piece(b)).space().type() == c);
  };
  expect(SpaceType::Symp, SpaceType::Symp, SpaceType::Symp);
  expect(SpaceType::Symp, SpaceType::Oddo, SpaceType::Oddo);
  expect(SpaceType::Symp, SpaceType::Evo, SpaceType::Evo);
  expect(SpaceType::Oddo, SpaceType::Symp, SpaceType::Oddo);
  expect(SpaceType::Oddo, SpaceType::Oddo, SpaceType::Evo);
  expect(SpaceType::Oddo, SpaceType::Evo, SpaceType::Oddo);
  expect(SpaceType::Evo, SpaceType::Symp, SpaceType::Evo);
  expect(SpaceType::Evo, SpaceType::Oddo, SpaceType::Oddo);
  expect(SpaceType::Evo, SpaceType::Evo, SpaceType::Evo);
}

TEST_CASE("the sharp combination") {
  CHECK(sharp({0, 0, 0, 0}, {2, 1, 3, 0}) == DDInvariant{2, 1, 3, 0});
  CHECK(sharp({1, 1, 2, 1}, {1, 0, 0, 1}) == DDInvariant{2, 1, 2, 1});
  CHECK(sharp({3, 1, 3, 1}, {0, 1, 1, 0}) == DDInvariant{3, 1, 4, 1});
}

TEST_CASE("DD prediction for direct sums") {
  // SYMP identity (+) EVO identity: rule (a), plain sharp.
  SumPrediction p1 = predict_dd_sum({0, 0, 0, 0}, SpaceType::Symp,
                                    {0, 1, 1, 0}, SpaceType::Evo);
  CHECK(p1.rule == SumRule::SharpOnly);
  CHECK(p1.result == DDInvariant{0, 1, 1, 0});

  // EVO I2 (+) EVO J2: charges 0 and -1, E = [0,0,1,0].
  SumPrediction p2 = predict_dd_sum({0, 1, 1, 0}, SpaceType::Evo,
                                    {1, 0, 0, 1}, SpaceType::Evo);
  CHECK(p2.rule == SumRule::EvoEvo);
  CHECK(p2.base == DDInvariant{1, 1, 1, 1});
  CHECK(p2.correction == std::array<int, 4>{0, 0, 1, 0});
  CHECK(p2.result == DDInvariant{1, 1, 2, 1});

  // Both charge -1: E = [0,0,2,0]; independently verified below by the
  // explicit 12x12 block matrix.
  SumPrediction p3 = predict_dd_sum({1, 0, 0, 1}, SpaceType::Evo,
                                    {1, 0, 0, 1}, SpaceType::Evo);
  CHECK(p3.correction == std::array<int, 4>{0, 0, 2, 0});
  CHECK(p3.result == DDInvariant{2, 0, 2, 1});

  // ODDO (+) ODDO identities of dimension 1.
  SumPrediction p4 = predict_dd_sum({0, 0, 0, 0}, SpaceType::Oddo,
                                    {0, 0, 0, 0}, SpaceType::Oddo);
  CHECK(p4.rule == SumRule::OddoOddo);
  CHECK(p4.result == DDInvariant{0, 1, 1, 0});

  CHECK_THROWS_AS(predict_dd_sum({1, 1, 2, 1}, SpaceType::Symp, {0, 0, 0, 0},
                                 SpaceType::Symp),
                  std::invalid_argument);
  CHECK_THROWS_AS(predict_dd_sum({3, 1, 1, 1}, SpaceType::Evo, {0, 1, 1, 0},
                                 SpaceType::Evo),
                  std::invalid_argument);
  CHECK_THROWS_AS(predict_dd_sum({1, 0, 2, 0}, SpaceType::Evo, {0, 1, 1, 0},
                                 SpaceType::Evo),
                  std::invalid_argument);
}

TEST_CASE("prediction oracle: m(I^3) (+) m(I^3)") {
  // Brute-force route: the DD of the explicit 12x12 block involution.
  Involution half =
      standard_involution(SpaceType::Evo, 6, BitMatrix::identity(6).complemented());
  REQUIRE(dd_invariant(half) == DDInvariant{1, 0, 0, 1});
  Involution sum = direct_sum(half, half);
  CHECK(dd_invariant(sum) == DDInvariant{2, 0, 2, 1});
  CHECK(predict_dd_sum(half, half).result == dd_invariant(sum));
}

TEST_CASE("charge multiplication") {
  CHECK(charge_product(Charge{+1}, Charge{-1}) == Charge{-1});
  CHECK(charge_product(Charge{0}, Charge{+1}) == Charge{0});
  CHECK(charge_product(Charge{0}, Charge{-1}) == Charge{0});
  CHECK(charge_product(Charge{-1}, Charge{-1}) == Charge{+1});

  // Multiplicativity across all pairs of dimension-4 representatives.
  auto reps = representatives(SpaceType::Evo, 4);
  for (const auto& [d1, s] : reps)
    for (const auto& [d2, t] : reps) {
      Involution sum = direct_sum(s, t);
      CHECK(charge(sum) ==
            charge_product(charge_of(d1.dd), charge_of(d2.dd)));
    }
}

TEST_CASE("prediction equals computation on all small representative pairs") {
  std::vector<std::pair<SpaceType, Involution>> pieces;
  for (int d : {2, 4})
    for (auto& [desc, rep] : representatives(SpaceType::Symp, d))
      pieces.emplace_back(SpaceType::Symp, rep);
  for (int d : {1, 3})
    for (auto& [desc, rep] : representatives(SpaceType::Oddo, d))
      pieces.emplace_back(SpaceType::Oddo, rep);
  for (int d : {2, 4})
    for (auto& [desc, rep] : representatives(SpaceType::Evo, d))
      pieces.emplace_back(SpaceType::Evo, rep);
  for (const auto& [st, s] : pieces)
    for (const auto& [tt, t] : pieces) {
      SumPrediction pred =
          predict_dd_sum(dd_invariant(s), st, dd_invariant(t), tt);
      DDInvariant computed = dd_invariant(direct_sum(s, t));
      CHECK(pred.result == computed);
      CHECK(computed.D == dd_invariant(s).D + dd_invariant(t).D);
    }
}

TEST_CASE("ODDO alpha characterizations agree") {
  // alpha = 1  <=>  exists w: b(w,w) = 0 and b(w, sw) = 1
  //          <=>  exists v: b(v,v) = 1 and b(v, sv) = 0.
  for (int dim : {3, 5}) {
    BilinearSpace space = standard_space(SpaceType::Oddo, dim);
    for (const Involution& s : enumerate_involutions(space)) {
      bool has_w = false, has_v = false;
      testutil::for_each_vector(dim, [&](const BitVector& v) {
        BitVector sv = multiply(s.matrix(), v);
        bool vv = space.norm(v);
        bool vsv = space.bilinear(v, sv);
        if (!vv && vsv) has_w = true;
        if (vv && !vsv) has_v = true;
      });
      bool a = alpha_invariant(s) == 1;
      CHECK(a == has_w);
      CHECK(a == has_v);
    }
  }
}
