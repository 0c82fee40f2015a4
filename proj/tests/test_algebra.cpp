#include "lambda_orders/lambda_algebra.hpp"
#include "lambda_orders/orders.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lambda_orders;

namespace {

MSet char_square(long p) {
  std::vector<std::vector<int>> table(p, std::vector<int>(p * p));
  for (long a = 0; a < p; ++a)
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y)
        table[a][x * p + y] = (int)(mod_l(a * x, p) * p + mod_l(a * y, p));
  return MSet::make(Level(p), std::move(table));
}

}  // namespace

TEST_CASE("the regular M-set gives Q[z]/(z^r - 1)") {
  for (long r : {2L, 4L, 6L}) {
    LambdaAlgebra alg = algebra_from_mset(MSet::regular(Level(r)));
    CHECK(alg.dim() == r);
    // z^i z^j = z^{i+j} and psi_a(z^i) = z^{ai} under the power-basis embedding
    std::vector<QVec> z(r);
    for (long i = 0; i < r; ++i) z[i] = zmu_coords(alg, i);
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < r; ++j)
        CHECK(alg.mul(z[i], z[j]) == z[mod_l(i + j, r)]);
    for (long a = 0; a < r; ++a)
      for (long i = 0; i < r; ++i)
        CHECK(alg.apply_psi(a, z[i]) == z[mod_l(a * i, r)]);
    CHECK(z[0] == alg.unit());
  }
}

TEST_CASE("the singleton gives Q") {
  LambdaAlgebra alg = algebra_from_mset(MSet::trivial(Level(3), 1));
  CHECK(alg.dim() == 1);
  for (long a = 0; a < 3; ++a) CHECK(alg.psi(a) == qmat_identity(1));
  CHECK(alg.unit() == QVec{Rat(1)});
}

TEST_CASE("the character square gives Q^4 with a projection-like psi(0)") {
  LambdaAlgebra alg = algebra_from_mset(char_square(2));
  CHECK(alg.dim() == 4);
  // all orbits are singletons with block Q, so the basis is the indicators;
  // psi(0) maps the indicator of the origin to the constant function 1
  QMat expected = qmat_zero(4, 4);
  for (long i = 0; i < 4; ++i) expected[i][0] = Rat(1);
  CHECK(alg.psi(0) == expected);
  CHECK(alg.psi(1) == qmat_identity(4));
  // multiplication is pointwise on indicators
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) {
      QVec e_i = qvec_zero(4), e_j = qvec_zero(4);
      e_i[i] = Rat(1);
      e_j[j] = Rat(1);
      QVec prod = alg.mul(e_i, e_j);
      CHECK(prod == (i == j ? e_i : qvec_zero(4)));
    }
}

TEST_CASE("component fields") {
  auto fields4 = component_fields(MSet::regular(Level(4)));
  REQUIRE(fields4.size() == 3);
  // orbits ordered by smallest element: {0}, {1,3}, {2}
  CHECK(fields4[0].orbit == std::vector<int>{0});
  CHECK(fields4[0].degree == 1);
  CHECK(fields4[0].conductor == 1);
  CHECK(fields4[1].orbit == std::vector<int>{1, 3});
  CHECK(fields4[1].degree == 2);
  CHECK(fields4[1].conductor == 4);
  CHECK(fields4[2].orbit == std::vector<int>{2});
  CHECK(fields4[2].degree == 1);
  CHECK(fields4[2].conductor == 1);

  for (const auto& f : component_fields(MSet::trivial(Level(6), 4))) {
    CHECK(f.degree == 1);
    CHECK(f.conductor == 1);
  }

  auto fields2 = component_fields(MSet::regular(Level(2)));
  REQUIRE(fields2.size() == 2);
  CHECK(fields2[0].degree == 1);
  CHECK(fields2[1].degree == 1);

  // degrees always add up to the number of points
  for (long r : {5L, 8L, 12L}) {
    long total = 0;
    for (const auto& f : component_fields(MSet::regular(Level(r)))) total += f.degree;
    CHECK(total == r);
  }
}

TEST_CASE("points recovers the M-set") {
  for (long r : {1L, 2L, 5L, 6L}) {
    MSet s = MSet::regular(Level(r));
    CHECK(points(algebra_from_mset(s)).isomorphic(s));
  }
  CHECK(points(algebra_from_mset(MSet::trivial(Level(4), 1))).size() == 1);

  // points of a coproduct: the disjoint union of the points
  MSet a = MSet::regular(Level(4));
  MSet b = char_square(2);
  MSet c = mset_coproduct(a, b);
  MSet back = points(algebra_from_mset(c));
  CHECK(back.isomorphic(c));
  CHECK(back.isomorphic(mset_coproduct(points(algebra_from_mset(a)),
                                       points(algebra_from_mset(b)))));
}

TEST_CASE("is_field_check") {
  CHECK(is_field_check(algebra_from_mset(MSet::trivial(Level(5), 1))).is_field);

  LambdaAlgebra alg3 = algebra_from_mset(MSet::regular(Level(3)));
  FieldCheck fc = is_field_check(alg3);
  CHECK(!fc.is_field);
  REQUIRE(fc.idempotent.has_value());
  const QVec& e = *fc.idempotent;
  CHECK(alg3.mul(e, e) == e);
  CHECK(!qvec_is_zero(e));
  CHECK(e != alg3.unit());
  // the idempotent is supported on the block of the monoid-fixed point 0
  int orbit0 = alg3.orbits().orbit_of[0];
  CHECK(e[alg3.basis_offset(orbit0)] == Rat(1));

  CHECK(!is_field_check(algebra_from_mset(char_square(2))).is_field);
  CHECK(!is_field_check(algebra_from_mset(MSet::trivial(Level(1), 0))).is_field);
}

TEST_CASE("psi matrices satisfy the monoid law and are ring maps") {
  for (const MSet& s : {MSet::regular(Level(6)), char_square(2),
                        mset_coproduct(MSet::regular(Level(4)), MSet::trivial(Level(2), 1))}) {
    LambdaAlgebra alg = algebra_from_mset(s);
    long r = alg.level();
    for (long a = 0; a < r; ++a)
      for (long b = 0; b < r; ++b)
        CHECK(qmat_mul(alg.psi(a), alg.psi(b)) == alg.psi(mod_l(a * b, r)));
    CHECK(alg.psi(1) == qmat_identity(alg.dim()));
    for (long p : primes_up_to(13)) {
      // psi_p(unit) = unit and psi_p(f g) = psi_p(f) psi_p(g) on basis pairs
      CHECK(alg.apply_psi(p, alg.unit()) == alg.unit());
      for (long i = 0; i < alg.dim(); ++i)
        for (long j = 0; j < alg.dim(); ++j) {
          QVec lhs = alg.apply_psi(p, alg.structure_constant(i, j));
          QVec e_i = qvec_zero(alg.dim()), e_j = qvec_zero(alg.dim());
          e_i[i] = Rat(1);
          e_j[j] = Rat(1);
          QVec rhs = alg.mul(alg.apply_psi(p, e_i), alg.apply_psi(p, e_j));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("the unit is a two-sided identity") {
  LambdaAlgebra alg = algebra_from_mset(MSet::regular(Level(6)));
  for (long i = 0; i < alg.dim(); ++i) {
    QVec e = qvec_zero(alg.dim());
    e[i] = Rat(1);
    CHECK(alg.mul(alg.unit(), e) == e);
    CHECK(alg.mul(e, alg.unit()) == e);
  }
}

TEST_CASE("algebra pullback is a psi-equivariant ring map") {
  // free cover of the character square by four regular 2-sets
  MSet s = char_square(2);
  MSet t = MSet::regular(Level(2));
  for (int i = 1; i < s.size(); ++i) t = mset_coproduct(t, MSet::regular(Level(2)));
  std::vector<int> values(t.size());
  for (int i = 0; i < s.size(); ++i)
    for (long a = 0; a < 2; ++a) values[2 * i + a] = s.act(a, i);
  MSetMap cover = MSetMap::make(t, s, values);

  LambdaAlgebra alg_t = algebra_from_mset(cover.source());
  LambdaAlgebra alg_s = algebra_from_mset(cover.target());
  QMat incl = algebra_pullback(alg_t, alg_s, cover);

  // unit maps to unit, products map to products, psi commutes
  CHECK(qmat_apply(incl, alg_s.unit()) == alg_t.unit());
  for (long i = 0; i < alg_s.dim(); ++i)
    for (long j = 0; j < alg_s.dim(); ++j) {
      QVec e_i = qvec_zero(alg_s.dim()), e_j = qvec_zero(alg_s.dim());
      e_i[i] = Rat(1);
      e_j[j] = Rat(1);
      QVec lhs = qmat_apply(incl, alg_s.structure_constant(i, j));
      QVec rhs = alg_t.mul(qmat_apply(incl, e_i), qmat_apply(incl, e_j));
      CHECK(lhs == rhs);
    }
  for (long a = 0; a < 2; ++a)
    CHECK(qmat_mul(alg_t.psi(a), incl) == qmat_mul(incl, alg_s.psi(a)));

  // the pullback of an injective-on-points surjection is injective
  CHECK(qmat_rank(incl) == (size_t)alg_s.dim());
}

TEST_CASE("basis transfer between levels") {
  MSet s = MSet::regular(Level(2));
  LambdaAlgebra low = algebra_from_mset(s);
  LambdaAlgebra high = algebra_from_mset(s.lift_to_level(4));
  QMat t = basis_transfer(low, high);
  CHECK(qmat_apply(t, low.unit()) == high.unit());
  // transfer respects multiplication
  for (long i = 0; i < low.dim(); ++i)
    for (long j = 0; j < low.dim(); ++j) {
      QVec e_i = qvec_zero(low.dim()), e_j = qvec_zero(low.dim());
      e_i[i] = Rat(1);
      e_j[j] = Rat(1);
      CHECK(qmat_apply(t, low.structure_constant(i, j)) ==
            high.mul(qmat_apply(t, e_i), qmat_apply(t, e_j)));
    }
}

TEST_CASE("empty M-set gives the zero algebra") {
  LambdaAlgebra alg = algebra_from_mset(MSet::trivial(Level(4), 0));
  CHECK(alg.dim() == 0);
  CHECK(alg.unit().empty());
  CHECK(points(alg).size() == 0);
}
