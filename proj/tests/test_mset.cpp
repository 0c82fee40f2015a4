#include "lambda_orders/mset.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace lambda_orders;

namespace {

// small deterministic family used by the property checks
std::vector<MSet> small_corpus() {
  std::vector<MSet> out;
  for (long r : {1, 2, 3, 4, 6, 8, 12}) out.push_back(MSet::regular(Level(r)));
  out.push_back(MSet::trivial(Level(6), 3));
  out.push_back(MSet::trivial(Level(1), 2));
  out.push_back(mset_product(MSet::regular(Level(2)), MSet::regular(Level(3))));
  out.push_back(mset_coproduct(MSet::regular(Level(4)), MSet::trivial(Level(2), 1)));
  out.push_back(MSet::regular(Level(4)).lift_to_level(8));
  return out;
}

}  // namespace

TEST_CASE("make validates the monoid axioms") {
  CHECK(MSet::make(Level(1), {{0}}).size() == 1);

  MSet reg4 = MSet::make(Level(4), MSet::regular(Level(4)).table());
  CHECK(reg4 == MSet::regular(Level(4)));

  // identity axiom: at r=2 the residue 1 must act trivially
  std::vector<std::vector<int>> bad{{0, 1}, {1, 0}};
  try {
    MSet::make(Level(2), bad);
    CHECK(false);
  } catch (const mset_error& e) {
    CHECK(e.kind == mset_error::Kind::identity_axiom);
  }

  // associativity: action(0, action(0, s)) must equal action(0, s)
  std::vector<std::vector<int>> assoc{{1, 0}, {0, 1}};
  try {
    MSet::make(Level(2), assoc);
    CHECK(false);
  } catch (const mset_error& e) {
    CHECK(e.kind == mset_error::Kind::associativity);
  }

  CHECK_THROWS_AS(MSet::make(Level(3), {{0}, {0}}), mset_error);  // wrong row count
  CHECK_THROWS_AS(MSet::make(Level(1), {{5}}), mset_error);       // entry out of range
}

TEST_CASE("regular M-set") {
  MSet r2 = MSet::regular(Level(2));
  CHECK(r2.size() == 2);
  CHECK(r2.act(0, 1) == 0);
  CHECK(r2.act(1, 1) == 1);

  CHECK(MSet::regular(Level(6)).act(2, 3) == 0);  // 2*3 = 0 mod 6
  CHECK(MSet::regular(Level(1)).size() == 1);
}

TEST_CASE("product and coproduct") {
  MSet r2 = MSet::regular(Level(2));
  MSet p = mset_product(r2, r2);
  CHECK(p.size() == 4);
  for (long a = 0; a < 2; ++a)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        CHECK(p.act(a, product_index(x, y, 2)) ==
              product_index(r2.act(a, x), r2.act(a, y), 2));

  MSet single = MSet::trivial(Level(1), 1);
  MSet c = mset_coproduct(single, single);
  CHECK(c.size() == 2);
  CHECK(c.act(0, 0) == 0);
  CHECK(c.act(0, 1) == 1);

  for (const MSet& s : small_corpus())
    CHECK(mset_product(s, single).isomorphic(s));  // unit law

  // levels are lifted to the lcm
  CHECK(mset_product(MSet::regular(Level(2)), MSet::regular(Level(3))).level() == 6);
}

TEST_CASE("product and coproduct are commutative and associative up to isomorphism") {
  MSet a = MSet::regular(Level(2));
  MSet b = MSet::regular(Level(4));
  MSet c = MSet::trivial(Level(2), 2);
  CHECK(mset_product(a, b).isomorphic(mset_product(b, a)));
  CHECK(mset_coproduct(a, b).isomorphic(mset_coproduct(b, a)));
  CHECK(mset_product(mset_product(a, b), c).isomorphic(mset_product(a, mset_product(b, c))));
  CHECK(mset_coproduct(mset_coproduct(a, b), c)
            .isomorphic(mset_coproduct(a, mset_coproduct(b, c))));
}

TEST_CASE("image factorization") {
  MSet r4 = MSet::regular(Level(4));
  std::vector<int> id{0, 1, 2, 3};
  ImageFactorization f = mset_image(MSetMap::make(r4, r4, id));
  CHECK(f.image == r4);

  // constant map to the fixed point 0
  ImageFactorization g = mset_image(MSetMap::make(r4, r4, {0, 0, 0, 0}));
  CHECK(g.image.size() == 1);

  // the free cover of S surjects onto S with image S
  MSet s = mset_coproduct(MSet::regular(Level(2)), MSet::trivial(Level(2), 1));
  MSet free = mset_coproduct(MSet::regular(Level(2)),
                             mset_coproduct(MSet::regular(Level(2)),
                                            MSet::regular(Level(2))));
  std::vector<int> values(free.size());
  for (int i = 0; i < s.size(); ++i)
    for (long a = 0; a < 2; ++a) values[2 * i + a] = s.act(a, i);
  MSetMap cover = MSetMap::make(free, s, values);
  CHECK(cover.surjective());
  ImageFactorization h = mset_image(cover);
  CHECK(h.image == s);

  // epi-mono: onto is surjective, inclusion is injective, and they compose to f
  CHECK(h.onto.surjective());
  std::set<int> incl_values(h.inclusion.values().begin(), h.inclusion.values().end());
  CHECK((long)incl_values.size() == h.image.size());
  for (int x = 0; x < free.size(); ++x)
    CHECK(h.inclusion.values()[h.onto.values()[x]] == values[x]);
}

TEST_CASE("zero image and psi_minus_one") {
  for (long r : {1, 2, 3, 4, 6, 8}) {
    std::vector<int> zs = MSet::regular(Level(r)).zero_image();
    CHECK(zs == std::vector<int>{0});
  }

  // (Z/2)^2 with the scalar action: 0S is the origin alone
  std::vector<std::vector<int>> table(2, std::vector<int>(4));
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 2; ++y) {
      table[0][x * 2 + y] = 0;
      table[1][x * 2 + y] = (int)(x * 2 + y);
    }
  MSet v = MSet::make(Level(2), table);
  CHECK(v.zero_image() == std::vector<int>{0});

  std::vector<int> inv = MSet::regular(Level(5)).psi_minus_one();
  CHECK(inv[1] == 4);
  CHECK(inv[2] == 3);
  for (int s = 0; s < 5; ++s) CHECK(inv[inv[s]] == s);  // an involution

  for (const MSet& s : small_corpus()) {
    // action(0) is idempotent, action(r-1) is an involution, 0S is fixed
    for (int x = 0; x < s.size(); ++x) {
      CHECK(s.act(0, s.act(0, x)) == s.act(0, x));
      CHECK(s.act(s.level() - 1, s.act(s.level() - 1, x)) == x);
    }
    for (int z : s.zero_image())
      for (long a = 0; a < s.level(); ++a) CHECK(s.act(a, z) == z);
  }
}

TEST_CASE("minimal level") {
  auto [l1, m1] = MSet::trivial(Level(6), 3).minimal_level();
  CHECK(l1.value() == 1);
  CHECK(m1.size() == 3);

  MSet lifted = MSet::regular(Level(4)).lift_to_level(8);
  auto [l2, m2] = lifted.minimal_level();
  CHECK(l2.value() == 4);
  CHECK(m2 == MSet::regular(Level(4)));

  auto [l3, m3] = MSet::regular(Level(4)).minimal_level();
  CHECK(l3.value() == 4);
  CHECK(m3 == MSet::regular(Level(4)));

  for (const MSet& s : small_corpus()) {
    auto [la, ma] = s.minimal_level();
    auto [lb, mb] = ma.minimal_level();
    CHECK(la.value() == lb.value());  // idempotent
    CHECK(ma == mb);
  }
}

TEST_CASE("factoring levels are closed under gcd") {
  // scan all divisor levels the table factors through and check gcd closure
  for (const MSet& s : small_corpus()) {
    std::vector<long> factoring;
    for (long d : divisors(s.level())) {
      bool constant = true;
      for (long a = 0; a < s.level() && constant; ++a)
        if (s.table()[a] != s.table()[mod_l(a, d)]) constant = false;
      if (constant) factoring.push_back(d);
    }
    for (long d1 : factoring)
      for (long d2 : factoring) {
        long g = std::gcd(d1, d2);
        CHECK(std::find(factoring.begin(), factoring.end(), g) != factoring.end());
      }
  }
}

TEST_CASE("maps must be equivariant") {
  MSet r4 = MSet::regular(Level(4));
  CHECK_THROWS_AS(MSetMap::make(r4, r4, {1, 0, 2, 3}), mset_error);
  // multiplication by 2 is equivariant: 0 -> 0, 1 -> 2, 2 -> 0, 3 -> 2
  MSetMap twice = MSetMap::make(r4, r4, {0, 2, 0, 2});
  CHECK(!twice.surjective());
}

TEST_CASE("empty M-set") {
  MSet empty = MSet::trivial(Level(3), 0);
  CHECK(empty.size() == 0);
  CHECK(empty.zero_image().empty());
  CHECK(mset_product(empty, MSet::regular(Level(2))).size() == 0);
  CHECK(mset_coproduct(empty, MSet::regular(Level(2))).size() == 2);
  auto [l, m] = empty.minimal_level();
  CHECK(l.value() == 1);
  CHECK(m.size() == 0);
}

TEST_CASE("isomorphism is decided by backtracking") {
  MSet a = mset_coproduct(MSet::regular(Level(2)), MSet::trivial(Level(2), 1));
  MSet b = mset_coproduct(MSet::trivial(Level(2), 1), MSet::regular(Level(2)));
  auto iso = a.isomorphism(b);
  REQUIRE(iso.has_value());
  for (long u = 0; u < 2; ++u)
    for (int x = 0; x < a.size(); ++x) CHECK((*iso)[a.act(u, x)] == b.act(u, (*iso)[x]));
  CHECK(!a.isomorphic(MSet::regular(Level(2))));
  CHECK(!MSet::regular(Level(4)).isomorphic(MSet::trivial(Level(4), 4)));
}
