#include "lambda_orders/orders.hpp"

#include <doctest.h>

#include <set>

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

LambdaOrder span_order(std::shared_ptr<const LambdaAlgebra> alg, const QMat& rows) {
  return {alg, IntLattice::from_rows(alg->dim(), rows)};
}

}  // namespace

TEST_CASE("maximal order of the regular 2-set") {
  LambdaOrder m = maximal_order(MSet::regular(Level(2)));
  // in the value coordinates (f(1), f(0)) this is {(a,b) : a = b mod 2}
  CHECK(m.lattice.den == 1);
  CHECK(m.lattice.basis == ZMat{{Int(1), Int(1)}, {Int(0), Int(2)}});
  CHECK(m.lattice.contains({Rat(1), Rat(1)}));
  CHECK(m.lattice.contains({Rat(-1), Rat(1)}));
  CHECK(m.lattice.contains({Rat(2), Rat(0)}));
  CHECK(!m.lattice.contains({Rat(1), Rat(0)}));
  // and equals the Z-span of {1, z}
  CHECK(m.lattice == zmu_image_lattice(*m.algebra));
}

TEST_CASE("maximal order of the character square, by hand") {
  // the algebra of (Z/2)^2 is Q^4 in the value coordinates (f(0),...,f(3));
  // the maximal order is the congruence lattice f(s) = f(0) mod 2
  LambdaOrder m = maximal_order(char_square(2));
  IntLattice expected = IntLattice::from_rows(
      4, {QVec{Rat(1), Rat(1), Rat(1), Rat(1)}, QVec{Rat(0), Rat(2), Rat(0), Rat(0)},
          QVec{Rat(0), Rat(0), Rat(2), Rat(0)}, QVec{Rat(0), Rat(0), Rat(0), Rat(2)}});
  CHECK(m.lattice == expected);
}

TEST_CASE("theorem B at small levels") {
  for (long r = 1; r <= 10; ++r) {
    LambdaOrder m = maximal_order(MSet::regular(Level(r)));
    IntLattice zmu = zmu_image_lattice(*m.algebra);
    CHECK(m.lattice == zmu);
    CHECK(lattice_index(m.lattice, zmu) == 1);
  }
}

TEST_CASE("the maximal order does not depend on the presentation level") {
  MSet s = MSet::regular(Level(3));
  LambdaAlgebra low = algebra_from_mset(s);
  LambdaAlgebra high = algebra_from_mset(s.lift_to_level(6));
  LambdaOrder m_low = maximal_order(std::make_shared<const LambdaAlgebra>(low));
  LambdaOrder m_high = maximal_order(std::make_shared<const LambdaAlgebra>(high));
  QMat t = basis_transfer(low, high);
  QMat rows;
  for (long i = 0; i < m_low.lattice.rank; ++i)
    rows.push_back(qmat_apply(t, m_low.lattice.basis_row(i)));
  CHECK(IntLattice::from_rows(high.dim(), rows) == m_high.lattice);
}

TEST_CASE("group ring of (Z/p)^2 is not maximal") {
  for (long p : {2L, 3L}) {
    GroupRingData gr = group_ring_data(p);
    const LambdaAlgebra& alg = *gr.algebra;

    CHECK(alg.apply_psi(p, gr.x) == qvec_scale(Rat(p), alg.unit()));
    CHECK(alg.mul(gr.x, gr.x) == qvec_scale(Rat(p), gr.x));

    LambdaOrder m = maximal_order(gr.algebra);
    CHECK(m.lattice.contains(gr.x));
    CHECK(!gr.group_ring.contains(gr.x));
    CHECK(lattice_subset(gr.group_ring, m.lattice));
    Int index = lattice_index(gr.group_ring, m.lattice);
    CHECK(index % p == 0);
  }

  // the character matrix of (Z/2)^2 has determinant 16 against Z^4
  GroupRingData gr2 = group_ring_data(2);
  CHECK(lattice_index(gr2.group_ring, IntLattice::standard(4)) == 16);
}

TEST_CASE("verify_order") {
  for (long r : {1L, 2L, 4L, 6L, 9L}) {
    LambdaOrder m = maximal_order(MSet::regular(Level(r)));
    CHECK(verify_order(m).pass());
  }

  auto alg = std::make_shared<const LambdaAlgebra>(
      algebra_from_mset(MSet::regular(Level(2))));
  QVec z = zmu_coords(*alg, 1);

  // Z-span{1, 2z} is a valid (non-maximal) order
  LambdaOrder two_z = span_order(alg, {alg->unit(), qvec_scale(Rat(2), z)});
  CHECK(verify_order(two_z).pass());

  // Z-span{1, z/3} is not multiplicatively closed: (z/3)^2 = 1/9
  LambdaOrder third = span_order(alg, {alg->unit(), qvec_scale(Rat(1, Int(3)), z)});
  VerifyReport rep = verify_order(third);
  CHECK(!rep.pass());
  CHECK(!rep.mult_closed);
  CHECK(!rep.failures.empty());

  // the span of the indicators {(1,0), (0,2)} misses the unit (1,1)
  LambdaOrder mixed = span_order(alg, {QVec{Rat(1), Rat(0)}, QVec{Rat(0), Rat(2)}});
  VerifyReport rep2 = verify_order(mixed);
  CHECK(!rep2.pass());
  CHECK(!rep2.unit);
}

TEST_CASE("maximality certificates") {
  CertificateOptions serial;
  serial.mode = RunMode::serial;

  // maximal orders certify at the primes of their index over Z^n
  for (long r : {2L, 4L, 5L, 6L}) {
    LambdaOrder m = maximal_order(MSet::regular(Level(r)));
    Rat idx = relative_index(m.lattice, IntLattice::standard(m.lattice.dim));
    for (long q : {2L, 3L, 5L}) {
      if (idx.numerator() % q != 0 && idx.denominator() % q != 0) continue;
      CertificateResult res = maximality_certificate(m, q, serial);
      CHECK(res.maximal);
      CHECK(!res.witness.has_value());
    }
  }

  // the non-maximal Z-span{1, 2z} is refuted with witness Z[mu_2]
  auto alg2 = std::make_shared<const LambdaAlgebra>(
      algebra_from_mset(MSet::regular(Level(2))));
  LambdaOrder small =
      span_order(alg2, {alg2->unit(), qvec_scale(Rat(2), zmu_coords(*alg2, 1))});
  CertificateResult res = maximality_certificate(small, 2, serial);
  CHECK(!res.maximal);
  REQUIRE(res.witness.has_value());
  CHECK(*res.witness == zmu_image_lattice(*alg2));

  // Z inside Q is maximal at every prime
  LambdaOrder z = maximal_order(MSet::trivial(Level(1), 1));
  for (long q : {2L, 3L, 5L}) CHECK(maximality_certificate(z, q, serial).maximal);

  // rank 9 is over the enumeration guard
  LambdaOrder big = maximal_order(char_square(3));
  CHECK_THROWS_AS(maximality_certificate(big, 3, serial), lattice_error);
}

namespace {

// all subgroups of (Z/q)^n by closure search over subsets of generators,
// returned as sorted vector sets; independent of the certificate's RREF walk
std::vector<std::vector<std::vector<long>>> all_subspaces(long n, long q) {
  long total = 1;
  for (long i = 0; i < n; ++i) total *= q;
  auto decode = [&](long code) {
    std::vector<long> v(n);
    for (long i = 0; i < n; ++i) {
      v[i] = code % q;
      code /= q;
    }
    return v;
  };
  auto encode = [&](const std::vector<long>& v) {
    long code = 0;
    for (long i = n - 1; i >= 0; --i) code = code * q + v[i];
    return code;
  };
  std::set<std::set<long>> seen;
  // close each subset of single generators; q^n is tiny here
  std::vector<std::set<long>> stack{{0L}};
  seen.insert({0L});
  while (!stack.empty()) {
    std::set<long> cur = stack.back();
    stack.pop_back();
    for (long g = 1; g < total; ++g) {
      if (cur.count(g)) continue;
      std::set<long> next = cur;
      // close under addition
      std::vector<long> work{g};
      while (!work.empty()) {
        long x = work.back();
        work.pop_back();
        if (next.count(x)) continue;
        next.insert(x);
        for (long y : next) {
          std::vector<long> vx = decode(x), vy = decode(y);
          std::vector<long> sum(n);
          for (long i = 0; i < n; ++i) sum[i] = (vx[i] + vy[i]) % q;
          long s = encode(sum);
          if (!next.count(s)) work.push_back(s);
        }
      }
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  std::vector<std::vector<std::vector<long>>> out;
  for (const auto& sub : seen) {
    std::vector<std::vector<long>> vecs;
    for (long code : sub)
      if (code != 0) vecs.push_back(decode(code));
    out.push_back(std::move(vecs));
  }
  return out;
}

}  // namespace

TEST_CASE("certificate agrees with direct verification of every overlattice") {
  // dual route: for each subgroup W of (1/q)M / M build the lattice M + (1/q)W
  // and run the full order verification; the optimized modular kernel must
  // reach the same maximal / non-maximal verdict
  struct Instance {
    LambdaOrder order;
    long q;
  };
  auto alg2 = std::make_shared<const LambdaAlgebra>(
      algebra_from_mset(MSet::regular(Level(2))));
  QVec z = zmu_coords(*alg2, 1);
  std::vector<Instance> instances;
  instances.push_back({span_order(alg2, {alg2->unit(), qvec_scale(Rat(2), z)}), 2});
  instances.push_back({span_order(alg2, {alg2->unit(), qvec_scale(Rat(3), z)}), 3});
  instances.push_back({maximal_order(MSet::regular(Level(2))), 2});
  instances.push_back({maximal_order(MSet::regular(Level(4))), 2});
  instances.push_back({maximal_order(char_square(2)), 2});
  instances.push_back({maximal_order(MSet::regular(Level(3))), 3});

  for (const auto& [m, q] : instances) {
    long n = m.lattice.rank;
    bool any_pass = false;
    IntLattice first_pass = m.lattice;
    std::vector<IntLattice> passing;
    for (const auto& sub : all_subspaces(n, q)) {
      if (sub.empty()) continue;  // W = 0 is M itself
      QMat rows;
      for (long i = 0; i < n; ++i) rows.push_back(m.lattice.basis_row(i));
      for (const auto& w : sub) {
        QVec v = qvec_zero(m.lattice.dim);
        for (long s = 0; s < n; ++s)
          if (w[s]) v = qvec_add(v, qvec_scale(Rat(w[s]), m.lattice.basis_row(s)));
        rows.push_back(qvec_scale(Rat(1, Int(q)), v));
      }
      IntLattice l = IntLattice::from_rows(m.lattice.dim, rows);
      if (l == m.lattice) continue;
      LambdaOrder cand{m.algebra, l};
      if (verify_order(cand).pass()) {
        any_pass = true;
        passing.push_back(l);
      }
    }
    CertificateOptions opts;
    opts.mode = RunMode::serial;
    CertificateResult res = maximality_certificate(m, q, opts);
    CHECK(res.maximal == !any_pass);
    if (!res.maximal) {
      REQUIRE(res.witness.has_value());
      bool witness_found = false;
      for (const auto& l : passing) witness_found = witness_found || l == *res.witness;
      CHECK(witness_found);
      CHECK(verify_order({m.algebra, *res.witness}).pass());
    }
  }
}

TEST_CASE("certificate parallel path matches the serial reference") {
  CertificateOptions serial, parallel;
  serial.mode = RunMode::serial;
  parallel.mode = RunMode::parallel;
  auto alg = std::make_shared<const LambdaAlgebra>(
      algebra_from_mset(MSet::regular(Level(2))));
  LambdaOrder small =
      span_order(alg, {alg->unit(), qvec_scale(Rat(2), zmu_coords(*alg, 1))});
  CertificateResult rs = maximality_certificate(small, 2, serial);
  CertificateResult rp = maximality_certificate(small, 2, parallel);
  CHECK(rs.maximal == rp.maximal);
  CHECK(rs.witness == rp.witness);
  CHECK(rs.candidates_checked == rp.candidates_checked);

  for (long r : {4L, 6L}) {
    LambdaOrder m = maximal_order(MSet::regular(Level(r)));
    CertificateResult ms = maximality_certificate(m, 2, serial);
    CertificateResult mp = maximality_certificate(m, 2, parallel);
    CHECK(ms.maximal == mp.maximal);
    CHECK(ms.witness == mp.witness);
  }
}

TEST_CASE("intersection property") {
  // identity surjection
  MSet s3 = MSet::regular(Level(3));
  std::vector<int> id{0, 1, 2};
  CHECK(intersection_check(MSetMap::make(s3, s3, id)));

  // regular(4) onto regular(2) by reduction mod 2
  CHECK(intersection_check(
      MSetMap::make(MSet::regular(Level(4)), MSet::regular(Level(2)), {0, 1, 0, 1})));

  // free cover of the character square
  MSet s = char_square(2);
  MSet t = MSet::regular(Level(2));
  for (int i = 1; i < s.size(); ++i) t = mset_coproduct(t, MSet::regular(Level(2)));
  std::vector<int> values(t.size());
  for (int i = 0; i < s.size(); ++i)
    for (long a = 0; a < 2; ++a) values[2 * i + a] = s.act(a, i);
  CHECK(intersection_check(MSetMap::make(t, s, values)));

  // non-surjective maps are rejected
  CHECK_THROWS_AS(
      intersection_check(MSetMap::make(s3, MSet::regular(Level(3)), {0, 0, 0})),
      algebra_error);
}

TEST_CASE("the maximal order contains every handmade suborder") {
  auto alg = std::make_shared<const LambdaAlgebra>(
      algebra_from_mset(MSet::regular(Level(2))));
  LambdaOrder m = maximal_order(alg);
  QVec z = zmu_coords(*alg, 1);
  for (const QMat& rows : {QMat{alg->unit(), qvec_scale(Rat(2), z)},
                           QMat{alg->unit(), qvec_scale(Rat(4), z)},
                           QMat{alg->unit(), z}}) {
    LambdaOrder sub = span_order(alg, rows);
    CHECK(verify_order(sub).pass());
    CHECK(lattice_subset(sub.lattice, m.lattice));
  }
  GroupRingData gr = group_ring_data(3);
  CHECK(lattice_subset(gr.group_ring, maximal_order(gr.algebra).lattice));
}

TEST_CASE("degenerate inputs") {
  LambdaOrder empty = maximal_order(MSet::trivial(Level(5), 0));
  CHECK(empty.lattice.rank == 0);
  CHECK(verify_order(empty).pass());

  LambdaOrder point = maximal_order(MSet::trivial(Level(1), 1));
  CHECK(point.lattice == IntLattice::standard(1));
}

TEST_CASE("membership map columns are integral exactly on the maximal order") {
  MSet s = char_square(2);
  auto alg = std::make_shared<const LambdaAlgebra>(algebra_from_mset(s));
  LambdaOrder m = maximal_order(alg);
  QMat map = membership_map(*alg);
  for (long i = 0; i < m.lattice.rank; ++i) {
    QVec image = qmat_apply(map, m.lattice.basis_row(i));
    for (const Rat& q : image) CHECK(is_integer(q));
  }
  // x = (2,0,0,0), value 2 at the origin, maps into Z[mu_2]^S; its half does not
  QVec x = qvec_zero(4);
  x[0] = Rat(2);
  QVec image = qmat_apply(map, x);
  for (const Rat& q : image) CHECK(is_integer(q));
  bool all_integral = true;
  for (const Rat& q : qmat_apply(map, qvec_scale(Rat(1, Int(2)), x)))
    all_integral = all_integral && is_integer(q);
  CHECK(!all_integral);
}
