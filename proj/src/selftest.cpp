#include "lambda_orders/selftest.hpp"

#include "lambda_orders/cyclotomic.hpp"
#include "lambda_orders/frob_action.hpp"
#include "lambda_orders/group_algebra.hpp"
#include "lambda_orders/lambda_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lambda_orders {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& msg) {
    if (!ok) return;  // keep the first failure
    ok = false;
    detail << msg;
  }
  void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
};

MSet cyclic_sub(const MSet& ambient, int generator) {
  // sub-M-set generated by one point, as the image of the free M-set
  std::vector<int> values(ambient.level());
  for (long a = 0; a < ambient.level(); ++a) values[a] = ambient.act(a, generator);
  MSetMap f = MSetMap::make(MSet::regular(Level(ambient.level())), ambient, values);
  return mset_image(f).image;
}

MSet char_square_mset(long p) {
  // (Z/p)^2 with a * (x, y) = (ax, ay)
  std::vector<std::vector<int>> table(p, std::vector<int>(p * p));
  for (long a = 0; a < p; ++a)
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y)
        table[a][x * p + y] = (int)(mod_l(a * x, p) * p + mod_l(a * y, p));
  return MSet::make(Level(p), std::move(table));
}

}  // namespace

std::vector<MSet> acceptance_corpus(bool quick) {
  std::vector<MSet> out;
  for (long r = 1; r <= 8; ++r) out.push_back(MSet::regular(Level(r)));
  out.push_back(char_square_mset(2));
  out.push_back(char_square_mset(2).lift_to_level(4));
  for (auto [r, n] : {std::pair<long, long>{1, 1}, {1, 3}, {2, 1}, {2, 2}, {3, 2},
                      {4, 1}, {4, 3}, {5, 2}, {6, 1}, {6, 3}, {8, 2}, {10, 1}, {12, 1},
                      {12, 2}})
    out.push_back(MSet::trivial(Level(r), n));
  if (quick) return out;

  for (auto [r, m] : {std::pair<long, long>{2, 4}, {2, 8}, {2, 12}, {3, 6}, {3, 12},
                      {4, 8}, {4, 12}, {5, 10}, {6, 12}})
    out.push_back(MSet::regular(Level(r)).lift_to_level(m));
  for (auto [a, b] : {std::pair<long, long>{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}})
    out.push_back(mset_product(MSet::regular(Level(a)), MSet::regular(Level(b))));
  for (auto [a, b] : {std::pair<long, long>{2, 2}, {2, 3}, {3, 3}, {2, 4}, {4, 4},
                      {1, 5}, {1, 6}, {2, 6}, {3, 4}, {1, 7}})
    out.push_back(mset_coproduct(MSet::regular(Level(a)), MSet::regular(Level(b))));
  out.push_back(mset_coproduct(MSet::trivial(Level(2), 1), char_square_mset(2)));
  out.push_back(mset_coproduct(MSet::trivial(Level(3), 2), MSet::regular(Level(3))));
  out.push_back(mset_product(MSet::trivial(Level(2), 2), MSet::regular(Level(2))));
  out.push_back(mset_product(MSet::trivial(Level(4), 2), MSet::regular(Level(4))));

  // cyclic sub-M-sets of products
  {
    MSet p44 = mset_product(MSet::regular(Level(4)), MSet::regular(Level(4)));
    out.push_back(cyclic_sub(p44, product_index(1, 2, 4)));
    out.push_back(cyclic_sub(p44, product_index(2, 2, 4)));
    MSet p66 = mset_product(MSet::regular(Level(6)), MSet::regular(Level(6)));
    out.push_back(cyclic_sub(p66, product_index(1, 3, 6)));
    out.push_back(cyclic_sub(p66, product_index(2, 4, 6)));
    out.push_back(cyclic_sub(p66, product_index(3, 2, 6)));
    MSet p88 = mset_product(MSet::regular(Level(8)), MSet::regular(Level(8)));
    out.push_back(cyclic_sub(p88, product_index(1, 2, 8)));
    out.push_back(cyclic_sub(p88, product_index(2, 4, 8)));
    MSet p12 = mset_product(MSet::regular(Level(12)), MSet::regular(Level(12)));
    out.push_back(cyclic_sub(p12, product_index(2, 4, 12)));
    out.push_back(cyclic_sub(p12, product_index(3, 6, 12)));
    out.push_back(cyclic_sub(p12, product_index(4, 6, 12)));
    out.push_back(cyclic_sub(p12, product_index(6, 4, 12)));
  }
  // images of self-maps of a coproduct of free M-sets
  {
    MSet x = mset_coproduct(MSet::regular(Level(4)), MSet::regular(Level(4)));
    std::vector<int> v1(8), v2(8);
    for (long a = 0; a < 4; ++a) {
      v1[a] = x.act(a, 4 + 2);
      v1[4 + a] = x.act(a, 4 + 1);
      v2[a] = x.act(a, 2);
      v2[4 + a] = x.act(a, 0);
    }
    out.push_back(mset_image(MSetMap::make(x, x, v1)).image);
    out.push_back(mset_image(MSetMap::make(x, x, v2)).image);
  }
  for (const MSet& s : out) {
    (void)s;
    assert(s.size() <= 8 && s.level() <= 12);
  }
  return out;
}

namespace {

// ---- criterion 1 -----------------------------------------------------------

CriterionResult criterion_theorem_b(const AcceptanceOptions& opts) {
  Check ck;
  long top = opts.quick ? 8 : 20;
  for (long r = 1; r <= top && ck.ok; ++r) {
    LambdaOrder m = maximal_order(MSet::regular(Level(r)));
    IntLattice zmu = zmu_image_lattice(*m.algebra);
    ck.require(m.lattice == zmu,
               "maximal order differs from Z[mu_r] at r=" + std::to_string(r));
    if (ck.ok)
      ck.require(lattice_index(m.lattice, zmu) == 1,
                 "index is not 1 at r=" + std::to_string(r));
  }
  if (ck.ok) ck.detail << "r = 1.." << top << ", identical HNF each time";
  return {1, "theorem-b reproduction (orders)", ck.ok, ck.detail.str(), 0};
}

// ---- criterion 2 -----------------------------------------------------------

CriterionResult criterion_group_ring(const AcceptanceOptions& opts) {
  Check ck;
  for (long p : {2L, 3L}) {
    GroupRingData gr = group_ring_data(p);
    const LambdaAlgebra& alg = *gr.algebra;
    QVec p_one = qvec_scale(Rat(p), alg.unit());
    ck.require(alg.apply_psi(p, gr.x) == p_one,
               "psi_p(x) != p at p=" + std::to_string(p));
    ck.require(alg.mul(gr.x, gr.x) == qvec_scale(Rat(p), gr.x),
               "x^2 != p x at p=" + std::to_string(p));
    LambdaOrder m = maximal_order(gr.algebra);
    ck.require(m.lattice.contains(gr.x), "x is not in the maximal order, p=" +
                                             std::to_string(p));
    ck.require(!gr.group_ring.contains(gr.x),
               "x lies in the group-ring lattice, p=" + std::to_string(p));
    Int index = lattice_index(gr.group_ring, m.lattice);
    ck.require(index % p == 0, "index not divisible by p=" + std::to_string(p));
    if (ck.ok)
      ck.detail << "p=" << p << " index " << to_string(index) << "; ";
  }
  (void)opts;
  return {2, "remark-3.2 group-ring non-maximality (orders)", ck.ok, ck.detail.str(), 0};
}

// ---- criterion 3 -----------------------------------------------------------

std::vector<std::vector<int>> all_self_maps(long n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.push_back(cur);
    long i = 0;
    while (i < n && cur[i] == n - 1) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

std::vector<std::vector<int>> all_involutions(long n) {
  std::vector<std::vector<int>> out;
  for (const auto& f : all_self_maps(n)) {
    bool inv = true;
    for (long i = 0; i < n && inv; ++i)
      if (f[f[i]] != i) inv = false;
    if (inv) out.push_back(f);
  }
  return out;
}

bool maps_commute(const std::vector<int>& f, const std::vector<int>& g) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[g[i]] != g[f[i]]) return false;
  return true;
}

struct OracleInstance {
  long n;
  long c;
  std::map<long, std::vector<int>> unit_action;
  std::map<long, std::vector<int>> exceptional;
};

std::vector<OracleInstance> oracle_corpus(bool quick) {
  std::vector<OracleInstance> out;
  std::vector<long> sizes = quick ? std::vector<long>{1, 2} : std::vector<long>{1, 2, 3};
  std::vector<long> levels = quick ? std::vector<long>{1, 2} : std::vector<long>{1, 2, 3, 4};
  for (long n : sizes) {
    auto maps = all_self_maps(n);
    auto invs = all_involutions(n);
    std::vector<int> id = maps.front();
    for (long i = 0; i < n; ++i) id[i] = (int)i;
    for (long c : levels) {
      bool has_sigma = euler_phi(c) == 2;
      std::vector<std::vector<int>> sigmas = has_sigma ? invs
                                                       : std::vector<std::vector<int>>{id};
      for (const auto& sigma : sigmas) {
        std::map<long, std::vector<int>> units;
        if (c == 1) units[0] = id;
        else {
          for (long u : units_mod(c)) units[u] = (u == 1) ? id : sigma;
        }
        std::vector<long> must;
        for (auto [p, e] : factorize(c)) must.push_back(p);
        for (int mask = 0; mask < 4; ++mask) {
          std::vector<long> exc;
          if (mask & 1) exc.push_back(2);
          if (mask & 2) exc.push_back(3);
          bool covers = true;
          for (long p : must)
            if (std::find(exc.begin(), exc.end(), p) == exc.end()) covers = false;
          if (!covers) continue;
          // enumerate the exceptional maps, commuting with sigma and pairwise
          if (exc.empty()) {
            out.push_back({n, c, units, {}});
            continue;
          }
          if (exc.size() == 1) {
            for (const auto& f : maps) {
              if (!maps_commute(f, sigma)) continue;
              out.push_back({n, c, units, {{exc[0], f}}});
            }
            continue;
          }
          for (const auto& f : maps) {
            if (!maps_commute(f, sigma)) continue;
            for (const auto& g : maps) {
              if (!maps_commute(g, sigma) || !maps_commute(f, g)) continue;
              out.push_back({n, c, units, {{2, f}, {3, g}}});
            }
          }
        }
      }
    }
  }
  return out;
}

CriterionResult criterion_oracle(const AcceptanceOptions& opts) {
  Check ck;
  std::vector<OracleInstance> corpus = oracle_corpus(opts.quick);
  long yes_count = 0, no_count = 0;
  std::vector<std::string> errors(corpus.size());
  std::vector<char> is_yes(corpus.size(), 0);

  bool par = opts.mode == RunMode::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
  for (long i = 0; i < (long)corpus.size(); ++i) {
    const OracleInstance& inst = corpus[i];
    std::string err;
    try {
      FrobPresentation pres =
          FrobPresentation::make(inst.n, inst.c, inst.unit_action, inst.exceptional);
      Verdict v = check_factors(pres);
      if (v.factors) {
        is_yes[i] = 1;
        auto hit = brute_force_factor(pres, 2 * v.level);
        if (!hit) {
          err = "criterion says yes, oracle found nothing";
        } else if (hit->first > v.level) {
          err = "oracle level exceeds the criterion level";
        } else {
          long common = lcm_l(v.level, hit->first);
          if (!(v.mset->lift_to_level(common) == hit->second.lift_to_level(common)))
            err = "criterion and oracle tables disagree";
        }
      } else {
        auto hit = brute_force_factor(pres, 36);
        if (hit) err = "criterion says no, oracle factored at r=" +
                       std::to_string(hit->first);
      }
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    errors[i] = std::move(err);
  }
  (void)par;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (is_yes[i]) ++yes_count;
    else ++no_count;
    if (!errors[i].empty()) {
      ck.fail("instance " + std::to_string(i) + ": " + errors[i]);
      break;
    }
  }
  if (ck.ok)
    ck.detail << corpus.size() << " presentations (" << yes_count << " yes, "
              << no_count << " no), exact agreement";
  return {3, "theorem-a criterion vs exhaustive oracle (factorization)", ck.ok,
          ck.detail.str(), 0};
}

// ---- criterion 4 -----------------------------------------------------------

CriterionResult criterion_round_trip(const AcceptanceOptions& opts) {
  Check ck;
  std::vector<MSet> corpus = acceptance_corpus(opts.quick);
  if (!opts.quick)
    ck.require((long)corpus.size() >= 50,
               "corpus has fewer than 50 M-sets: " + std::to_string(corpus.size()));
  for (size_t i = 0; i < corpus.size() && ck.ok; ++i) {
    const MSet& s = corpus[i];
    LambdaAlgebra alg = algebra_from_mset(s);
    ck.require(alg.dim() == s.size(), "dimension mismatch at corpus " + std::to_string(i));
    if (!ck.ok) break;
    MSet back = points(alg);
    ck.require(back.isomorphic(s), "points round trip failed at corpus " +
                                       std::to_string(i));
  }
  if (ck.ok) ck.detail << corpus.size() << " M-sets, points(algebra(S)) ~ S each time";
  return {4, "anti-equivalence round trip (lambda-algebra)", ck.ok, ck.detail.str(), 0};
}

// ---- criterion 5 -----------------------------------------------------------

CriterionResult criterion_order_invariants(const AcceptanceOptions& opts) {
  Check ck;
  std::vector<MSet> corpus = acceptance_corpus(opts.quick);
  long top = opts.quick ? 6 : 20;
  for (long r = 9; r <= top; ++r) corpus.push_back(MSet::regular(Level(r)));
  long count = 0;
  for (size_t i = 0; i < corpus.size() && ck.ok; ++i) {
    LambdaOrder m = maximal_order(corpus[i]);
    VerifyReport rep = verify_order(m, opts.prime_bound);
    ++count;
    if (!rep.pass())
      ck.fail("verify_order failed at corpus " + std::to_string(i) + ": " +
              (rep.failures.empty() ? "?" : rep.failures.front()));
  }
  if (ck.ok)
    ck.detail << count << " maximal orders, all unit/closure/psi/frobenius checks pass "
              << "(prime bound " << opts.prime_bound << ")";
  return {5, "lambda-order invariants (orders)", ck.ok, ck.detail.str(), 0};
}

// ---- criterion 6 -----------------------------------------------------------

std::vector<long> small_prime_divisors(const Rat& q) {
  std::vector<long> out;
  for (long p : {2L, 3L, 5L})
    if (q.numerator() % p == 0 || q.denominator() % p == 0) out.push_back(p);
  return out;
}

CriterionResult criterion_certificates(const AcceptanceOptions& opts) {
  Check ck;
  CertificateOptions copts;
  copts.mode = opts.mode;
  copts.prime_bound = opts.prime_bound;
  long top = opts.quick ? 4 : 8;
  long orders_checked = 0, certificates_run = 0;
  for (long r = 1; r <= top && ck.ok; ++r) {
    LambdaOrder m = maximal_order(MSet::regular(Level(r)));
    ++orders_checked;
    Rat idx = relative_index(m.lattice, IntLattice::standard(m.lattice.dim));
    for (long q : small_prime_divisors(idx)) {
      CertificateResult res = maximality_certificate(m, q, copts);
      ++certificates_run;
      ck.require(res.maximal, "regular(" + std::to_string(r) +
                                  ") failed the certificate at q=" + std::to_string(q));
    }
  }
  if (ck.ok) {
    GroupRingData gr = group_ring_data(2);
    LambdaOrder m = maximal_order(gr.algebra);
    ++orders_checked;
    Int idx = lattice_index(gr.group_ring, m.lattice);
    for (long q : small_prime_divisors(Rat(idx))) {
      CertificateResult res = maximality_certificate(m, q, copts);
      ++certificates_run;
      ck.require(res.maximal,
                 "group-ring maximal order failed the certificate at q=" +
                     std::to_string(q));
    }
  }
  if (ck.ok) {
    // the deliberately non-maximal order Z-span{1, 2z} in Q[mu_2]
    auto alg = std::make_shared<const LambdaAlgebra>(
        algebra_from_mset(MSet::regular(Level(2))));
    QMat rows{alg->unit(), qvec_scale(Rat(2), zmu_coords(*alg, 1))};
    LambdaOrder small{alg, IntLattice::from_rows(2, rows)};
    CertificateResult res = maximality_certificate(small, 2, copts);
    ++certificates_run;
    ck.require(!res.maximal, "Z-span{1,2z} was reported maximal");
    if (ck.ok) {
      IntLattice zmu = zmu_image_lattice(*alg);
      ck.require(res.witness && *res.witness == zmu,
                 "witness for Z-span{1,2z} is not Z[mu_2]");
    }
  }
  if (ck.ok)
    ck.detail << orders_checked << " orders, " << certificates_run
              << " certificates, witness for the non-maximal case is Z[mu_2]";
  return {6, "maximality certificates (orders)", ck.ok, ck.detail.str(), 0};
}

// ---- criterion 7 -----------------------------------------------------------

CriterionResult criterion_intersection(const AcceptanceOptions& opts) {
  Check ck;
  {
    MSet s = MSet::regular(Level(3));
    std::vector<int> id(s.size());
    for (int i = 0; i < s.size(); ++i) id[i] = i;
    ck.require(intersection_check(MSetMap::make(s, s, id)), "identity case failed");
  }
  {
    MSet t = MSet::regular(Level(4));
    MSet s = MSet::regular(Level(2));
    std::vector<int> values(4);
    for (int x = 0; x < 4; ++x) values[x] = x % 2;
    ck.require(intersection_check(MSetMap::make(t, s, values)),
               "regular(4) ->> regular(2) case failed");
  }
  if (!opts.quick && ck.ok) {
    // free cover of (Z/2)^2: one copy of the regular 2-set per point
    MSet s = char_square_mset(2);
    MSet t = MSet::regular(Level(2));
    for (int i = 1; i < s.size(); ++i)
      t = mset_coproduct(t, MSet::regular(Level(2)));
    std::vector<int> values(t.size());
    for (int i = 0; i < s.size(); ++i)
      for (long a = 0; a < 2; ++a) values[2 * i + a] = s.act(a, i);
    MSetMap cover = MSetMap::make(t, s, values);
    ck.require(cover.surjective(), "free cover is not surjective");
    ck.require(intersection_check(cover), "free cover case failed");
  }
  if (ck.ok) ck.detail << "A = K cap B holds in each case";
  return {7, "intersection property (orders)", ck.ok, ck.detail.str(), 0};
}

// ---- criterion 8 -----------------------------------------------------------

CriterionResult criterion_cyclotomic(const AcceptanceOptions& opts) {
  Check ck;
  long top = opts.quick ? 12 : 30;
  long trials = opts.quick ? 20 : 100;
  std::mt19937 rng(20240613);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  for (long r = 1; r <= top && ck.ok; ++r) {
    long sum = 0;
    for (long d : divisors(r)) sum += euler_phi(r / d);
    ck.require(sum == r, "degree sum mismatch at r=" + std::to_string(r));
    for (long t = 0; t < trials && ck.ok; ++t) {
      GroupAlgebraElt e = ga_zero(r);
      for (long i = 0; i < r; ++i) e.c[i] = Rat(Int(num(rng)), Int(den(rng)));
      GroupAlgebraElt back = crt_join(r, crt_split(e));
      ck.require(back == e, "crt round trip failed at r=" + std::to_string(r));
    }
  }
  if (ck.ok)
    ck.detail << "r = 1.." << top << ", " << trials
              << " random round trips each, degree sums exact";
  return {8, "cyclotomic substrate: crt round trip and degree sum (cyclotomic)", ck.ok,
          ck.detail.str(), 0};
}

// ---- criterion 9 -----------------------------------------------------------

CriterionResult criterion_zero_image(const AcceptanceOptions& opts) {
  Check ck;
  std::vector<MSet> corpus = acceptance_corpus(opts.quick);
  long checked = 0;
  for (size_t i = 0; i < corpus.size() && ck.ok; ++i) {
    const MSet& s = corpus[i];
    if (s.size() == 0) continue;
    ++checked;
    std::vector<int> zs = s.zero_image();
    ck.require(!zs.empty(), "zero image empty at corpus " + std::to_string(i));
    for (int z : zs)
      for (long a = 0; a < s.level(); ++a)
        ck.require(s.act(a, z) == z,
                   "zero-image point is not fixed at corpus " + std::to_string(i));
    if (!ck.ok) break;
    LambdaAlgebra alg = algebra_from_mset(s);
    FieldCheck fc = is_field_check(alg);
    if (alg.dim() == 1) {
      ck.require(fc.is_field, "dimension-1 algebra not reported as a field");
      continue;
    }
    ck.require(!fc.is_field && fc.idempotent.has_value(),
               "missing idempotent certificate at corpus " + std::to_string(i));
    if (!ck.ok) break;
    const QVec& e = *fc.idempotent;
    ck.require(alg.mul(e, e) == e, "certificate is not idempotent");
    ck.require(!qvec_is_zero(e) && e != alg.unit(), "certificate is trivial");
    // the block of the zero-image point is a rank-1 component
    auto fields = component_fields(s);
    int orbit = alg.orbits().orbit_of[zs.front()];
    ck.require(fields[orbit].degree == 1, "zero-image block is not a Q factor");
  }
  if (ck.ok) ck.detail << checked << " M-sets, each with a monoid-fixed Q factor";
  return {9, "zero-image gives a Q-factor (monoid-core, lambda-algebra)", ck.ok,
          ck.detail.str(), 0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            std::ostream& out) {
  using Fn = CriterionResult (*)(const AcceptanceOptions&);
  Fn criteria[] = {criterion_theorem_b,  criterion_group_ring, criterion_oracle,
                   criterion_round_trip, criterion_order_invariants,
                   criterion_certificates, criterion_intersection,
                   criterion_cyclotomic, criterion_zero_image};
  std::vector<CriterionResult> results;
  for (int i = 0; i < (int)(sizeof(criteria) / sizeof(criteria[0])); ++i) {
    Fn fn = criteria[i];
    auto start = Clock::now();
    CriterionResult res;
    try {
      res = fn(opts);
    } catch (const std::exception& e) {
      res = {i + 1, "aborted", false, std::string("exception: ") + e.what(), 0};
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out << (res.pass ? "PASS" : "FAIL") << " criterion " << res.id << " [" << res.name
        << "] (" << res.seconds << "s)" << (res.detail.empty() ? "" : ": ")
        << res.detail << "\n";
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace lambda_orders
