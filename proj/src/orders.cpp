#include "lambda_orders/orders.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lambda_orders {

QMat membership_map(const LambdaAlgebra& alg) {
  long r = alg.level();
  long n = alg.dim();
  const MSet& s = alg.provenance();
  std::vector<long> divs = divisors(r);
  QMat a = qmat_zero(s.size() * r, n);
  for (int pt = 0; pt < s.size(); ++pt) {
    for (long j = 0; j < n; ++j) {
      std::vector<CycloElt> comps;
      for (long d : divs) {
        int x = s.act(d, pt);
        // f(d*pt) lies in Q(zeta_{r/d}); rewrite it in that power basis
        comps.push_back(subfield_coords(r, d, alg.eval(x, j)));
      }
      GroupAlgebraElt joined = crt_join(r, comps);
      for (long t = 0; t < r; ++t) a[pt * r + t][j] = joined.c[t];
    }
  }
  return a;
}

LambdaOrder maximal_order(std::shared_ptr<const LambdaAlgebra> alg) {
  if (alg->dim() == 0) {
    IntLattice zero;
    zero.dim = 0;
    zero.rank = 0;
    return {std::move(alg), zero};
  }
  IntLattice lattice = preimage_lattice(membership_map(*alg));
  return {std::move(alg), std::move(lattice)};
}

LambdaOrder maximal_order(const MSet& s) {
  return maximal_order(std::make_shared<const LambdaAlgebra>(algebra_from_mset(s)));
}

QVec zmu_coords(const LambdaAlgebra& alg, long power) {
  long r = alg.level();
  std::vector<CycloElt> values;
  for (int rep : alg.orbits().rep)
    values.push_back(cyclo_zeta_pow(r, rep * power));
  return alg.coords_of_values(values);
}

IntLattice zmu_image_lattice(const LambdaAlgebra& alg) {
  if (!(alg.provenance() == MSet::regular(Level(alg.level()))))
    throw algebra_error(algebra_error::Kind::incompatible,
                        "zmu_image_lattice needs the regular M-set");
  QMat rows;
  for (long i = 0; i < alg.level(); ++i) rows.push_back(zmu_coords(alg, i));
  return IntLattice::from_rows(alg.dim(), rows);
}

GroupRingData group_ring_data(long p) {
  assert(is_prime(p));
  long n = p * p;
  // characters of V = (Z/p)^2 with a acting as chi -> chi^a: scalar action
  std::vector<std::vector<int>> table(p, std::vector<int>(n));
  for (long a = 0; a < p; ++a)
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y)
        table[a][x * p + y] = (int)(mod_l(a * x, p) * p + mod_l(a * y, p));
  MSet s = MSet::make(Level(p), std::move(table));
  auto alg = std::make_shared<const LambdaAlgebra>(algebra_from_mset(s));

  QMat rows;
  for (long v1 = 0; v1 < p; ++v1)
    for (long v2 = 0; v2 < p; ++v2) {
      // the image of the group element (v1, v2): chi -> chi(v)
      std::vector<CycloElt> values;
      for (int rep : alg->orbits().rep) {
        long rx = rep / p, ry = rep % p;
        values.push_back(cyclo_zeta_pow(p, rx * v1 + ry * v2));
      }
      rows.push_back(alg->coords_of_values(values));
    }
  IntLattice group_ring = IntLattice::from_rows(alg->dim(), rows);

  std::vector<CycloElt> xvals;
  for (int rep : alg->orbits().rep)
    xvals.push_back(rep == 0 ? cyclo_rat(p, Rat(p)) : cyclo_zero(p));
  QVec x = alg->coords_of_values(xvals);
  return {std::move(alg), std::move(group_ring), std::move(x)};
}

VerifyReport verify_order(const LambdaOrder& order, long prime_bound) {
  VerifyReport rep;
  rep.prime_bound = prime_bound;
  const LambdaAlgebra& alg = *order.algebra;
  const IntLattice& lat = order.lattice;
  long n = alg.dim();
  if (n == 0) return rep;  // the zero ring: everything is vacuous

  assert(lat.rank == n && lat.dim == n);
  if (!lat.contains(alg.unit())) {
    rep.unit = false;
    rep.failures.push_back("unit is not in the lattice");
  }
  for (long i = 0; i < n && rep.mult_closed; ++i)
    for (long j = i; j < n; ++j) {
      if (lat.contains(alg.mul(lat.basis_row(i), lat.basis_row(j)))) continue;
      rep.mult_closed = false;
      rep.failures.push_back("product of basis rows " + std::to_string(i) + " and " +
                             std::to_string(j) + " leaves the lattice");
      break;
    }
  for (long a = 0; a < alg.level() && rep.psi_stable; ++a)
    for (long i = 0; i < n; ++i) {
      if (lat.contains(alg.apply_psi(a, lat.basis_row(i)))) continue;
      rep.psi_stable = false;
      rep.failures.push_back("psi(" + std::to_string(a) + ") moves basis row " +
                             std::to_string(i) + " out of the lattice");
      break;
    }
  for (long p : primes_up_to(prime_bound)) {
    if (!rep.frobenius) break;
    for (long i = 0; i < n; ++i) {
      QVec x = lat.basis_row(i);
      QVec diff = qvec_sub(alg.apply_psi(p, x), alg.pow(x, p));
      if (lat.contains(qvec_scale(Rat(1, Int(p)), diff))) continue;
      rep.frobenius = false;
      rep.failures.push_back("psi_p(x) - x^p is not in p*L for p=" + std::to_string(p) +
                             ", basis row " + std::to_string(i));
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// maximality certificate
// ---------------------------------------------------------------------------

namespace {

// data for candidate tests, everything rebased to the order's own basis
struct CertContext {
  long n = 0;
  long q = 0;
  long q2 = 0;
  long level = 1;
  std::vector<std::vector<std::vector<Int>>> sc;  // sc[s][t] = coords of b_s b_t
  std::vector<std::vector<std::vector<long>>> sc_q2;  // sc mod q^2
  std::vector<std::vector<std::vector<long>>> psi_q;  // psi_q[a][i] = row of P_a mod q
  std::vector<std::vector<std::vector<Int>>> psi;     // integer P_a rows
  std::vector<long> primes;
};

// reduce v mod q against RREF rows; true iff v lies in their span
bool in_span(const std::vector<std::vector<long>>& rows, const std::vector<int>& pivots,
             std::vector<long> v, long q) {
  for (size_t i = 0; i < rows.size(); ++i) {
    long coeff = v[pivots[i]] % q;
    if (coeff == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = mod_l(v[j] - coeff * rows[i][j], q);
  }
  for (long x : v)
    if (x % q != 0) return false;
  return true;
}

bool candidate_is_order(const CertContext& ctx, const std::vector<std::vector<long>>& w,
                        const std::vector<int>& pivots) {
  long n = ctx.n, q = ctx.q, q2 = ctx.q2;
  size_t k = w.size();

  // psi stability: each generator stays in W after every residue action
  for (long a = 0; a < ctx.level; ++a) {
    for (size_t i = 0; i < k; ++i) {
      std::vector<long> img(n, 0);
      for (long s = 0; s < n; ++s) {
        if (w[i][s] == 0) continue;
        const auto& row = ctx.psi_q[a][s];
        for (long t = 0; t < n; ++t) img[t] = (img[t] + w[i][s] * row[t]) % q;
      }
      if (!in_span(w, pivots, img, q)) return false;
    }
  }

  // closure against the integral part: b_t * (w_i / q) must stay in L
  for (long t = 0; t < n; ++t)
    for (size_t i = 0; i < k; ++i) {
      std::vector<long> v(n, 0);
      for (long s = 0; s < n; ++s) {
        if (w[i][s] == 0) continue;
        const auto& c = ctx.sc_q2[t][s];
        for (long l = 0; l < n; ++l) v[l] = (v[l] + w[i][s] * c[l]) % q;
      }
      if (!in_span(w, pivots, v, q)) return false;
    }

  // closure of the new generators among themselves:
  // (w_i/q)(w_j/q) in L  <=>  w_i w_j = 0 mod q and (w_i w_j / q) in W mod q
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      std::vector<long> v(n, 0);
      for (long s = 0; s < n; ++s) {
        if (w[i][s] == 0) continue;
        for (long t = 0; t < n; ++t) {
          if (w[j][t] == 0) continue;
          long f = (w[i][s] * w[j][t]) % q2;
          const auto& c = ctx.sc_q2[s][t];
          for (long l = 0; l < n; ++l) v[l] = (v[l] + f * c[l]) % q2;
        }
      }
      std::vector<long> v_over_q(n);
      for (long l = 0; l < n; ++l) {
        if (v[l] % q != 0) return false;
        v_over_q[l] = (v[l] / q) % q;
      }
      if (!in_span(w, pivots, v_over_q, q)) return false;
    }

  // Frobenius congruence for the new generators (the integral part has it
  // already): psi_p(x) - x^p in p*L for x = (w_i B)/q, scaled by q^p
  for (long p : ctx.primes) {
    Int qp1 = 1;  // q^{p-1}
    for (long e = 1; e < p; ++e) qp1 *= q;
    for (size_t i = 0; i < k; ++i) {
      std::vector<Int> wi(n);
      for (long s = 0; s < n; ++s) wi[s] = w[i][s];
      // coords of psi_p(w_i B)
      std::vector<Int> lhs(n, Int(0));
      const auto& pmat = ctx.psi[mod_l(p, ctx.level)];
      for (long s = 0; s < n; ++s) {
        if (wi[s] == 0) continue;
        for (long t = 0; t < n; ++t) lhs[t] += wi[s] * pmat[s][t];
      }
      // coords of (w_i B)^p
      std::vector<Int> acc = wi;
      for (long e = 1; e < p; ++e) {
        std::vector<Int> next(n, Int(0));
        for (long s = 0; s < n; ++s) {
          if (acc[s] == 0) continue;
          for (long t = 0; t < n; ++t) {
            if (wi[t] == 0) continue;
            Int f = acc[s] * wi[t];
            const auto& c = ctx.sc[s][t];
            for (long l = 0; l < n; ++l) next[l] += f * c[l];
          }
        }
        acc = std::move(next);
      }
      Int div = Int(p) * qp1;
      std::vector<long> resid(n);
      bool ok = true;
      for (long l = 0; l < n && ok; ++l) {
        Int v = qp1 * lhs[l] - acc[l];
        if (v % div != 0) ok = false;
        else resid[l] = (long)((((v / div) % q) + q) % q);
      }
      if (!ok || !in_span(w, pivots, resid, q)) return false;
    }
  }
  return true;
}

Int gaussian_binomial(long n, long k, long q) {
  // number of k-dimensional subspaces of F_q^n
  Int num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    Int qa = 1, qb = 1;
    for (long e = 0; e < n - i; ++e) qa *= q;
    for (long e = 0; e < i + 1; ++e) qb *= q;
    num *= qa - 1;
    den *= qb - 1;
  }
  assert(num % den == 0);
  return num / den;
}

}  // namespace

CertificateResult maximality_certificate(const LambdaOrder& m, long q,
                                         CertificateOptions opts) {
  assert(is_prime(q));
  const LambdaAlgebra& alg = *m.algebra;
  const IntLattice& lat = m.lattice;
  long n = lat.rank;
  if (n == 0) return {true, std::nullopt, 0};
  if (n > 8)
    throw lattice_error(lattice_error::Kind::rank_too_large,
                        "maximality_certificate supports rank <= 8");
  Int total = 0;
  for (long k = 1; k <= n; ++k) total += gaussian_binomial(n, k, q);
  if (total > opts.max_candidates)
    throw lattice_error(lattice_error::Kind::rank_too_large,
                        "maximality_certificate: too many subspaces to enumerate");

  // rebase the algebra data to the order's own basis; the order must be
  // multiplicatively closed and psi-stable for this to be integral
  CertContext ctx;
  ctx.n = n;
  ctx.q = q;
  ctx.q2 = q * q;
  ctx.level = alg.level();
  ctx.primes = primes_up_to(opts.prime_bound);
  auto coords_or_throw = [&](const QVec& v) {
    auto c = lat.coords(v);
    if (!c)
      throw algebra_error(algebra_error::Kind::incompatible,
                          "maximality_certificate needs a closed, stable order");
    return *c;
  };
  ctx.sc.assign(n, std::vector<std::vector<Int>>(n));
  ctx.sc_q2.assign(n, std::vector<std::vector<long>>(n));
  for (long s = 0; s < n; ++s)
    for (long t = 0; t < n; ++t) {
      std::vector<Int> c = coords_or_throw(alg.mul(lat.basis_row(s), lat.basis_row(t)));
      std::vector<long> cq(n);
      for (long l = 0; l < n; ++l) cq[l] = (long)(((c[l] % ctx.q2) + ctx.q2) % ctx.q2);
      ctx.sc[s][t] = std::move(c);
      ctx.sc_q2[s][t] = std::move(cq);
    }
  ctx.psi.assign(ctx.level, {});
  ctx.psi_q.assign(ctx.level, {});
  for (long a = 0; a < ctx.level; ++a) {
    ctx.psi[a].resize(n);
    ctx.psi_q[a].resize(n);
    for (long s = 0; s < n; ++s) {
      std::vector<Int> c = coords_or_throw(alg.apply_psi(a, lat.basis_row(s)));
      std::vector<long> cq(n);
      for (long l = 0; l < n; ++l) cq[l] = (long)(((c[l] % q) + q) % q);
      ctx.psi[a][s] = std::move(c);
      ctx.psi_q[a][s] = std::move(cq);
    }
  }

  bool parallel = opts.mode == RunMode::parallel;
  long checked = 0;

  for (long k = 1; k <= n; ++k) {
    // pivot combinations in lexicographic order
    std::vector<int> pivots(k);
    for (long i = 0; i < k; ++i) pivots[i] = (int)i;
    while (true) {
      // free positions: non-pivot columns to the right of each pivot
      std::vector<std::pair<int, int>> free_pos;
      for (long i = 0; i < k; ++i)
        for (int col = pivots[i] + 1; col < n; ++col)
          if (!std::binary_search(pivots.begin(), pivots.end(), col))
            free_pos.push_back({(int)i, col});
      long grid = 1;
      for (size_t i = 0; i < free_pos.size(); ++i) grid *= q;

      auto build = [&](long idx) {
        std::vector<std::vector<long>> rows(k, std::vector<long>(n, 0));
        for (long i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
        long rest = idx;
        for (const auto& [ri, col] : free_pos) {
          rows[ri][col] = rest % q;
          rest /= q;
        }
        return rows;
      };

      long found = grid;  // sentinel
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
      for (long idx = 0; idx < grid; ++idx) {
        if (candidate_is_order(ctx, build(idx), pivots)) {
#ifdef _OPENMP
#pragma omp critical
#endif
          found = std::min(found, idx);
        }
      }
      checked += grid;
      if (found < grid) {
        // reconstruct the witness lattice in the algebra coordinates
        std::vector<std::vector<long>> rows = build(found);
        QMat gens;
        for (long i = 0; i < n; ++i) gens.push_back(lat.basis_row(i));
        for (long i = 0; i < k; ++i) {
          QVec v = qvec_zero(lat.dim);
          for (long s = 0; s < n; ++s)
            if (rows[i][s])
              v = qvec_add(v, qvec_scale(Rat(rows[i][s]), lat.basis_row(s)));
          gens.push_back(qvec_scale(Rat(1, Int(q)), v));
        }
        return {false, IntLattice::from_rows(lat.dim, gens), checked};
      }

      // next pivot combination
      long i = k - 1;
      while (i >= 0 && pivots[i] == n - k + i) --i;
      if (i < 0) break;
      ++pivots[i];
      for (long j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return {true, std::nullopt, checked};
}

bool intersection_check(const MSetMap& onto) {
  if (!onto.surjective())
    throw algebra_error(algebra_error::Kind::incompatible,
                        "intersection_check needs a surjection");
  LambdaAlgebra alg_t = algebra_from_mset(onto.source());
  LambdaAlgebra alg_s = algebra_from_mset(onto.target());
  LambdaOrder m_t = maximal_order(std::make_shared<const LambdaAlgebra>(alg_t));
  LambdaOrder m_s = maximal_order(std::make_shared<const LambdaAlgebra>(alg_s));
  if (alg_s.dim() == 0) return m_s.lattice.rank == 0;
  QMat incl = algebra_pullback(alg_t, alg_s, onto);
  IntLattice pulled = preimage_lattice(incl, m_t.lattice);
  return pulled == m_s.lattice;
}

}  // namespace lambda_orders
