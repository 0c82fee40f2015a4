#include "lambda_orders/lambda_algebra.hpp"

#include <algorithm>
#include <cassert>

namespace lambda_orders {

QVec LambdaAlgebra::mul(const QVec& x, const QVec& y) const {
  assert((long)x.size() == dim_ && (long)y.size() == dim_);
  QVec out = qvec_zero(dim_);
  for (long i = 0; i < dim_; ++i) {
    if (x[i] == Rat(0)) continue;
    for (long j = 0; j < dim_; ++j) {
      if (y[j] == Rat(0)) continue;
      Rat f = x[i] * y[j];
      const QVec& s = sc_[i][j];
      for (long k = 0; k < dim_; ++k)
        if (s[k] != Rat(0)) out[k] += f * s[k];
    }
  }
  return out;
}

QVec LambdaAlgebra::apply_psi(long a, const QVec& x) const {
  return qmat_apply(psi(a), x);
}

QVec LambdaAlgebra::pow(const QVec& x, long e) const {
  assert(e >= 1);
  QVec acc = x;
  for (long i = 1; i < e; ++i) acc = mul(acc, x);
  return acc;
}

QVec LambdaAlgebra::coords_of_values(const std::vector<CycloElt>& values) const {
  assert(values.size() == orbits_.orbits.size());
  QVec out = qvec_zero(dim_);
  for (size_t o = 0; o < values.size(); ++o) {
    assert(values[o].m == level_);
    auto sol = orbit_solver_[o]->solve(values[o].c);
    if (!sol)
      throw algebra_error(algebra_error::Kind::not_equivariant_value,
                          "value at orbit representative is not fixed by the stabilizer");
    for (size_t l = 0; l < sol->size(); ++l) out[basis_offset_[o] + l] = (*sol)[l];
  }
  return out;
}

LambdaAlgebra algebra_from_mset(const MSet& s) {
  LambdaAlgebra k;
  k.level_ = s.level();
  k.dim_ = s.size();
  k.mset_ = s;
  k.orbits_ = s.unit_orbits();
  long r = k.level_;
  size_t n_orbits = k.orbits_.orbits.size();

  for (size_t o = 0; o < n_orbits; ++o) {
    k.orbit_basis_.push_back(fixed_field_basis(r, k.orbits_.stabilizer[o]));
    assert((long)k.orbit_basis_[o].size() == (long)k.orbits_.orbits[o].size());
  }
  long off = 0;
  for (size_t o = 0; o < n_orbits; ++o) {
    k.basis_offset_.push_back(off);
    for (size_t l = 0; l < k.orbit_basis_[o].size(); ++l)
      k.basis_index_.push_back({(int)o, (int)l});
    off += (long)k.orbit_basis_[o].size();
  }
  assert(off == k.dim_);

  for (size_t o = 0; o < n_orbits; ++o) {
    QMat cols;
    for (const CycloElt& b : k.orbit_basis_[o]) cols.push_back(b.c);
    k.orbit_solver_.push_back(std::make_shared<ColumnSolver>(qmat_transpose(cols)));
  }

  // evaluation table: f_j(s) = galois(u_s, b_j) on its own orbit, 0 elsewhere
  k.eval_.assign(k.dim_ ? s.size() : 0, {});
  for (int pt = 0; pt < s.size(); ++pt) {
    int o_pt = k.orbits_.orbit_of[pt];
    long u = k.orbits_.unit_witness[pt];
    std::vector<CycloElt> row;
    for (long j = 0; j < k.dim_; ++j) {
      auto [oj, lj] = k.basis_index_[j];
      row.push_back(oj == o_pt ? galois_act(u, k.orbit_basis_[oj][lj]) : cyclo_zero(r));
    }
    k.eval_[pt] = std::move(row);
  }

  // unit: expand 1 in each orbit block
  {
    std::vector<CycloElt> ones(n_orbits, cyclo_one(r));
    k.unit_ = k.dim_ ? k.coords_of_values(ones) : QVec{};
  }

  // structure constants, block diagonal in the orbits
  k.sc_.assign(k.dim_, std::vector<QVec>(k.dim_));
  for (long i = 0; i < k.dim_; ++i)
    for (long j = 0; j < k.dim_; ++j) {
      auto [oi, li] = k.basis_index_[i];
      auto [oj, lj] = k.basis_index_[j];
      if (oi != oj) {
        k.sc_[i][j] = qvec_zero(k.dim_);
        continue;
      }
      CycloElt prod = cyclo_mul(k.orbit_basis_[oi][li], k.orbit_basis_[oj][lj]);
      auto sol = k.orbit_solver_[oi]->solve(prod.c);
      assert(sol);  // the fixed space is closed under multiplication
      QVec v = qvec_zero(k.dim_);
      for (size_t l = 0; l < sol->size(); ++l) v[k.basis_offset_[oi] + l] = (*sol)[l];
      k.sc_[i][j] = std::move(v);
    }

  // psi matrices: column j of psi_[a] is psi_a(f_j) = f_j(a * -)
  k.psi_.assign(r, qmat_zero(k.dim_, k.dim_));
  for (long a = 0; a < r; ++a) {
    for (long j = 0; j < k.dim_; ++j) {
      auto [oj, lj] = k.basis_index_[j];
      for (size_t o = 0; o < n_orbits; ++o) {
        int x = s.act(a, k.orbits_.rep[o]);
        CycloElt value = (k.orbits_.orbit_of[x] == (int)oj)
                             ? galois_act(k.orbits_.unit_witness[x], k.orbit_basis_[oj][lj])
                             : cyclo_zero(r);
        auto sol = k.orbit_solver_[o]->solve(value.c);
        if (!sol)
          throw algebra_error(algebra_error::Kind::not_equivariant_value,
                              "psi value not fixed by the stabilizer");
        for (size_t l = 0; l < sol->size(); ++l)
          k.psi_[a][k.basis_offset_[o] + l][j] = (*sol)[l];
      }
    }
  }
  return k;
}

std::vector<ComponentField> component_fields(const MSet& s) {
  auto orbits = s.unit_orbits();
  long r = s.level();
  std::vector<long> units = units_mod(r);
  std::vector<ComponentField> out;
  for (size_t o = 0; o < orbits.orbits.size(); ++o) {
    const auto& h = orbits.stabilizer[o];
    long conductor = r;
    for (long f : divisors(r)) {
      // the subfield lies in Q(zeta_f) iff units = 1 mod f all stabilize
      bool ok = true;
      for (long u : units) {
        if (mod_l(u, f) != mod_l(1, f)) continue;
        if (!std::binary_search(h.begin(), h.end(), u)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        conductor = f;
        break;
      }
    }
    out.push_back({orbits.orbits[o], conductor, (long)orbits.orbits[o].size()});
  }
  return out;
}

namespace {

QVec trace_vector(const LambdaAlgebra& k) {
  // trace_vec[j] = trace of multiplication by basis element j
  long n = k.dim();
  QVec out = qvec_zero(n);
  for (long j = 0; j < n; ++j) {
    Rat tr(0);
    for (long i = 0; i < n; ++i) tr += k.structure_constant(j, i)[i];
    out[j] = tr;
  }
  return out;
}

}  // namespace

MSet points(const LambdaAlgebra& k) {
  long n = k.dim();
  long r = k.level();
  if (n == 0) return MSet::trivial(Level(r), 0);

  // etale check: the trace form must be nondegenerate
  QVec tv = trace_vector(k);
  QMat trace_form = qmat_zero(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rat acc(0);
      const QVec& s = k.structure_constant(i, j);
      for (long l = 0; l < n; ++l)
        if (s[l] != Rat(0)) acc += s[l] * tv[l];
      trace_form[i][j] = acc;
    }
  if (qmat_det(trace_form) == Rat(0))
    throw algebra_error(algebra_error::Kind::not_etale, "degenerate trace form");

  // each evaluation functional must be a ring map
  const MSet& s = k.provenance();
  for (int pt = 0; pt < n; ++pt) {
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        CycloElt lhs = cyclo_mul(k.eval(pt, i), k.eval(pt, j));
        CycloElt rhs = cyclo_zero(r);
        const QVec& c = k.structure_constant(i, j);
        for (long l = 0; l < n; ++l)
          if (c[l] != Rat(0)) rhs = cyclo_add(rhs, cyclo_scale(c[l], k.eval(pt, l)));
        if (!(lhs == rhs))
          throw algebra_error(algebra_error::Kind::not_etale,
                              "evaluation functional is not multiplicative");
      }
  }

  // recover the action: a * pt is the point whose functional equals
  // (functional of pt) composed with psi_a
  std::vector<std::vector<int>> table(r, std::vector<int>(n, -1));
  for (long a = 0; a < r; ++a) {
    const QMat& p = k.psi(a);
    for (int pt = 0; pt < n; ++pt) {
      std::vector<CycloElt> composed;
      for (long j = 0; j < n; ++j) {
        CycloElt acc = cyclo_zero(r);
        for (long l = 0; l < n; ++l)
          if (p[l][j] != Rat(0)) acc = cyclo_add(acc, cyclo_scale(p[l][j], k.eval(pt, l)));
        composed.push_back(std::move(acc));
      }
      int found = -1;
      for (int t = 0; t < n; ++t) {
        bool same = true;
        for (long j = 0; j < n && same; ++j)
          if (!(k.eval(t, j) == composed[j])) same = false;
        if (same) {
          if (found >= 0)
            throw algebra_error(algebra_error::Kind::not_etale,
                                "points are not separated by the algebra");
          found = t;
        }
      }
      if (found < 0)
        throw algebra_error(algebra_error::Kind::not_etale,
                            "psi does not permute the evaluation functionals");
      table[a][pt] = found;
    }
  }
  (void)s;
  return MSet::make(Level(r), std::move(table));
}

FieldCheck is_field_check(const LambdaAlgebra& k) {
  if (k.dim() == 1) return {true, std::nullopt};
  if (k.dim() == 0) return {false, std::nullopt};
  // a point of 0S is monoid-fixed, so its orbit is a singleton with a
  // one-dimensional block; the indicator function is a nontrivial idempotent
  std::vector<int> zs = k.provenance().zero_image();
  assert(!zs.empty());
  int z = zs.front();
  int o = k.orbits().orbit_of[z];
  assert(k.orbits().orbits[o].size() == 1);
  QVec e = qvec_zero(k.dim());
  e[k.basis_offset(o)] = Rat(1);
  return {false, e};
}

QMat algebra_pullback(const LambdaAlgebra& alg_t, const LambdaAlgebra& alg_s,
                      const MSetMap& phi) {
  if (alg_t.level() != phi.source().level() || alg_s.level() != phi.target().level() ||
      alg_t.level() != alg_s.level())
    throw algebra_error(algebra_error::Kind::incompatible,
                        "algebra_pullback: levels must agree with the map");
  if (alg_t.dim() != phi.source().size() || alg_s.dim() != phi.target().size())
    throw algebra_error(algebra_error::Kind::incompatible,
                        "algebra_pullback: sizes must agree with the map");
  size_t n_orbits = alg_t.orbits().orbits.size();
  QMat cols;
  for (long j = 0; j < alg_s.dim(); ++j) {
    // f_j o phi, described by its values at the source orbit representatives
    std::vector<CycloElt> values;
    for (size_t o = 0; o < n_orbits; ++o)
      values.push_back(alg_s.eval(phi.values()[alg_t.orbits().rep[o]], j));
    cols.push_back(alg_t.coords_of_values(values));
  }
  return qmat_transpose(cols);
}

QMat basis_transfer(const LambdaAlgebra& from, const LambdaAlgebra& to) {
  if (to.level() % from.level() != 0)
    throw algebra_error(algebra_error::Kind::incompatible, "basis_transfer: bad levels");
  if (!(from.provenance().lift_to_level(to.level()) == to.provenance()))
    throw algebra_error(algebra_error::Kind::incompatible,
                        "basis_transfer: presentations differ");
  if (from.dim() != to.dim())
    throw algebra_error(algebra_error::Kind::incompatible, "basis_transfer: sizes differ");
  long d = to.level() / from.level();
  size_t n_orbits = to.orbits().orbits.size();
  QMat cols;
  for (long j = 0; j < from.dim(); ++j) {
    std::vector<CycloElt> values;
    for (size_t o = 0; o < n_orbits; ++o) {
      CycloElt v = from.eval(to.orbits().rep[o], j);
      values.push_back(subfield_embed(to.level(), d, v));
    }
    cols.push_back(to.coords_of_values(values));
  }
  return qmat_transpose(cols);
}

}  // namespace lambda_orders
