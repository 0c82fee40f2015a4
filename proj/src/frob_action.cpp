#include "lambda_orders/frob_action.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lambda_orders {

namespace {

std::vector<int> identity_map(long n) {
  std::vector<int> id(n);
  for (long i = 0; i < n; ++i) id[i] = (int)i;
  return id;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(g.size());
  for (size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

bool commute(const std::vector<int>& f, const std::vector<int>& g) {
  return compose(f, g) == compose(g, f);
}

std::vector<int> image_of(const std::vector<int>& f, const std::vector<int>& subset) {
  std::set<int> img;
  for (int x : subset) img.insert(f[x]);
  return std::vector<int>(img.begin(), img.end());
}

bool is_permutation(const std::vector<int>& f, long n) {
  std::vector<bool> seen(n, false);
  for (int v : f) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return (long)f.size() == n;
}

}  // namespace

FrobPresentation FrobPresentation::make(long set_size, long c,
                                        std::map<long, std::vector<int>> unit_action,
                                        std::map<long, std::vector<int>> exceptional) {
  if (set_size < 0 || c < 1)
    throw frob_error(frob_error::Kind::bad_presentation, "need set_size >= 0 and c >= 1");
  FrobPresentation pres;
  pres.n_ = set_size;
  pres.c_ = c;

  std::vector<long> units = units_mod(c);
  if (c == 1 && unit_action.empty()) unit_action[0] = identity_map(set_size);
  for (long u : units)
    if (!unit_action.count(u))
      throw frob_error(frob_error::Kind::bad_presentation,
                       "unit_action misses unit " + std::to_string(u));
  if ((long)unit_action.size() != (long)units.size())
    throw frob_error(frob_error::Kind::bad_presentation,
                     "unit_action has keys that are not units mod c");
  for (const auto& [u, f] : unit_action)
    if (!is_permutation(f, set_size))
      throw frob_error(frob_error::Kind::not_group_action,
                       "unit " + std::to_string(u) + " does not act by a permutation");
  // group action axioms for (Z/c)^*
  const std::vector<int>& id_elt = unit_action.at(mod_l(1, c));
  if (id_elt != identity_map(set_size))
    throw frob_error(frob_error::Kind::not_group_action, "unit 1 must act trivially");
  for (long u : units)
    for (long v : units) {
      long uv = c == 1 ? 0 : mod_l(u * v, c);
      if (compose(unit_action.at(u), unit_action.at(v)) != unit_action.at(uv))
        throw frob_error(frob_error::Kind::not_group_action,
                         "unit action is not multiplicative");
    }

  for (const auto& [p, f] : exceptional) {
    if (!is_prime(p))
      throw frob_error(frob_error::Kind::bad_presentation,
                       "exceptional key " + std::to_string(p) + " is not prime");
    if ((long)f.size() != set_size)
      throw frob_error(frob_error::Kind::bad_presentation, "exceptional map size mismatch");
    for (int v : f)
      if (v < 0 || v >= set_size)
        throw frob_error(frob_error::Kind::bad_presentation,
                         "exceptional map value out of range");
  }
  for (auto [p, e] : factorize(c))
    if (!exceptional.count(p))
      throw frob_error(frob_error::Kind::missing_ramified_prime,
                       "prime " + std::to_string(p) + " divides c but is not exceptional");
  // commutation: psi_p with every unit and with every other psi_q
  for (const auto& [p, f] : exceptional) {
    for (const auto& [u, g] : unit_action)
      if (!commute(f, g))
        throw frob_error(frob_error::Kind::not_commuting,
                         "psi_" + std::to_string(p) + " does not commute with the units");
    for (const auto& [q, g] : exceptional)
      if (!commute(f, g))
        throw frob_error(frob_error::Kind::not_commuting,
                         "psi_" + std::to_string(p) + " and psi_" + std::to_string(q) +
                             " do not commute");
  }
  pres.unit_action_ = std::move(unit_action);
  pres.exceptional_ = std::move(exceptional);
  return pres;
}

const std::vector<int>& FrobPresentation::prime_action(long p) const {
  auto it = exceptional_.find(p);
  if (it != exceptional_.end()) return it->second;
  // default rule: p acts through the cyclotomic character at level c
  assert(std::gcd(p, c_) == 1);
  long u = c_ == 1 ? 0 : mod_l(p, c_);
  return unit_action_.at(u);
}

std::vector<int> psi(const FrobPresentation& pres, long n) {
  assert(n >= 1);
  std::vector<int> out = identity_map(pres.size());
  for (auto [p, e] : factorize(n)) {
    const std::vector<int>& f = pres.prime_action(p);
    for (int i = 0; i < e; ++i) out = compose(f, out);
  }
  return out;
}

StabilizationData stabilization(const FrobPresentation& pres) {
  StabilizationData out;
  std::vector<int> all = identity_map(pres.size());

  for (const auto& [p, f] : pres.exceptional()) {
    // chase images until they stop shrinking; a_p <= |T|
    std::vector<int> cur(all);
    std::vector<int> next = image_of(f, cur);
    int a = 0;
    while (next != cur) {
      cur = next;
      next = image_of(f, cur);
      ++a;
    }
    out.a_p[p] = a;
    for (int i = 0; i < a; ++i) out.r0 *= p;
  }

  for (long d : divisors(out.r0)) {
    std::vector<int> dt = image_of(psi(pres, d), all);
    // conductor: smallest divisor of c whose congruence kernel fixes dT pointwise
    long cd = pres.c();
    for (long f : divisors(pres.c())) {
      bool trivial = true;
      for (const auto& [u, g] : pres.unit_action()) {
        if (mod_l(u, f) != mod_l(1, f)) continue;
        for (int x : dt)
          if (g[x] != x) {
            trivial = false;
            break;
          }
        if (!trivial) break;
      }
      if (trivial) {
        cd = f;
        break;
      }
    }
    out.c_d[d] = cd;
    out.dt[d] = std::move(dt);
  }
  return out;
}

Verdict check_factors(const FrobPresentation& pres) {
  StabilizationData st = stabilization(pres);

  for (long d : divisors(st.r0)) {
    const std::vector<int>& dt = st.dt.at(d);
    long cd = st.c_d.at(d);
    for (const auto& [p, f] : pres.exceptional()) {
      if (image_of(f, dt) != dt) continue;  // p does not fix dT, no condition
      if (std::gcd(p, cd) != 1)
        return Verdict{false, 1, std::nullopt, Witness{d, p, cd, -1}};
      // lift (p mod c_d) to a unit mod c and compare actions on dT
      long lift = -1;
      for (long u : units_mod(pres.c()))
        if (mod_l(u, cd) == mod_l(p, cd)) {
          lift = u;
          break;
        }
      assert(lift >= 0);  // gcd(p, c_d) = 1 guarantees a lift
      const std::vector<int>& g = pres.unit_action().at(lift);
      for (int x : dt)
        if (f[x] != g[x])
          return Verdict{false, 1, std::nullopt, Witness{d, p, cd, x}};
    }
  }

  long r = lcm_l(pres.c(), st.r0);
  for (long d : divisors(st.r0)) r = lcm_l(r, d * st.c_d.at(d));
  MSet mset = build_mset(pres, r);
  return Verdict{true, r, std::move(mset), std::nullopt};
}

MSet build_mset(const FrobPresentation& pres, long r) {
  assert(r % pres.c() == 0);
  std::vector<std::vector<int>> table(r);
  for (long residue = 0; residue < r; ++residue) {
    long a = residue == 0 ? r : residue;
    // split a into the part supported on primes dividing r and a unit
    long npart = 1;
    long u = a;
    for (auto [p, e] : factorize(r)) {
      while (u % p == 0) {
        npart *= p;
        u /= p;
      }
    }
    std::vector<int> row = psi(pres, npart);
    if (pres.c() > 1) {
      long uc = mod_l(u, pres.c());
      row = compose(pres.unit_action().at(uc), row);
    }
    table[residue] = std::move(row);
  }
  try {
    return MSet::make(Level(r), std::move(table));
  } catch (const mset_error& e) {
    throw frob_error(frob_error::Kind::inconsistent_presentation,
                     std::string("constructed table is not a monoid action: ") + e.what());
  }
}

namespace {

// the action of every integer in 1..bound, via the smallest prime factor table
std::vector<std::vector<int>> integer_actions(const FrobPresentation& pres, long bound) {
  std::vector<long> spf = spf_table(bound);
  std::vector<std::vector<int>> omega(bound + 1);
  omega[1] = identity_map(pres.size());
  for (long m = 2; m <= bound; ++m)
    omega[m] = compose(pres.prime_action(spf[m]), omega[m / spf[m]]);
  return omega;
}

// single level test: do all integers in the sweep act consistently mod r?
std::optional<MSet> bucket_test(const std::vector<std::vector<int>>& omega, long r) {
  long bound = (long)omega.size() - 1;
  std::vector<std::vector<int>> bucket(r);
  std::vector<char> filled(r, 0);
  for (long m = 1; m <= bound; ++m) {
    long res = mod_l(m, r);
    if (!filled[res]) {
      bucket[res] = omega[m];
      filled[res] = 1;
    } else if (bucket[res] != omega[m]) {
      return std::nullopt;
    }
  }
  for (long res = 0; res < r; ++res)
    if (!filled[res]) return std::nullopt;  // sweep too small for this level
  try {
    return MSet::make(Level(r), std::move(bucket));
  } catch (const mset_error&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<std::pair<long, MSet>> brute_force_factor(const FrobPresentation& pres,
                                                        long r_max,
                                                        BruteForceOptions opts) {
  long bound = opts.sweep_bound > 0 ? opts.sweep_bound : std::max<long>(4000, 64 * r_max);
  std::vector<std::vector<int>> omega = integer_actions(pres, bound);

  if (opts.mode == RunMode::serial) {
    for (long r = 1; r <= r_max; ++r)
      if (auto m = bucket_test(omega, r)) return std::make_pair(r, std::move(*m));
    return std::nullopt;
  }

  // parallel over levels; the smallest successful level wins
  std::vector<char> hit(r_max + 1, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long r = 1; r <= r_max; ++r)
    if (bucket_test(omega, r)) hit[r] = 1;
  for (long r = 1; r <= r_max; ++r)
    if (hit[r]) return std::make_pair(r, std::move(*bucket_test(omega, r)));
  return std::nullopt;
}

}  // namespace lambda_orders
