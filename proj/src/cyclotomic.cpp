#include "lambda_orders/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace lambda_orders {

namespace {

// exact division of integer polynomials, used to build Phi_n recursively
std::vector<Int> poly_divexact(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  long dn = (long)num.size() - 1, dd = (long)den.size() - 1;
  assert(dd >= 0 && den[dd] != 0);
  std::vector<Int> quot(dn - dd + 1, Int(0));
  for (long k = dn - dd; k >= 0; --k) {
    Int q = rem[k + dd] / den[dd];
    assert(rem[k + dd] % den[dd] == 0);
    quot[k] = q;
    if (q == 0) continue;
    for (long j = 0; j <= dd; ++j) rem[k + j] -= q * den[j];
  }
  for (const Int& x : rem) assert(x == 0);
  return quot;
}

struct CycloContext {
  long m;
  long phi;
  std::vector<Int> poly;              // Phi_m
  std::vector<std::vector<Rat>> pw;   // pw[k] = zeta^k in the power basis,
                                      // k up to max(m-1, 2*phi-2)
};

std::mutex g_mutex;
std::map<long, std::vector<Int>> g_phi_cache;
std::map<long, std::shared_ptr<const CycloContext>> g_ctx_cache;
std::set<long> g_corrupted;

// subfield-coordinate solvers, cached per (m, d); cleared together with the
// contexts so the fault-injection hook cannot leave stale derived data
std::map<std::pair<long, long>, std::shared_ptr<const ColumnSolver>> g_sub_cache;
std::mutex g_sub_mutex;

std::vector<Int> cyclotomic_poly_nolock(long n) {
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  // x^n - 1 divided by the product of Phi_d over proper divisors d
  std::vector<Int> num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  std::vector<Int> den{1};
  for (long d : divisors(n)) {
    if (d == n) continue;
    const std::vector<Int> phd = cyclotomic_poly_nolock(d);
    std::vector<Int> next(den.size() + phd.size() - 1, Int(0));
    for (size_t i = 0; i < den.size(); ++i)
      for (size_t j = 0; j < phd.size(); ++j) next[i + j] += den[i] * phd[j];
    den = std::move(next);
  }
  std::vector<Int> phi = poly_divexact(num, den);
  g_phi_cache.emplace(n, phi);
  return phi;
}

std::shared_ptr<const CycloContext> context(long m) {
  if (m < 1) throw cyclo_error(cyclo_error::Kind::bad_modulus, "modulus must be >= 1");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_ctx_cache.find(m);
  if (it != g_ctx_cache.end()) return it->second;
  auto ctx = std::make_shared<CycloContext>();
  ctx->m = m;
  ctx->poly = cyclotomic_poly_nolock(m);
  ctx->phi = (long)ctx->poly.size() - 1;
  long top = std::max(m - 1, 2 * ctx->phi - 2);
  ctx->pw.resize(top + 1, std::vector<Rat>(ctx->phi, Rat(0)));
  for (long k = 0; k <= top; ++k) {
    if (k < ctx->phi) {
      ctx->pw[k][k] = Rat(1);
      continue;
    }
    // zeta^k = zeta * zeta^(k-1), then reduce the overflow via Phi_m
    std::vector<Rat> shifted(ctx->phi + 1, Rat(0));
    for (long i = 0; i < ctx->phi; ++i) shifted[i + 1] = ctx->pw[k - 1][i];
    Rat topc = shifted[ctx->phi];
    for (long i = 0; i < ctx->phi; ++i)
      ctx->pw[k][i] = shifted[i] - topc * Rat(ctx->poly[i]);
  }
  if (g_corrupted.count(m) && ctx->phi > 0) ctx->pw[ctx->pw.size() - 1][0] += Rat(1);
  g_ctx_cache.emplace(m, ctx);
  return ctx;
}

}  // namespace

std::vector<Int> cyclotomic_poly(long n) {
  if (n < 1) throw cyclo_error(cyclo_error::Kind::bad_modulus, "n must be >= 1");
  std::lock_guard<std::mutex> lock(g_mutex);
  return cyclotomic_poly_nolock(n);
}

void test_corrupt_cyclotomic_cache(long m) {
  std::lock_guard<std::mutex> sub_lock(g_sub_mutex);
  std::lock_guard<std::mutex> lock(g_mutex);
  g_sub_cache.clear();
  if (m == 0) {
    g_corrupted.clear();
    g_ctx_cache.clear();
    return;
  }
  g_corrupted.insert(m);
  g_ctx_cache.erase(m);
}

CycloElt cyclo_zero(long m) { return CycloElt{m, qvec_zero(context(m)->phi)}; }

CycloElt cyclo_one(long m) { return cyclo_rat(m, Rat(1)); }

CycloElt cyclo_rat(long m, const Rat& q) {
  CycloElt e = cyclo_zero(m);
  if (!e.c.empty()) e.c[0] = q;
  return e;
}

CycloElt cyclo_zeta_pow(long m, long k) {
  auto ctx = context(m);
  CycloElt e = cyclo_zero(m);
  const auto& row = ctx->pw[mod_l(k, m)];
  for (long i = 0; i < ctx->phi; ++i) e.c[i] = row[i];
  return e;
}

CycloElt cyclo_add(const CycloElt& a, const CycloElt& b) {
  assert(a.m == b.m);
  return CycloElt{a.m, qvec_add(a.c, b.c)};
}

CycloElt cyclo_sub(const CycloElt& a, const CycloElt& b) {
  assert(a.m == b.m);
  return CycloElt{a.m, qvec_sub(a.c, b.c)};
}

CycloElt cyclo_scale(const Rat& q, const CycloElt& a) {
  return CycloElt{a.m, qvec_scale(q, a.c)};
}

CycloElt cyclo_mul(const CycloElt& a, const CycloElt& b) {
  assert(a.m == b.m);
  auto ctx = context(a.m);
  long phi = ctx->phi;
  QVec conv(std::max<long>(2 * phi - 1, 1), Rat(0));
  for (long i = 0; i < phi; ++i) {
    if (a.c[i] == Rat(0)) continue;
    for (long j = 0; j < phi; ++j) {
      if (b.c[j] == Rat(0)) continue;
      conv[i + j] += a.c[i] * b.c[j];
    }
  }
  CycloElt out = cyclo_zero(a.m);
  for (long k = 0; k < (long)conv.size(); ++k) {
    if (conv[k] == Rat(0)) continue;
    const auto& row = ctx->pw[k];
    for (long i = 0; i < phi; ++i) out.c[i] += conv[k] * row[i];
  }
  return out;
}

CycloElt galois_act(long u, const CycloElt& a) {
  long m = a.m;
  long um = mod_l(u, m);
  if (std::gcd(m == 1 ? 1 : um, m) != 1)
    throw cyclo_error(cyclo_error::Kind::not_a_unit,
                      std::to_string(u) + " is not a unit mod " + std::to_string(m));
  auto ctx = context(m);
  CycloElt out = cyclo_zero(m);
  for (long i = 0; i < ctx->phi; ++i) {
    if (a.c[i] == Rat(0)) continue;
    const auto& row = ctx->pw[mod_l(um * i, m)];
    for (long j = 0; j < ctx->phi; ++j) out.c[j] += a.c[i] * row[j];
  }
  return out;
}

std::vector<CycloElt> fixed_field_basis(long m, const std::vector<long>& h) {
  std::vector<long> units = units_mod(m);
  std::set<long> unit_set(units.begin(), units.end());
  std::set<long> hs;
  for (long u : h) {
    long um = mod_l(u, m);
    if (!unit_set.count(um))
      throw cyclo_error(cyclo_error::Kind::subgroup_invalid,
                        "subgroup element is not a unit mod m");
    hs.insert(um);
  }
  if (!hs.count(mod_l(1, m)))
    throw cyclo_error(cyclo_error::Kind::subgroup_invalid, "subgroup misses identity");
  for (long a : hs)
    for (long b : hs)
      if (!hs.count(mod_l(a * b, m)))
        throw cyclo_error(cyclo_error::Kind::subgroup_invalid,
                          "subgroup is not closed under multiplication");
  long phi = (long)context(m)->phi;
  assert(phi % (long)hs.size() == 0);
  long want = phi / (long)hs.size();

  std::vector<CycloElt> basis;
  QMat rows;  // accumulated independent orbit sums, for the rank test
  for (long i = 0; i < phi && (long)basis.size() < want; ++i) {
    CycloElt sum = cyclo_zero(m);
    for (long u : hs) sum = cyclo_add(sum, cyclo_zeta_pow(m, u * i));
    if (sum.is_zero()) continue;
    QMat probe = rows;
    probe.push_back(sum.c);
    if (qmat_rank(probe) != probe.size()) continue;
    rows = std::move(probe);
    // divide by the content to keep the vectors primitive integral
    Int num_gcd(0), den_lcm(1);
    for (const Rat& q : sum.c) {
      num_gcd = gcd(num_gcd, iabs(q.numerator()));
      den_lcm = lcm(den_lcm, q.denominator());
    }
    // orbit sums of integral powers are integral, so den_lcm is 1
    Rat content(num_gcd, den_lcm);
    basis.push_back(cyclo_scale(Rat(1) / content, sum));
  }
  assert((long)basis.size() == want);
  return basis;
}

namespace {

// solver expressing elements of Q(zeta_m) in the basis zeta_m^{d*j} of the
// subfield Q(zeta_{m/d})
std::shared_ptr<const ColumnSolver> subfield_solver(long m, long d) {
  std::lock_guard<std::mutex> lock(g_sub_mutex);
  auto key = std::make_pair(m, d);
  auto it = g_sub_cache.find(key);
  if (it != g_sub_cache.end()) return it->second;
  long sub_phi = euler_phi(m / d);
  QMat cols;  // build column-major then transpose
  for (long j = 0; j < sub_phi; ++j) cols.push_back(cyclo_zeta_pow(m, d * j).c);
  auto solver = std::make_shared<ColumnSolver>(qmat_transpose(cols));
  g_sub_cache.emplace(key, solver);
  return solver;
}

}  // namespace

CycloElt subfield_coords(long m, long d, const CycloElt& v) {
  assert(v.m == m);
  if (d < 1 || m % d != 0)
    throw cyclo_error(cyclo_error::Kind::bad_modulus, "subfield_coords: d must divide m");
  auto sol = subfield_solver(m, d)->solve(v.c);
  if (!sol)
    throw cyclo_error(cyclo_error::Kind::not_in_subfield,
                      "element does not lie in Q(zeta_{m/d})");
  return CycloElt{m / d, std::move(*sol)};
}

CycloElt subfield_embed(long m, long d, const CycloElt& v) {
  if (d < 1 || m % d != 0)
    throw cyclo_error(cyclo_error::Kind::bad_modulus, "subfield_embed: d must divide m");
  assert(v.m == m / d);
  CycloElt out = cyclo_zero(m);
  for (long j = 0; j < (long)v.c.size(); ++j) {
    if (v.c[j] == Rat(0)) continue;
    out = cyclo_add(out, cyclo_scale(v.c[j], cyclo_zeta_pow(m, d * j)));
  }
  return out;
}

}  // namespace lambda_orders
