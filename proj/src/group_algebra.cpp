#include "lambda_orders/group_algebra.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>

namespace lambda_orders {

GroupAlgebraElt ga_zero(long r) { return GroupAlgebraElt{r, qvec_zero(r)}; }

GroupAlgebraElt ga_one(long r) { return ga_z_pow(r, 0); }

GroupAlgebraElt ga_z_pow(long r, long k) {
  GroupAlgebraElt e = ga_zero(r);
  e.c[mod_l(k, r)] = Rat(1);
  return e;
}

GroupAlgebraElt ga_add(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
  assert(a.r == b.r);
  return GroupAlgebraElt{a.r, qvec_add(a.c, b.c)};
}

GroupAlgebraElt ga_mul(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
  assert(a.r == b.r);
  GroupAlgebraElt out = ga_zero(a.r);
  for (long i = 0; i < a.r; ++i) {
    if (a.c[i] == Rat(0)) continue;
    for (long j = 0; j < a.r; ++j) {
      if (b.c[j] == Rat(0)) continue;
      out.c[mod_l(i + j, a.r)] += a.c[i] * b.c[j];
    }
  }
  return out;
}

GroupAlgebraElt ga_scale(const Rat& q, const GroupAlgebraElt& a) {
  return GroupAlgebraElt{a.r, qvec_scale(q, a.c)};
}

bool is_integral(const GroupAlgebraElt& e) {
  for (const Rat& q : e.c)
    if (!is_integer(q)) return false;
  return true;
}

namespace {

// dense polynomials over Q, index = degree
using QPoly = std::vector<Rat>;

long pdeg(const QPoly& p) {
  for (long i = (long)p.size() - 1; i >= 0; --i)
    if (p[i] != Rat(0)) return i;
  return -1;
}

QPoly ptrim(QPoly p) {
  p.resize(pdeg(p) + 1);
  return p;
}

QPoly pmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Rat(0)) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return ptrim(out);
}

QPoly psub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return ptrim(out);
}

// rem, quot of a by b
std::pair<QPoly, QPoly> pdivmod(QPoly a, const QPoly& b) {
  long db = pdeg(b);
  assert(db >= 0);
  QPoly quot(std::max<long>(pdeg(a) - db + 1, 0), Rat(0));
  while (pdeg(a) >= db) {
    long k = pdeg(a) - db;
    Rat f = a[pdeg(a)] / b[db];
    quot[k] = f;
    for (long j = 0; j <= db; ++j) a[k + j] -= f * b[j];
  }
  return {ptrim(a), ptrim(quot)};
}

// extended euclid: returns (g, s, t) with s*a + t*b = g, g monic
std::tuple<QPoly, QPoly, QPoly> pxgcd(QPoly a, QPoly b) {
  QPoly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
  while (pdeg(b) >= 0) {
    auto [rem, quot] = pdivmod(a, b);
    QPoly s2 = psub(s0, pmul(quot, s1));
    QPoly t2 = psub(t0, pmul(quot, t1));
    a = std::move(b);
    b = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  long d = pdeg(a);
  assert(d >= 0);
  Rat lead = a[d];
  for (auto& x : a) x /= lead;
  for (auto& x : s0) x /= lead;
  for (auto& x : t0) x /= lead;
  return {ptrim(a), ptrim(s0), ptrim(t0)};
}

struct CrtContext {
  long r;
  std::vector<long> divs;
  std::vector<GroupAlgebraElt> idempotents;
};

std::map<long, std::shared_ptr<const CrtContext>> g_crt_cache;
std::mutex g_crt_mutex;

QPoly phi_as_qpoly(long n) {
  QPoly out;
  for (const Int& x : cyclotomic_poly(n)) out.push_back(Rat(x));
  return out;
}

std::shared_ptr<const CrtContext> crt_context(long r) {
  std::lock_guard<std::mutex> lock(g_crt_mutex);
  auto it = g_crt_cache.find(r);
  if (it != g_crt_cache.end()) return it->second;
  auto ctx = std::make_shared<CrtContext>();
  ctx->r = r;
  ctx->divs = divisors(r);
  for (long d : ctx->divs) {
    QPoly f = phi_as_qpoly(r / d);
    // g = (z^r - 1) / Phi_{r/d}
    QPoly whole(r + 1, Rat(0));
    whole[0] = Rat(-1);
    whole[r] = Rat(1);
    auto [rem, g] = pdivmod(whole, f);
    assert(pdeg(rem) < 0);
    auto [gcd_fg, s, t] = pxgcd(f, g);
    assert(pdeg(gcd_fg) == 0);  // coprime factors
    // idempotent = t*g, which is 1 mod f and 0 mod g
    QPoly eps = pmul(t, g);
    GroupAlgebraElt e = ga_zero(r);
    for (long i = 0; i <= pdeg(eps); ++i) e.c[mod_l(i, r)] += eps[i];
    ctx->idempotents.push_back(std::move(e));
  }
  g_crt_cache.emplace(r, ctx);
  return ctx;
}

}  // namespace

const std::vector<GroupAlgebraElt>& crt_idempotents(long r) {
  // contexts are cached for the process lifetime, so the reference stays valid
  return crt_context(r)->idempotents;
}

std::vector<CycloElt> crt_split(const GroupAlgebraElt& e) {
  std::vector<CycloElt> out;
  for (long d : divisors(e.r)) {
    long m = e.r / d;
    // reduce e(x) mod Phi_m; powers x^k for k < r come from the context table
    CycloElt comp = cyclo_zero(m);
    for (long k = 0; k < e.r; ++k) {
      if (e.c[k] == Rat(0)) continue;
      comp = cyclo_add(comp, cyclo_scale(e.c[k], cyclo_zeta_pow(m, k)));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

GroupAlgebraElt crt_join(long r, const std::vector<CycloElt>& components) {
  auto ctx = crt_context(r);
  assert(components.size() == ctx->divs.size());
  GroupAlgebraElt out = ga_zero(r);
  for (size_t i = 0; i < ctx->divs.size(); ++i) {
    const CycloElt& comp = components[i];
    assert(comp.m == r / ctx->divs[i]);
    // lift the power-basis polynomial to Q[z]/(z^r-1) and project
    GroupAlgebraElt lift = ga_zero(r);
    for (long j = 0; j < (long)comp.c.size(); ++j) lift.c[j] = comp.c[j];
    out = ga_add(out, ga_mul(lift, ctx->idempotents[i]));
  }
  return out;
}

}  // namespace lambda_orders
