#include "lambda_orders/numeric.hpp"

namespace lambda_orders {

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long euler_phi(long n) {
  long phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<long> divisors(long n) {
  std::vector<long> out{1};
  for (auto [p, e] : factorize(n)) {
    size_t sz = out.size();
    long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::vector<long> units_mod(long m) {
  if (m < 1) throw std::invalid_argument("units_mod: m must be positive");
  if (m == 1) return {0};
  std::vector<long> out;
  for (long u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) out.push_back(u);
  return out;
}

std::vector<long> spf_table(long n) {
  std::vector<long> spf(n + 1, 0);
  for (long i = 2; i <= n; ++i) {
    if (spf[i]) continue;
    for (long j = i; j <= n; j += i)
      if (!spf[j]) spf[j] = i;
  }
  return spf;
}

}  // namespace lambda_orders
