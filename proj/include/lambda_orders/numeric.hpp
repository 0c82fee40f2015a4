#ifndef LAMBDA_ORDERS_NUMERIC_HPP
#define LAMBDA_ORDERS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambda_orders {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Rat rat(long n) { return Rat(Int(n)); }
inline Rat rat(const Int& n) { return Rat(n); }
inline Rat rat(const Int& n, const Int& d) { return Rat(n, d); }

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

// floor division; cpp_int's operator/ truncates toward zero
inline Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& q) {
  if (q.denominator() == 1) return q.numerator().str();
  return q.numerator().str() + "/" + q.denominator().str();
}

inline Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer string");
  return Int(s);
}

// ---- small (machine-word) number theory -----------------------------------

inline long gcd_l(long a, long b) { return std::gcd(a, b); }
inline long lcm_l(long a, long b) { return std::lcm(a, b); }

inline long mod_l(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::pair<long, int>> factorize(long n);
long euler_phi(long n);
std::vector<long> divisors(long n);  // sorted increasing
bool is_prime(long n);
std::vector<long> primes_up_to(long n);

// residues of (Z/m)* in increasing order; for m = 1 this is {0}
std::vector<long> units_mod(long m);

// smallest prime factor table, spf[0] = spf[1] = 0
std::vector<long> spf_table(long n);

}  // namespace lambda_orders

#endif
