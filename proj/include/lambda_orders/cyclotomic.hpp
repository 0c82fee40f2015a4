#ifndef LAMBDA_ORDERS_CYCLOTOMIC_HPP
#define LAMBDA_ORDERS_CYCLOTOMIC_HPP

#include "lambda_orders/linalg.hpp"
#include "lambda_orders/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lambda_orders {

class cyclo_error : public std::runtime_error {
 public:
  enum class Kind { not_a_unit, subgroup_invalid, bad_modulus, not_in_subfield };
  cyclo_error(Kind k, std::string msg) : std::runtime_error(std::move(msg)), kind(k) {}
  Kind kind;
};

// coefficients of the n-th cyclotomic polynomial, index i = coefficient of x^i
std::vector<Int> cyclotomic_poly(long n);

// element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1)
struct CycloElt {
  long m = 1;
  QVec c;  // length phi(m)

  bool is_zero() const { return qvec_is_zero(c); }
  friend bool operator==(const CycloElt& a, const CycloElt& b) {
    return a.m == b.m && a.c == b.c;
  }
};

CycloElt cyclo_zero(long m);
CycloElt cyclo_one(long m);
CycloElt cyclo_rat(long m, const Rat& q);
CycloElt cyclo_zeta_pow(long m, long k);  // zeta_m^k reduced mod Phi_m
CycloElt cyclo_add(const CycloElt& a, const CycloElt& b);
CycloElt cyclo_sub(const CycloElt& a, const CycloElt& b);
CycloElt cyclo_mul(const CycloElt& a, const CycloElt& b);
CycloElt cyclo_scale(const Rat& q, const CycloElt& a);

// the automorphism zeta -> zeta^u for u a unit mod m; action of (Z/m)^*
CycloElt galois_act(long u, const CycloElt& a);

// Q-basis of the subspace fixed by the subgroup H of (Z/m)^*, built from
// H-orbit sums of power basis elements, each divided by its content.
// Length is exactly phi(m) / |H|.
std::vector<CycloElt> fixed_field_basis(long m, const std::vector<long>& h);

// rewrite v in Q(zeta_m) as an element of Q(zeta_{m/d}) along
// zeta_{m/d} = zeta_m^d; requires d | m and v in the subfield
CycloElt subfield_coords(long m, long d, const CycloElt& v);

// inverse of subfield_coords: include Q(zeta_{m/d}) into Q(zeta_m)
CycloElt subfield_embed(long m, long d, const CycloElt& v);

// test hook: corrupt the cached reduction table for modulus m (selftest fault
// injection); passing m = 0 clears all corruption
void test_corrupt_cyclotomic_cache(long m);

}  // namespace lambda_orders

#endif
