#ifndef LAMBDA_ORDERS_GROUP_ALGEBRA_HPP
#define LAMBDA_ORDERS_GROUP_ALGEBRA_HPP

#include "lambda_orders/cyclotomic.hpp"

#include <vector>

namespace lambda_orders {

// element of Q[z]/(z^r - 1), coefficient i belongs to z^i
struct GroupAlgebraElt {
  long r = 1;
  QVec c;  // length r

  friend bool operator==(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
    return a.r == b.r && a.c == b.c;
  }
};

GroupAlgebraElt ga_zero(long r);
GroupAlgebraElt ga_one(long r);
GroupAlgebraElt ga_z_pow(long r, long k);
GroupAlgebraElt ga_add(const GroupAlgebraElt& a, const GroupAlgebraElt& b);
GroupAlgebraElt ga_mul(const GroupAlgebraElt& a, const GroupAlgebraElt& b);
GroupAlgebraElt ga_scale(const Rat& q, const GroupAlgebraElt& a);

// true iff every coefficient is an integer, i.e. the element lies in Z[mu_r]
bool is_integral(const GroupAlgebraElt& e);

// CRT decomposition along z^r - 1 = prod_{d|r} Phi_{r/d}.  Components are
// indexed by the divisors of r in increasing order; component d lives in
// Q[x]/Phi_{r/d} = Q(zeta_{r/d}), with z mapping to the class of zeta_{r/d},
// i.e. of zeta_r^d.
std::vector<CycloElt> crt_split(const GroupAlgebraElt& e);
GroupAlgebraElt crt_join(long r, const std::vector<CycloElt>& components);

// the idempotent system: eps[i] maps to 1 in component divisors(r)[i], 0 elsewhere
const std::vector<GroupAlgebraElt>& crt_idempotents(long r);

}  // namespace lambda_orders

#endif
