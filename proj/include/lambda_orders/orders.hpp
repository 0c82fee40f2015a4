#ifndef LAMBDA_ORDERS_ORDERS_HPP
#define LAMBDA_ORDERS_ORDERS_HPP

#include "lambda_orders/frob_action.hpp"
#include "lambda_orders/group_algebra.hpp"
#include "lambda_orders/lambda_algebra.hpp"
#include "lambda_orders/lattice.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace lambda_orders {

constexpr long kDefaultPrimeBound = 13;

struct LambdaOrder {
  std::shared_ptr<const LambdaAlgebra> algebra;
  IntLattice lattice;  // full rank in the algebra coordinates
};

// the Q-linear map K -> Q[mu_r]^S of the maximal-order description: block s
// holds the z-power coefficients of crt_join((f(d s))_{d | r}); rows are
// grouped by point, r rows each
QMat membership_map(const LambdaAlgebra& alg);

// maximal Lambda-order: the preimage of Z[mu_r]^S under the membership map
LambdaOrder maximal_order(const MSet& s);
LambdaOrder maximal_order(std::shared_ptr<const LambdaAlgebra> alg);

// the image of the power basis z^i of Z[mu_r] in the algebra of the regular
// M-set at level r (requires provenance = regular r-set)
IntLattice zmu_image_lattice(const LambdaAlgebra& alg);
QVec zmu_coords(const LambdaAlgebra& alg, long power);

// Z[V]-image for V = (Z/p)^2 together with the element x = (1/p) sum of V
struct GroupRingData {
  std::shared_ptr<const LambdaAlgebra> algebra;  // algebra of (Z/p)^2 at level p
  IntLattice group_ring;                         // span of the character rows
  QVec x;                                        // value p at the trivial character
};

GroupRingData group_ring_data(long p);

struct VerifyReport {
  bool unit = true;
  bool mult_closed = true;
  bool psi_stable = true;
  bool frobenius = true;
  long prime_bound = kDefaultPrimeBound;
  std::vector<std::string> failures;  // human-readable witnesses

  bool pass() const { return unit && mult_closed && psi_stable && frobenius; }
};

// checks: unit membership (waived for dimension 0), closure on basis pairs,
// psi(a)-stability for every residue a, and the Frobenius congruence
// psi_p(x) - x^p in p*L for lattice basis x and primes p <= prime_bound
VerifyReport verify_order(const LambdaOrder& order, long prime_bound = kDefaultPrimeBound);

struct CertificateOptions {
  RunMode mode = RunMode::parallel;
  long prime_bound = kDefaultPrimeBound;
  long max_candidates = 1 << 22;  // guard against combinatorial blowup
};

struct CertificateResult {
  bool maximal;
  std::optional<IntLattice> witness;  // a proper Lambda-stable overorder
  long candidates_checked = 0;
};

// exhaustively enumerates the lattices L with M <= L <= (1/q)M (one per
// subspace of the F_q-vector space (1/q)M / M) and reports the first, in
// lexicographic order, that is a Lambda-order; requires rank <= 8
CertificateResult maximality_certificate(const LambdaOrder& m, long q,
                                         CertificateOptions opts = {});

// intersection property: the maximal order of the subalgebra attached to S
// equals the pullback of the maximal order of the algebra attached to T
// along the algebra map of an M-set surjection T ->> S
bool intersection_check(const MSetMap& onto);

}  // namespace lambda_orders

#endif
