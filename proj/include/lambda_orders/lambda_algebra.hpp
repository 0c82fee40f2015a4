#ifndef LAMBDA_ORDERS_LAMBDA_ALGEBRA_HPP
#define LAMBDA_ORDERS_LAMBDA_ALGEBRA_HPP

#include "lambda_orders/cyclotomic.hpp"
#include "lambda_orders/linalg.hpp"
#include "lambda_orders/mset.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace lambda_orders {

class algebra_error : public std::runtime_error {
 public:
  enum class Kind { not_etale, not_equivariant_value, incompatible };
  algebra_error(Kind k, std::string msg) : std::runtime_error(std::move(msg)), kind(k) {}
  Kind kind;
};

// The finite etale Q-algebra of unit-equivariant functions S -> Q(zeta_r),
// with pointwise multiplication and psi_a(f) = f(a * -).  The basis is built
// orbitwise: orbit o with representative rep_o and stabilizer H_o carries the
// fixed-field basis of Q(zeta_r)^{H_o}, extended equivariantly and by zero.
class LambdaAlgebra {
 public:
  long level() const { return level_; }
  long dim() const { return dim_; }
  const MSet& provenance() const { return mset_; }
  const MSet::UnitOrbits& orbits() const { return orbits_; }
  const std::vector<CycloElt>& orbit_basis(int o) const { return orbit_basis_[o]; }
  long basis_offset(int o) const { return basis_offset_[o]; }
  // global basis index -> (orbit, index within the orbit block)
  std::pair<int, int> basis_position(long j) const { return basis_index_[j]; }

  const QVec& unit() const { return unit_; }
  const QMat& psi(long a) const { return psi_[mod_l(a, level_)]; }
  const QVec& structure_constant(long i, long j) const { return sc_[i][j]; }
  // value of basis function j at point s
  const CycloElt& eval(int s, long j) const { return eval_[s][j]; }

  QVec mul(const QVec& x, const QVec& y) const;
  QVec apply_psi(long a, const QVec& x) const;
  QVec pow(const QVec& x, long e) const;  // e >= 1

  // coordinates of the equivariant function with the given value at each
  // orbit representative; values[o] must lie in the fixed space of orbit o
  QVec coords_of_values(const std::vector<CycloElt>& values) const;

  friend LambdaAlgebra algebra_from_mset(const MSet& s);

 private:
  long level_ = 1;
  long dim_ = 0;
  MSet mset_ = MSet::trivial(Level(1), 0);
  MSet::UnitOrbits orbits_;
  std::vector<std::vector<CycloElt>> orbit_basis_;
  std::vector<long> basis_offset_;
  std::vector<std::pair<int, int>> basis_index_;
  std::vector<std::shared_ptr<const ColumnSolver>> orbit_solver_;
  QVec unit_;
  std::vector<QMat> psi_;
  std::vector<std::vector<QVec>> sc_;
  std::vector<std::vector<CycloElt>> eval_;
};

LambdaAlgebra algebra_from_mset(const MSet& s);

struct ComponentField {
  std::vector<int> orbit;
  long conductor;  // smallest divisor f of r with Q(zeta_r)^H inside Q(zeta_f)
  long degree;     // = orbit size
};

std::vector<ComponentField> component_fields(const MSet& s);

// recover the M-set from the algebra: evaluation functionals give the points,
// the psi matrices give the action; verified etale via the trace form
MSet points(const LambdaAlgebra& k);

struct FieldCheck {
  bool is_field;
  std::optional<QVec> idempotent;  // nontrivial idempotent when not a field
};

FieldCheck is_field_check(const LambdaAlgebra& k);

// matrix of the algebra map K_S -> K_T induced by an M-set map T -> S
// (contravariant: f maps to f o phi); algebras must be built at the map's level
QMat algebra_pullback(const LambdaAlgebra& alg_t, const LambdaAlgebra& alg_s,
                      const MSetMap& phi);

// change of coordinates between the algebras of the same M-set presented at
// level r and at a multiple of r; columns express the `from` basis in `to`
QMat basis_transfer(const LambdaAlgebra& from, const LambdaAlgebra& to);

}  // namespace lambda_orders

#endif
