#ifndef LAMBDA_ORDERS_LATTICE_HPP
#define LAMBDA_ORDERS_LATTICE_HPP

#include "lambda_orders/linalg.hpp"
#include "lambda_orders/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambda_orders {

class lattice_error : public std::runtime_error {
 public:
  enum class Kind { not_contained, span_mismatch, not_full_rank, rank_too_large };
  lattice_error(Kind k, std::string msg) : std::runtime_error(std::move(msg)), kind(k) {}
  Kind kind;
};

using ZMat = std::vector<std::vector<Int>>;

// row Hermite normal form: pivots positive and strictly to the right going
// down, entries above a pivot reduced into [0, pivot); zero rows dropped
ZMat hnf(ZMat m);

// lattice (1/den) * rowspan(basis) inside Q^dim, basis in HNF, normalized so
// that gcd of den and all entries is 1
struct IntLattice {
  long dim = 0;
  long rank = 0;
  Int den = 1;
  ZMat basis;

  static IntLattice from_rows(long dim, const QMat& rows);
  static IntLattice standard(long dim);  // Z^dim

  bool contains(const QVec& x) const;
  // coordinates of x in the basis (integers), if x is in the lattice
  std::optional<std::vector<Int>> coords(const QVec& x) const;
  QVec basis_row(long i) const;  // row i as a rational vector

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    return a.dim == b.dim && a.rank == b.rank && a.den == b.den && a.basis == b.basis;
  }
};

// {x in Q^n : A x in Z^k}; A must have full column rank
IntLattice preimage_lattice(const QMat& a);

// {x in Q^n : A x in target}; target must be full rank in its ambient space
IntLattice preimage_lattice(const QMat& a, const IntLattice& target);

// sum (join) of two lattices in the same ambient space
IntLattice lattice_sum(const IntLattice& a, const IntLattice& b);

// [l2 : l1] for l1 a finite-index sublattice of l2; throws otherwise
Int lattice_index(const IntLattice& l1, const IntLattice& l2);

// generalized index [l2 : l1] as a positive rational; requires equal span
Rat relative_index(const IntLattice& l1, const IntLattice& l2);

bool lattice_subset(const IntLattice& l1, const IntLattice& l2);  // l1 subset of l2

}  // namespace lambda_orders

#endif
