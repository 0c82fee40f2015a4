#ifndef LAMBDA_ORDERS_LINALG_HPP
#define LAMBDA_ORDERS_LINALG_HPP

#include "lambda_orders/numeric.hpp"

#include <optional>
#include <vector>

namespace lambda_orders {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row major

QVec qvec_zero(size_t n);
QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const Rat& c, const QVec& a);
bool qvec_is_zero(const QVec& a);

QMat qmat_zero(size_t rows, size_t cols);
QMat qmat_identity(size_t n);
QMat qmat_mul(const QMat& a, const QMat& b);
QVec qmat_apply(const QMat& a, const QVec& x);  // a * x, x a column
QMat qmat_transpose(const QMat& a);

// determinant by fraction-free elimination; a must be square
Rat qmat_det(QMat a);
size_t qmat_rank(QMat a);

// Solves A x = b for a fixed matrix A (columns = unknowns).  The row
// reduction of A is done once; each solve is a cheap substitution.
// solve() returns nullopt when the system is inconsistent and the
// least-index solution (free variables zero) otherwise.
class ColumnSolver {
 public:
  explicit ColumnSolver(QMat a);
  std::optional<QVec> solve(const QVec& b) const;
  size_t rank() const { return pivots_.size(); }

 private:
  size_t rows_, cols_;
  QMat red_;                  // row-reduced A
  QMat ops_;                  // row operation matrix: ops_ * A = red_
  std::vector<size_t> pivots_;  // pivot column per reduced row
};

}  // namespace lambda_orders

#endif
