#include "lambda_orders/linalg.hpp"

#include <cassert>

namespace lambda_orders {

QVec qvec_zero(size_t n) { return QVec(n, Rat(0)); }

QVec qvec_add(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec qvec_scale(const Rat& c, const QVec& a) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool qvec_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != Rat(0)) return false;
  return true;
}

QMat qmat_zero(size_t rows, size_t cols) { return QMat(rows, qvec_zero(cols)); }

QMat qmat_identity(size_t n) {
  QMat m = qmat_zero(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  QMat out = qmat_zero(n, m);
  for (size_t i = 0; i < n; ++i) {
    assert(a[i].size() == k);
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == Rat(0)) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

QVec qmat_apply(const QMat& a, const QVec& x) {
  QVec out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    assert(a[i].size() == x.size());
    for (size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != Rat(0) && x[j] != Rat(0)) out[i] += a[i][j] * x[j];
  }
  return out;
}

QMat qmat_transpose(const QMat& a) {
  size_t n = a.size(), m = n ? a[0].size() : 0;
  QMat out = qmat_zero(m, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

Rat qmat_det(QMat a) {
  size_t n = a.size();
  if (n == 0) return Rat(1);
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rat inv = Rat(1) / a[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == Rat(0)) continue;
      Rat f = a[i][col] * inv;
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

size_t qmat_rank(QMat a) {
  size_t n = a.size(), m = n ? a[0].size() : 0;
  size_t r = 0;
  for (size_t col = 0; col < m && r < n; ++col) {
    size_t piv = r;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    Rat inv = Rat(1) / a[r][col];
    for (size_t i = r + 1; i < n; ++i) {
      if (a[i][col] == Rat(0)) continue;
      Rat f = a[i][col] * inv;
      for (size_t j = col; j < m; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

ColumnSolver::ColumnSolver(QMat a) : rows_(a.size()), cols_(rows_ ? a[0].size() : 0) {
  red_ = std::move(a);
  ops_ = qmat_identity(rows_);
  size_t r = 0;
  for (size_t col = 0; col < cols_ && r < rows_; ++col) {
    size_t piv = r;
    while (piv < rows_ && red_[piv][col] == Rat(0)) ++piv;
    if (piv == rows_) continue;
    std::swap(red_[piv], red_[r]);
    std::swap(ops_[piv], ops_[r]);
    Rat inv = Rat(1) / red_[r][col];
    for (size_t j = 0; j < cols_; ++j) red_[r][j] *= inv;
    for (size_t j = 0; j < rows_; ++j) ops_[r][j] *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r || red_[i][col] == Rat(0)) continue;
      Rat f = red_[i][col];
      for (size_t j = 0; j < cols_; ++j) red_[i][j] -= f * red_[r][j];
      for (size_t j = 0; j < rows_; ++j) ops_[i][j] -= f * ops_[r][j];
    }
    pivots_.push_back(col);
    ++r;
  }
}

std::optional<QVec> ColumnSolver::solve(const QVec& b) const {
  assert(b.size() == rows_);
  QVec rb = qmat_apply(ops_, b);
  QVec x(cols_, Rat(0));
  for (size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = rb[i];
  // rows past the rank are zero rows of red_, so they decide consistency
  for (size_t i = pivots_.size(); i < rows_; ++i)
    if (rb[i] != Rat(0)) return std::nullopt;
  return x;
}

}  // namespace lambda_orders
