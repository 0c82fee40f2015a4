#include "lambda_orders/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace lambda_orders {

ZMat hnf(ZMat m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    // gcd the column entries below r into row r by euclidean row operations
    while (true) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i) {
        if (m[i][col] == 0) continue;
        if (best == rows || iabs(m[i][col]) < iabs(m[best][col])) best = i;
      }
      if (best == rows) break;  // column is zero below r
      std::swap(m[r], m[best]);
      bool clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][col] == 0) continue;
        Int q = fdiv(m[i][col], m[r][col]);
        for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[r][col] == 0) continue;
    if (m[r][col] < 0)
      for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    for (size_t i = 0; i < r; ++i) {
      Int q = fdiv(m[i][col], m[r][col]);
      if (q == 0) continue;
      for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

IntLattice IntLattice::from_rows(long dim, const QMat& rows) {
  Int den(1);
  for (const auto& row : rows) {
    assert((long)row.size() == dim);
    for (const Rat& q : row) den = lcm(den, q.denominator());
  }
  ZMat zrows;
  for (const auto& row : rows) {
    std::vector<Int> zr(dim);
    for (long j = 0; j < dim; ++j)
      zr[j] = row[j].numerator() * (den / row[j].denominator());
    zrows.push_back(std::move(zr));
  }
  ZMat h = hnf(std::move(zrows));
  // normalize: divide den and all entries by their common gcd
  Int g = den;
  for (const auto& row : h)
    for (const Int& x : row) g = gcd(g, iabs(x));
  if (g == 0) g = 1;
  for (auto& row : h)
    for (Int& x : row) x /= g;
  IntLattice out;
  out.dim = dim;
  out.rank = (long)h.size();
  out.den = den / g;
  out.basis = std::move(h);
  return out;
}

IntLattice IntLattice::standard(long dim) {
  IntLattice out;
  out.dim = dim;
  out.rank = dim;
  out.den = 1;
  out.basis.assign(dim, std::vector<Int>(dim, Int(0)));
  for (long i = 0; i < dim; ++i) out.basis[i][i] = 1;
  return out;
}

QVec IntLattice::basis_row(long i) const {
  QVec out(dim);
  for (long j = 0; j < dim; ++j) out[j] = Rat(basis[i][j], den);
  return out;
}

std::optional<std::vector<Int>> IntLattice::coords(const QVec& x) const {
  assert((long)x.size() == dim);
  // solve y * basis = den * x with y integral, walking the pivot structure
  QVec target(dim);
  for (long j = 0; j < dim; ++j) target[j] = Rat(den) * x[j];
  std::vector<Int> y(rank, Int(0));
  for (long i = 0; i < rank; ++i) {
    long piv = 0;
    while (piv < dim && basis[i][piv] == 0) ++piv;
    assert(piv < dim);
    Rat coeff = target[piv] / Rat(basis[i][piv]);
    if (!is_integer(coeff)) return std::nullopt;
    y[i] = coeff.numerator();
    if (y[i] != 0)
      for (long j = piv; j < dim; ++j) target[j] -= Rat(y[i] * basis[i][j]);
  }
  for (long j = 0; j < dim; ++j)
    if (target[j] != Rat(0)) return std::nullopt;
  return y;
}

bool IntLattice::contains(const QVec& x) const { return coords(x).has_value(); }

namespace {

// rational inverse of a square nonsingular matrix
QMat qmat_inverse(const QMat& a) {
  size_t n = a.size();
  QMat red = a;
  QMat inv = qmat_identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && red[piv][col] == Rat(0)) ++piv;
    if (piv == n)
      throw lattice_error(lattice_error::Kind::not_full_rank, "matrix is singular");
    std::swap(red[piv], red[col]);
    std::swap(inv[piv], inv[col]);
    Rat f = Rat(1) / red[col][col];
    for (size_t j = 0; j < n; ++j) {
      red[col][j] *= f;
      inv[col][j] *= f;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || red[i][col] == Rat(0)) continue;
      Rat g = red[i][col];
      for (size_t j = 0; j < n; ++j) {
        red[i][j] -= g * red[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

IntLattice preimage_lattice(const QMat& a) {
  size_t k = a.size();
  size_t n = k ? a[0].size() : 0;
  if (n == 0) {
    IntLattice out;
    out.dim = 0;
    out.rank = 0;
    return out;
  }
  // the preimage is the dual of the Z-span of the rows of A
  Int den(1);
  for (const auto& row : a)
    for (const Rat& q : row) den = lcm(den, q.denominator());
  ZMat rows;
  for (const auto& row : a) {
    std::vector<Int> zr(n);
    for (size_t j = 0; j < n; ++j)
      zr[j] = row[j].numerator() * (den / row[j].denominator());
    rows.push_back(std::move(zr));
  }
  ZMat h = hnf(std::move(rows));
  if (h.size() != n)
    throw lattice_error(lattice_error::Kind::not_full_rank,
                        "preimage_lattice: map does not have full column rank");
  // {x : H x in den * Z^n} has basis den * H^{-1} (columns)
  QMat hq = qmat_zero(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) hq[i][j] = Rat(h[i][j]);
  QMat hinv = qmat_inverse(hq);
  QMat gen = qmat_transpose(hinv);
  for (auto& row : gen)
    for (auto& q : row) q *= Rat(den);
  return IntLattice::from_rows((long)n, gen);
}

IntLattice preimage_lattice(const QMat& a, const IntLattice& target) {
  if (target.rank != target.dim)
    throw lattice_error(lattice_error::Kind::not_full_rank,
                        "preimage_lattice: target must have full rank");
  // A x in target  <=>  den * H^{-T} A x in Z^rank
  QMat ht = qmat_zero(target.rank, target.rank);
  for (long i = 0; i < target.rank; ++i)
    for (long j = 0; j < target.rank; ++j) ht[i][j] = Rat(target.basis[j][i]);
  QMat m = qmat_mul(qmat_inverse(ht), a);
  for (auto& row : m)
    for (auto& q : row) q *= Rat(target.den);
  return preimage_lattice(m);
}

IntLattice lattice_sum(const IntLattice& a, const IntLattice& b) {
  assert(a.dim == b.dim);
  QMat rows;
  for (long i = 0; i < a.rank; ++i) rows.push_back(a.basis_row(i));
  for (long i = 0; i < b.rank; ++i) rows.push_back(b.basis_row(i));
  return IntLattice::from_rows(a.dim, rows);
}

Rat relative_index(const IntLattice& l1, const IntLattice& l2) {
  if (l1.dim != l2.dim || l1.rank != l2.rank)
    throw lattice_error(lattice_error::Kind::span_mismatch,
                        "relative_index: ranks differ");
  if (l1.rank == 0) return Rat(1);
  // express the basis of l1 in the basis of l2 and take |det|
  QMat x = qmat_zero(l1.rank, l1.rank);
  for (long i = 0; i < l1.rank; ++i) {
    QVec target = l1.basis_row(i);
    for (long row = 0; row < l2.rank; ++row) {
      long piv = 0;
      while (piv < l2.dim && l2.basis[row][piv] == 0) ++piv;
      Rat coeff = target[piv] / Rat(l2.basis[row][piv], l2.den);
      x[i][row] = coeff;
      if (coeff != Rat(0))
        for (long j = piv; j < l2.dim; ++j)
          target[j] -= coeff * Rat(l2.basis[row][j], l2.den);
    }
    if (!qvec_is_zero(target))
      throw lattice_error(lattice_error::Kind::span_mismatch,
                          "relative_index: spans differ");
  }
  Rat det = qmat_det(x);
  return det < Rat(0) ? -det : det;
}

Int lattice_index(const IntLattice& l1, const IntLattice& l2) {
  if (!lattice_subset(l1, l2))
    throw lattice_error(lattice_error::Kind::not_contained,
                        "lattice_index: first lattice is not contained in the second");
  if (l1.rank != l2.rank)
    throw lattice_error(lattice_error::Kind::span_mismatch,
                        "lattice_index: ranks differ");
  Rat idx = relative_index(l1, l2);
  assert(is_integer(idx));
  return idx.numerator();
}

bool lattice_subset(const IntLattice& l1, const IntLattice& l2) {
  if (l1.dim != l2.dim) return false;
  for (long i = 0; i < l1.rank; ++i)
    if (!l2.contains(l1.basis_row(i))) return false;
  return true;
}

}  // namespace lambda_orders
