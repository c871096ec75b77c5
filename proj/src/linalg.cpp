#include "lssl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lssl {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, RealVector data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw std::invalid_argument("DenseMatrix: data length != rows*cols");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0,
                               std::size_t c1) const {
  if (r1 < r0 || c1 < c0 || r1 > rows_ || c1 > cols_)
    throw std::invalid_argument("DenseMatrix::block: bad range");
  DenseMatrix b(r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c) b(r - r0, c - c0) = (*this)(r, c);
  return b;
}

RealVector dense_matvec(const DenseMatrix& a, const RealVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("dense_matvec: dimension mismatch");
  RealVector y(a.rows(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const double* row = a.row_ptr(r);
    double acc = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
  return y;
}

DenseMatrix dense_matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dense_matmul: dimension mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* arow = a.row_ptr(i);
    double* crow = c.row_ptr(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = arow[k];
      if (aik == 0.0) continue;
      const double* brow = b.row_ptr(k);
      for (std::size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

DenseMatrix dense_from_diag(const DiagonalMatrix& d) {
  DenseMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d.diag[i];
  return m;
}

DenseMatrix dense_from_tridiag(const TridiagonalMatrix& t) {
  const std::size_t n = t.size();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = t.main[i];
    if (i + 1 < n) {
      m(i + 1, i) = t.sub[i];
      m(i, i + 1) = t.super[i];
    }
  }
  return m;
}

namespace {

// LU with partial pivoting, right-hand sides solved in place.
void gauss_solve_inplace(DenseMatrix a, DenseMatrix& rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.rows() != n)
    throw std::invalid_argument("dense_solve: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::fabs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::fabs(a(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-12) throw std::runtime_error("dense_solve: singular matrix (pivot < 1e-12)");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
      for (std::size_t c = 0; c < rhs.cols(); ++c) std::swap(rhs(col, c), rhs(piv, c));
    }
    const double inv = 1.0 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) * inv;
      if (f == 0.0) continue;
      for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
      for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) -= f * rhs(col, c);
    }
  }
  for (std::size_t ri = n; ri-- > 0;) {
    const double inv = 1.0 / a(ri, ri);
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      double acc = rhs(ri, c);
      for (std::size_t k = ri + 1; k < n; ++k) acc -= a(ri, k) * rhs(k, c);
      rhs(ri, c) = acc * inv;
    }
  }
}

}  // namespace

RealVector dense_solve(const DenseMatrix& a, const RealVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("dense_solve: dimension mismatch");
  DenseMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  gauss_solve_inplace(a, rhs);
  RealVector x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

DenseMatrix dense_solve_multi(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix rhs = b;
  gauss_solve_inplace(a, rhs);
  return rhs;
}

RealVector singular_values(const DenseMatrix& a) {
  // One-sided Jacobi on columns; avoids forming A^T A so small singular
  // values keep relative accuracy.
  DenseMatrix w = a.rows() >= a.cols() ? a : a.transpose();
  const std::size_t m = w.rows(), n = w.cols();
  if (n == 0) return {};
  const double tol = 1e-14;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double aii = 0.0, ajj = 0.0, aij = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
          aii += w(r, i) * w(r, i);
          ajj += w(r, j) * w(r, j);
          aij += w(r, i) * w(r, j);
        }
        if (std::fabs(aij) <= tol * std::sqrt(aii * ajj)) continue;
        rotated = true;
        const double zeta = (ajj - aii) / (2.0 * aij);
        const double t = (zeta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t r = 0; r < m; ++r) {
          const double wi = w(r, i), wj = w(r, j);
          w(r, i) = cs * wi - sn * wj;
          w(r, j) = sn * wi + cs * wj;
        }
      }
    }
    if (!rotated) break;
  }
  RealVector sv(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += w(r, c) * w(r, c);
    sv[c] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

double spectral_norm(const DenseMatrix& a) {
  const RealVector sv = singular_values(a);
  return sv.empty() ? 0.0 : sv[0];
}

bool offdiag_rank(const DenseMatrix& a, std::size_t k_max) {
  if (a.rows() != a.cols()) throw std::invalid_argument("offdiag_rank: square matrix required");
  const std::size_t n = a.rows();
  // Every strictly off-diagonal submatrix sits inside one of the corner
  // blocks A[i+1.., ..i] / A[..i, i+1..], so checking those suffices.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (int side = 0; side < 2; ++side) {
      DenseMatrix blk = side == 0 ? a.block(i + 1, n, 0, i + 1) : a.block(0, i + 1, i + 1, n);
      const RealVector sv = singular_values(blk);
      if (sv.empty() || sv[0] == 0.0) continue;
      for (std::size_t j = k_max; j < sv.size(); ++j)
        if (sv[j] >= 1e-8 * sv[0]) return false;
    }
  }
  return true;
}

RealVector tridiag_matvec(const TridiagonalMatrix& t, const RealVector& x) {
  const std::size_t n = t.size();
  if (x.size() != n || t.sub.size() + 1 != n || t.super.size() + 1 != n)
    throw std::invalid_argument("tridiag_matvec: dimension mismatch");
  RealVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = t.main[i] * x[i];
    if (i > 0) acc += t.sub[i - 1] * x[i - 1];
    if (i + 1 < n) acc += t.super[i] * x[i + 1];
    y[i] = acc;
  }
  return y;
}

RealVector tridiag_solve(const TridiagonalMatrix& t, const RealVector& b) {
  const std::size_t n = t.size();
  if (b.size() != n || t.sub.size() + 1 != n || t.super.size() + 1 != n)
    throw std::invalid_argument("tridiag_solve: dimension mismatch");
  RealVector cp(n, 0.0), x(n, 0.0);
  double pivot = t.main[0];
  if (std::fabs(pivot) <= 1e-14) throw std::runtime_error("tridiag_solve: singular pivot");
  if (n > 1) cp[0] = t.super[0] / pivot;
  x[0] = b[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = t.main[i] - t.sub[i - 1] * cp[i - 1];
    if (std::fabs(pivot) <= 1e-14) throw std::runtime_error("tridiag_solve: singular pivot");
    if (i + 1 < n) cp[i] = t.super[i] / pivot;
    x[i] = (b[i] - t.sub[i - 1] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= cp[i] * x[i + 1];
  return x;
}

}  // namespace lssl
