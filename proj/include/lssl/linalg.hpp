#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lssl {

using RealVector = std::vector<double>;

// Dense row-major matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, RealVector data);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

  RealVector& data() { return data_; }
  const RealVector& data() const { return data_; }

  DenseMatrix transpose() const;
  DenseMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

 private:
  std::size_t rows_, cols_;
  RealVector data_;
};

struct DiagonalMatrix {
  RealVector diag;

  std::size_t size() const { return diag.size(); }
};

// Three-diagonal storage: sub/super have length n-1, main has length n.
struct TridiagonalMatrix {
  RealVector sub;    // (i+1, i)
  RealVector main;   // (i, i)
  RealVector super;  // (i, i+1)

  std::size_t size() const { return main.size(); }
};

// Coefficients in ascending degree; empty means the zero polynomial.
struct Polynomial {
  RealVector coeffs;
};

// ---- dense ops ----------------------------------------------------------

RealVector dense_matvec(const DenseMatrix& a, const RealVector& x);
DenseMatrix dense_matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix dense_from_diag(const DiagonalMatrix& d);
DenseMatrix dense_from_tridiag(const TridiagonalMatrix& t);

// Solves A x = b by Gaussian elimination with partial pivoting.
// Throws std::runtime_error when the largest available pivot is below 1e-12.
RealVector dense_solve(const DenseMatrix& a, const RealVector& b);
// Same factorization applied to several right-hand sides (columns of B).
DenseMatrix dense_solve_multi(const DenseMatrix& a, const DenseMatrix& b);

// Singular values in descending order (one-sided Jacobi).
RealVector singular_values(const DenseMatrix& a);
double spectral_norm(const DenseMatrix& a);

// True iff every contiguous corner block strictly above/below the diagonal
// has numerical rank <= k_max (singular values past k_max below 1e-8 of the
// block's largest).
bool offdiag_rank(const DenseMatrix& a, std::size_t k_max);

// ---- tridiagonal ops ----------------------------------------------------

RealVector tridiag_matvec(const TridiagonalMatrix& t, const RealVector& x);

// Thomas algorithm, no pivoting. Throws std::runtime_error when a pivot
// magnitude falls below 1e-14.
RealVector tridiag_solve(const TridiagonalMatrix& t, const RealVector& b);

// ---- FFT and convolution ------------------------------------------------

// In-place iterative radix-2 transform; length must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// y_k = sum_{i<=k} kernel_i * u_{k-i}; FFT with zero padding to the next
// power of two >= 2L-1, truncated back to L.
RealVector causal_convolve(const RealVector& kernel, const RealVector& u);

// Adjoint of causal_convolve in u: out_t = sum_i kernel_i * u_{t+i}.
RealVector causal_correlate(const RealVector& kernel, const RealVector& u);

// ---- truncated power series ---------------------------------------------

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_truncate(Polynomial p, std::size_t len);
// q with p*q == 1 (mod x^len) via Newton iteration; requires p.coeffs[0] != 0.
Polynomial poly_inv_mod(const Polynomial& p, std::size_t len);

}  // namespace lssl
