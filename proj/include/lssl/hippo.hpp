#pragma once

#include <cstddef>

#include "lssl/linalg.hpp"

namespace lssl {

enum class HippoFamily { LegS, LegT, LagT, Jacobi };

// State matrix A and input vector b of a continuous-time memory system.
// A is stored in its positive-entry form; the dynamics used elsewhere are
// xdot = -A x + b u, which keeps the eigenvalues in the left half-plane.
struct HippoSystem {
  DenseMatrix a;
  RealVector b;
  HippoFamily family;
  double alpha = 0.0;
  double beta = 0.0;

  std::size_t order() const { return a.rows(); }
};

// The representation A = P (D + T^{-1}) Q with diagonal P, D, Q and
// tridiagonal T. Reconstructs the matching dense constructor entrywise.
struct StructuredStateMatrix {
  DiagonalMatrix p;
  DiagonalMatrix d;
  DiagonalMatrix q;
  TridiagonalMatrix t;

  std::size_t order() const { return d.size(); }
};

// Scaled Legendre: A[n][k] = sqrt(2n+1)sqrt(2k+1) for n>k, n+1 on the
// diagonal, 0 above; b[n] = sqrt(2n+1).
HippoSystem legs_matrix(std::size_t n);

// Translated Legendre: A[n][k] = sqrt(2n+1)sqrt(2k+1) * (k<=n ? 1 : (-1)^(n-k));
// b[n] = sqrt((2n+1)/2).
HippoSystem legt_matrix(std::size_t n);

// Translated Laguerre with alpha fixed to 0: diagonal (1+beta)/2, ones
// strictly below; b is all ones.
HippoSystem lagt_matrix(std::size_t n, double beta);

// General Jacobi measure, assembled as A1 + 2*A2 from six diagonal scalings
// of the strictly-lower-ones and all-ones matrices. 3-quasiseparable.
HippoSystem jacobi_matrix(std::size_t n, double alpha, double beta);

StructuredStateMatrix structured_legs(std::size_t n);
StructuredStateMatrix structured_legt(std::size_t n);
StructuredStateMatrix structured_lagt(std::size_t n, double beta);

// Densifies P (D + T^{-1}) Q by N tridiagonal solves.
DenseMatrix structured_to_dense(const StructuredStateMatrix& s);

// log Gamma(x) for x > 0, Lanczos approximation (g=7, 9 coefficients).
double log_gamma(double x);

}  // namespace lssl
