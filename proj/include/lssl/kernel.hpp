#pragma once

#include <cstddef>

#include "lssl/disc.hpp"
#include "lssl/linalg.hpp"

namespace lssl {

// Convolution kernel taps: taps[i] = c a^i b.
struct KrylovKernel {
  RealVector taps;
  std::size_t channel = 0;
};

// Krylov matrix K = (b, Ab, A^2 b, ...) of shape N x L, built by batched
// multiplication with A, A^2, A^4, ... (log-depth squaring).
DenseMatrix krylov_matrix(const DenseMatrix& a_bar, const RealVector& b_bar,
                          std::size_t len);

KrylovKernel krylov_function(const DenseMatrix& a_bar, const RealVector& b_bar,
                             const RealVector& c, std::size_t len);

// y = taps * u (causal) + d u.
RealVector apply_convolutional(const KrylovKernel& kernel, double d, const RealVector& u);

struct RecurrentResult {
  DenseMatrix y;         // M x L
  RealVector x_final;    // N
};

// Sequential unroll of x_t = Abar x_{t-1} + Bbar u_t, y_t = C x_t + D u_t.
RecurrentResult apply_recurrent(const DiscreteSSM& ssm, const RealVector& u,
                                const RealVector& x0);

// Krylov function through the resolvent series c^T (I - A x)^{-1} b mod x^L:
// divide-and-conquer over quadrants with SVD rank factorization of the
// off-diagonal blocks and a Woodbury combination over truncated power
// series. Proof-of-concept scale: N a power of two <= 64, L <= 4096.
KrylovKernel resolvent_kernel_fast(const DenseMatrix& a, const RealVector& b,
                                   const RealVector& c, std::size_t len);

}  // namespace lssl
