#pragma once

#include <cstddef>

#include "lssl/hippo.hpp"
#include "lssl/linalg.hpp"

namespace lssl {

// Discrete-time system x_t = Abar x_{t-1} + Bbar u_t, y_t = C x_t + D u_t.
struct DiscreteSSM {
  DenseMatrix a_bar;  // N x N
  RealVector b_bar;   // N
  DenseMatrix c;      // M x N
  RealVector d;       // M
  double dt = 0.0;

  DiscreteSSM() = default;
  DiscreteSSM(DenseMatrix a_bar_, RealVector b_bar_, DenseMatrix c_, RealVector d_,
              double dt_);

  std::size_t state_dim() const { return b_bar.size(); }
  std::size_t channels() const { return d.size(); }
};

struct GbtResult {
  DenseMatrix a_bar;
  RealVector b_bar;
};

// Generalized bilinear transform:
//   a_bar = (I - alpha dt A)^{-1} (I + (1-alpha) dt A)
//   b_bar = dt (I - alpha dt A)^{-1} B
// alpha = 0 Euler, 1 backward Euler, 0.5 bilinear.
GbtResult gbt_discretize(const DenseMatrix& a, const RealVector& b, double dt, double alpha);

// F(A, dt, x) = (I + dt A) x
RealVector forward_diff(const DenseMatrix& a, double dt, const RealVector& x);
// B(A, dt, x) = (I + dt A)^{-1} x
RealVector backward_diff(const DenseMatrix& a, double dt, const RealVector& x);

// One bilinear step: (I - dt A / 2)^{-1} ((I + dt A / 2) x + dt B u),
// composed from the two primitives above.
RealVector bilinear_step(const DenseMatrix& a, const RealVector& b, double dt,
                         const RealVector& x, double u);

// Structured counterparts; one tridiagonal solve each.
RealVector forward_diff_structured(const StructuredStateMatrix& s, double dt,
                                   const RealVector& x);
RealVector backward_diff_structured(const StructuredStateMatrix& s, double dt,
                                    const RealVector& x);

struct DiffGrads {
  RealVector dx;
  double d_dt = 0.0;
  DenseMatrix da;
};

// Adjoints of the difference maps. With y the primal output:
//   backward: dx = B(A^T, dt, dy), d_dt = -dx^T A y, dA = -dt dx y^T
//   forward:  dx = F(A^T, dt, dy), d_dt =  dy^T A x, dA =  dt dy x^T
DiffGrads backward_diff_grad(const DenseMatrix& a, double dt, const RealVector& x,
                             const RealVector& dy);
DiffGrads forward_diff_grad(const DenseMatrix& a, double dt, const RealVector& x,
                            const RealVector& dy);

// x_t = (1 - sigmoid(z)) x_prev + sigmoid(z) u; identical to the backward
// Euler step of xdot = -x + u with dt = exp(z).
double gate_step(double x_prev, double u, double z);

}  // namespace lssl
