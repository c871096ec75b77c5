#include "lssl/disc.hpp"

#include <cmath>
#include <stdexcept>

namespace lssl {

DiscreteSSM::DiscreteSSM(DenseMatrix a_bar_, RealVector b_bar_, DenseMatrix c_,
                         RealVector d_, double dt_)
    : a_bar(std::move(a_bar_)), b_bar(std::move(b_bar_)), c(std::move(c_)),
      d(std::move(d_)), dt(dt_) {
  const std::size_t n = b_bar.size();
  if (a_bar.rows() != n || a_bar.cols() != n || c.cols() != n || c.rows() != d.size())
    throw std::invalid_argument("DiscreteSSM: inconsistent dimensions");
  if (!(dt > 0.0)) throw std::invalid_argument("DiscreteSSM: dt must be > 0");
  for (double v : a_bar.data())
    if (!std::isfinite(v)) throw std::invalid_argument("DiscreteSSM: non-finite a_bar");
}

GbtResult gbt_discretize(const DenseMatrix& a, const RealVector& b, double dt,
                         double alpha) {
  const std::size_t n = b.size();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("gbt_discretize: dimension mismatch");
  if (dt < 0.0) throw std::invalid_argument("gbt_discretize: dt must be >= 0");
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("gbt_discretize: alpha must be in [0, 1]");

  DenseMatrix lhs(n, n);   // I - alpha dt A
  DenseMatrix rhs(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lhs(i, j) = (i == j ? 1.0 : 0.0) - alpha * dt * a(i, j);
      rhs(i, j) = (i == j ? 1.0 : 0.0) + (1.0 - alpha) * dt * a(i, j);
    }
    rhs(i, n) = dt * b[i];
  }
  DenseMatrix solved = dense_solve_multi(lhs, rhs);
  GbtResult out;
  out.a_bar = DenseMatrix(n, n);
  out.b_bar.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.a_bar(i, j) = solved(i, j);
    out.b_bar[i] = solved(i, n);
  }
  return out;
}

RealVector forward_diff(const DenseMatrix& a, double dt, const RealVector& x) {
  RealVector ax = dense_matvec(a, x);
  RealVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + dt * ax[i];
  return y;
}

RealVector backward_diff(const DenseMatrix& a, double dt, const RealVector& x) {
  const std::size_t n = x.size();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("backward_diff: dimension mismatch");
  DenseMatrix sys(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sys(i, j) = (i == j ? 1.0 : 0.0) + dt * a(i, j);
  return dense_solve(sys, x);
}

RealVector bilinear_step(const DenseMatrix& a, const RealVector& b, double dt,
                         const RealVector& x, double u) {
  RealVector w = forward_diff(a, dt / 2.0, x);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += dt * b[i] * u;
  return backward_diff(a, -dt / 2.0, w);
}

RealVector forward_diff_structured(const StructuredStateMatrix& s, double dt,
                                   const RealVector& x) {
  const std::size_t n = s.order();
  if (x.size() != n)
    throw std::invalid_argument("forward_diff_structured: dimension mismatch");
  // x + dt P D Q x + dt P T^{-1} Q x
  RealVector qx(n);
  for (std::size_t i = 0; i < n; ++i) qx[i] = s.q.diag[i] * x[i];
  RealVector tinv = tridiag_solve(s.t, qx);
  RealVector y(n);
  for (std::size_t i = 0; i < n; ++i)
    y[i] = x[i] + dt * s.p.diag[i] * (s.d.diag[i] * qx[i] + tinv[i]);
  return y;
}

RealVector backward_diff_structured(const StructuredStateMatrix& s, double dt,
                                    const RealVector& x) {
  const std::size_t n = s.order();
  if (x.size() != n)
    throw std::invalid_argument("backward_diff_structured: dimension mismatch");
  // G^{-1} = Q^{-1} (T P^{-1} Q^{-1} + dt T D + dt I)^{-1} T P^{-1}
  RealVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.p.diag[i] == 0.0 || s.q.diag[i] == 0.0)
      throw std::invalid_argument("backward_diff_structured: P, Q must be invertible");
    v[i] = x[i] / s.p.diag[i];
  }
  RealVector w = tridiag_matvec(s.t, v);
  // middle matrix M = T diag(1/(PQ) + dt D) + dt I, still tridiagonal
  RealVector scale(n);
  for (std::size_t i = 0; i < n; ++i)
    scale[i] = 1.0 / (s.p.diag[i] * s.q.diag[i]) + dt * s.d.diag[i];
  TridiagonalMatrix m;
  m.main.resize(n);
  m.sub.resize(n > 0 ? n - 1 : 0);
  m.super.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) m.main[i] = s.t.main[i] * scale[i] + dt;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.sub[i] = s.t.sub[i] * scale[i];
    m.super[i] = s.t.super[i] * scale[i + 1];
  }
  RealVector z = tridiag_solve(m, w);
  RealVector y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = z[i] / s.q.diag[i];
  return y;
}

DiffGrads backward_diff_grad(const DenseMatrix& a, double dt, const RealVector& x,
                             const RealVector& dy) {
  if (x.size() != dy.size())
    throw std::invalid_argument("backward_diff_grad: dimension mismatch");
  DiffGrads g;
  RealVector y = backward_diff(a, dt, x);
  g.dx = backward_diff(a.transpose(), dt, dy);
  RealVector ay = dense_matvec(a, y);
  double d_dt = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d_dt -= g.dx[i] * ay[i];
  g.d_dt = d_dt;
  g.da = DenseMatrix(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) g.da(i, j) = -dt * g.dx[i] * y[j];
  return g;
}

DiffGrads forward_diff_grad(const DenseMatrix& a, double dt, const RealVector& x,
                            const RealVector& dy) {
  if (x.size() != dy.size())
    throw std::invalid_argument("forward_diff_grad: dimension mismatch");
  DiffGrads g;
  g.dx = forward_diff(a.transpose(), dt, dy);
  RealVector ax = dense_matvec(a, x);
  double d_dt = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d_dt += dy[i] * ax[i];
  g.d_dt = d_dt;
  g.da = DenseMatrix(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) g.da(i, j) = dt * dy[i] * x[j];
  return g;
}

double gate_step(double x_prev, double u, double z) {
  const double s = 1.0 / (1.0 + std::exp(-z));
  return (1.0 - s) * x_prev + s * u;
}

}  // namespace lssl
