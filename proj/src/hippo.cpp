#include "lssl/hippo.hpp"

#include <cmath>
#include <stdexcept>

namespace lssl {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_order(std::size_t n) {
  if (n == 0) throw std::invalid_argument("hippo: order must be >= 1");
}

// T with 1 on the main diagonal and -1 on the subdiagonal; its inverse is
// the lower-triangular all-ones matrix.
TridiagonalMatrix cumulative_sum_tridiag(std::size_t n) {
  TridiagonalMatrix t;
  t.main.assign(n, 1.0);
  t.sub.assign(n > 0 ? n - 1 : 0, -1.0);
  t.super.assign(n > 0 ? n - 1 : 0, 0.0);
  return t;
}

double binom_log(double top, std::size_t k) {
  // binom(top, k) for top > -1 via log-gamma; arguments stay positive.
  return std::exp(log_gamma(top + 1.0) - log_gamma(static_cast<double>(k) + 1.0) -
                  log_gamma(top - static_cast<double>(k) + 1.0));
}

}  // namespace

double log_gamma(double x) {
  // Lanczos, g = 7, 9 coefficients; relative error < 1e-12 for the argument
  // ranges used here.
  static const double kCoef[9] = {
      0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
      771.32342877765313,   -176.61502916214059, 12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x <= 0.0) throw std::invalid_argument("log_gamma: requires x > 0");
  if (x < 0.5) {
    // reflection keeps the approximation in its accurate range
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double acc = kCoef[0];
  for (int i = 1; i < 9; ++i) acc += kCoef[i] / (z + static_cast<double>(i));
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

HippoSystem legs_matrix(std::size_t n) {
  require_order(n);
  HippoSystem sys;
  sys.family = HippoFamily::LegS;
  sys.a = DenseMatrix(n, n);
  sys.b.assign(n, 0.0);
  for (std::size_t row = 0; row < n; ++row) {
    const double sn = std::sqrt(2.0 * static_cast<double>(row) + 1.0);
    sys.b[row] = sn;
    for (std::size_t col = 0; col < row; ++col)
      sys.a(row, col) = sn * std::sqrt(2.0 * static_cast<double>(col) + 1.0);
    sys.a(row, row) = static_cast<double>(row) + 1.0;
  }
  return sys;
}

HippoSystem legt_matrix(std::size_t n) {
  require_order(n);
  HippoSystem sys;
  sys.family = HippoFamily::LegT;
  sys.a = DenseMatrix(n, n);
  sys.b.assign(n, 0.0);
  for (std::size_t row = 0; row < n; ++row) {
    const double sn = std::sqrt(2.0 * static_cast<double>(row) + 1.0);
    sys.b[row] = sn / std::sqrt(2.0);
    for (std::size_t col = 0; col < n; ++col) {
      const double sk = std::sqrt(2.0 * static_cast<double>(col) + 1.0);
      const double sign = col <= row ? 1.0 : ((row + col) % 2 == 0 ? 1.0 : -1.0);
      sys.a(row, col) = sn * sk * sign;
    }
  }
  return sys;
}

HippoSystem lagt_matrix(std::size_t n, double beta) {
  require_order(n);
  if (!(beta > -1.0)) throw std::invalid_argument("lagt_matrix: beta must be > -1");
  HippoSystem sys;
  sys.family = HippoFamily::LagT;
  sys.beta = beta;
  sys.a = DenseMatrix(n, n);
  sys.b.assign(n, 1.0);  // lambda_n * binom(n, n) = 1 at alpha = 0
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < row; ++col) sys.a(row, col) = 1.0;
    sys.a(row, row) = (1.0 + beta) / 2.0;
  }
  return sys;
}

HippoSystem jacobi_matrix(std::size_t n, double alpha, double beta) {
  require_order(n);
  if (n > 256) throw std::invalid_argument("jacobi_matrix: order limited to 256");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("jacobi_matrix: alpha, beta must be > -1");
  HippoSystem sys;
  sys.family = HippoFamily::Jacobi;
  sys.alpha = alpha;
  sys.beta = beta;
  sys.a = DenseMatrix(n, n);
  sys.b.assign(n, 0.0);

  // lambda_n = (2^(a+b+1)/(2n+a+b+1) * G(n+a+1)G(n+b+1)/(G(n+a+b+1) n!))^(1/2)
  RealVector log_lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double di = static_cast<double>(i);
    log_lambda[i] = 0.5 * ((alpha + beta + 1.0) * std::log(2.0) -
                           std::log(2.0 * di + alpha + beta + 1.0) +
                           log_gamma(di + alpha + 1.0) + log_gamma(di + beta + 1.0) -
                           log_gamma(di + alpha + beta + 1.0) - log_gamma(di + 1.0));
  }

  RealVector d11(n), d12(n), d21(n), d22(n), d3(n), d4(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double di = static_cast<double>(i);
    const double sign = i % 2 == 0 ? 1.0 : -1.0;
    d11[i] = std::exp(log_gamma(di + beta + 1.0) - log_gamma(di + alpha + beta + 1.0) -
                      log_lambda[i]);
    d12[i] = (2.0 * di + alpha + beta + 1.0) *
             std::exp(log_gamma(di + alpha + beta + 1.0) - log_gamma(di + beta + 1.0) +
                      log_lambda[i]);
    d21[i] = sign * std::exp(log_gamma(di + alpha + 1.0) -
                             log_gamma(di + alpha + beta + 1.0) - log_lambda[i]);
    d22[i] = sign * (2.0 * di + alpha + beta + 1.0) *
             std::exp(log_gamma(di + alpha + beta + 1.0) - log_gamma(di + alpha + 1.0) +
                      log_lambda[i]);
    // p_n(-1) = (-1)^n binom(n+beta, n) / lambda_n
    d3[i] = sign * binom_log(di + beta, i) * std::exp(-log_lambda[i]);
    d4[i] = d3[i];
    // p_n(1) = binom(n+alpha, n) / lambda_n
    sys.b[i] = binom_log(di + alpha, i) * std::exp(-log_lambda[i]);
  }

  // A = A1 + 2*A2; A1 = D11 Q1 D12 - D21 Q1 D22 (Q1 strictly lower ones),
  // A2 = D3 Q2 D4 (Q2 all ones).
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      double v = 2.0 * d3[row] * d4[col];
      if (col < row) v += d11[row] * d12[col] - d21[row] * d22[col];
      sys.a(row, col) = v;
    }
  }
  return sys;
}

StructuredStateMatrix structured_legs(std::size_t n) {
  require_order(n);
  StructuredStateMatrix s;
  s.p.diag.resize(n);
  s.q.diag.resize(n);
  s.d.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double di = static_cast<double>(i);
    s.p.diag[i] = s.q.diag[i] = std::sqrt(2.0 * di + 1.0);
    s.d.diag[i] = -di / (2.0 * di + 1.0);
  }
  s.t = cumulative_sum_tridiag(n);
  return s;
}

StructuredStateMatrix structured_legt(std::size_t n) {
  require_order(n);
  StructuredStateMatrix s;
  s.p.diag.resize(n);
  s.q.diag.resize(n);
  s.d.diag.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    s.p.diag[i] = s.q.diag[i] = std::sqrt(2.0 * static_cast<double>(i) + 1.0);
  // T = (1/2) * tridiag(sub=-1, main=[1,0,...,0,1], super=+1); its inverse
  // is the unscaled alternating-sign LegT matrix.
  s.t.main.assign(n, 0.0);
  s.t.main[0] += 0.5;
  s.t.main[n - 1] += 0.5;
  s.t.sub.assign(n > 0 ? n - 1 : 0, -0.5);
  s.t.super.assign(n > 0 ? n - 1 : 0, 0.5);
  return s;
}

StructuredStateMatrix structured_lagt(std::size_t n, double beta) {
  require_order(n);
  if (!(beta > -1.0)) throw std::invalid_argument("structured_lagt: beta must be > -1");
  StructuredStateMatrix s;
  s.p.diag.assign(n, 1.0);
  s.q.diag.assign(n, 1.0);
  // T^{-1} has unit diagonal, so D absorbs the (1+beta)/2 - 1 shift.
  s.d.diag.assign(n, (beta - 1.0) / 2.0);
  s.t = cumulative_sum_tridiag(n);
  return s;
}

DenseMatrix structured_to_dense(const StructuredStateMatrix& s) {
  const std::size_t n = s.order();
  DenseMatrix out(n, n);
  RealVector e(n, 0.0);
  for (std::size_t col = 0; col < n; ++col) {
    e.assign(n, 0.0);
    e[col] = s.q.diag[col];                   // Q e_col
    RealVector w = tridiag_solve(s.t, e);     // T^{-1} Q e_col
    for (std::size_t row = 0; row < n; ++row)
      out(row, col) = s.p.diag[row] * (s.d.diag[row] * e[row] + w[row]);
  }
  return out;
}

}  // namespace lssl
