#include "lssl/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace lssl {

DenseMatrix krylov_matrix(const DenseMatrix& a_bar, const RealVector& b_bar,
                          std::size_t len) {
  const std::size_t n = b_bar.size();
  if (a_bar.rows() != n || a_bar.cols() != n)
    throw std::invalid_argument("krylov_matrix: dimension mismatch");
  if (len == 0) throw std::invalid_argument("krylov_matrix: L must be >= 1");
  DenseMatrix k(n, len);
  for (std::size_t i = 0; i < n; ++i) k(i, 0) = b_bar[i];
  if (len == 1) return k;

  DenseMatrix pw = a_bar;  // A^(2^level)
  std::size_t width = 1;
  while (width < len) {
    const std::size_t add = std::min(width, len - width);
    // columns [width, width+add) = pw * columns [0, add)
    for (std::size_t row = 0; row < n; ++row) {
      const double* prow = pw.row_ptr(row);
      for (std::size_t col = 0; col < add; ++col) {
        double acc = 0.0;
        for (std::size_t t = 0; t < n; ++t) acc += prow[t] * k(t, col);
        k(row, width + col) = acc;
      }
    }
    width += add;
    if (width < len) pw = dense_matmul(pw, pw);
  }
  return k;
}

KrylovKernel krylov_function(const DenseMatrix& a_bar, const RealVector& b_bar,
                             const RealVector& c, std::size_t len) {
  if (c.size() != b_bar.size())
    throw std::invalid_argument("krylov_function: dimension mismatch");
  const DenseMatrix k = krylov_matrix(a_bar, b_bar, len);
  KrylovKernel out;
  out.taps.assign(len, 0.0);
  for (std::size_t col = 0; col < len; ++col) {
    double acc = 0.0;
    for (std::size_t row = 0; row < c.size(); ++row) acc += c[row] * k(row, col);
    out.taps[col] = acc;
  }
  return out;
}

RealVector apply_convolutional(const KrylovKernel& kernel, double d, const RealVector& u) {
  if (kernel.taps.size() != u.size())
    throw std::invalid_argument("apply_convolutional: length mismatch");
  RealVector y = causal_convolve(kernel.taps, u);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += d * u[i];
  return y;
}

RecurrentResult apply_recurrent(const DiscreteSSM& ssm, const RealVector& u,
                                const RealVector& x0) {
  const std::size_t n = ssm.state_dim();
  const std::size_t m = ssm.channels();
  const std::size_t len = u.size();
  if (x0.size() != n) throw std::invalid_argument("apply_recurrent: bad x0");
  RecurrentResult out;
  out.y = DenseMatrix(m, len);
  RealVector x = x0, next(n);
  for (std::size_t t = 0; t < len; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      const double* row = ssm.a_bar.row_ptr(i);
      double acc = ssm.b_bar[i] * u[t];
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
      next[i] = acc;
    }
    std::swap(x, next);
    for (std::size_t ch = 0; ch < m; ++ch) {
      const double* crow = ssm.c.row_ptr(ch);
      double acc = ssm.d[ch] * u[t];
      for (std::size_t j = 0; j < n; ++j) acc += crow[j] * x[j];
      out.y(ch, t) = acc;
    }
  }
  out.x_final = x;
  return out;
}

}  // namespace lssl
