#include <cmath>
#include <complex>
#include <stdexcept>

#include "lssl/linalg.hpp"

namespace lssl {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Multiplies two real sequences (linear convolution) with a single forward
// transform by packing one into the real and one into the imaginary part.
RealVector real_convolve_fft(const RealVector& a, const RealVector& b, std::size_t out_len) {
  const std::size_t n = next_pow2(out_len);
  std::vector<std::complex<double>> c(n, {0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += std::complex<double>(a[i], 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += std::complex<double>(0.0, b[i]);
  fft_inplace(c, false);
  std::vector<std::complex<double>> y(n);
  const std::complex<double> half(0.5, 0.0);
  const std::complex<double> neg_half_i(0.0, -0.5);
  for (std::size_t k = 0; k < n; ++k) {
    const std::complex<double> ck = c[k];
    const std::complex<double> cnk = std::conj(c[(n - k) & (n - 1)]);
    const std::complex<double> ak = (ck + cnk) * half;
    const std::complex<double> bk = (ck - cnk) * neg_half_i;
    y[k] = ak * bk;
  }
  fft_inplace(y, true);
  RealVector out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = y[i].real();
  return out;
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_inplace: length must be a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& z : a) z *= inv;
  }
}

RealVector causal_convolve(const RealVector& kernel, const RealVector& u) {
  if (kernel.size() != u.size())
    throw std::invalid_argument("causal_convolve: length mismatch");
  const std::size_t len = u.size();
  if (len == 0) return {};
  if (len == 1) return {kernel[0] * u[0]};
  RealVector full = real_convolve_fft(kernel, u, 2 * len - 1);
  full.resize(len);
  return full;
}

RealVector causal_correlate(const RealVector& kernel, const RealVector& u) {
  if (kernel.size() != u.size())
    throw std::invalid_argument("causal_correlate: length mismatch");
  const std::size_t len = u.size();
  if (len == 0) return {};
  // corr(k, u)[t] = conv(k, reverse(u))[L-1-t]
  RealVector ur(u.rbegin(), u.rend());
  RealVector full = real_convolve_fft(kernel, ur, 2 * len - 1);
  RealVector out(len);
  for (std::size_t t = 0; t < len; ++t) out[t] = full[len - 1 - t];
  return out;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  if (p.coeffs.empty() || q.coeffs.empty()) return {};
  const std::size_t out_len = p.coeffs.size() + q.coeffs.size() - 1;
  if (out_len <= 64) {
    Polynomial r;
    r.coeffs.assign(out_len, 0.0);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs.size(); ++j)
        r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
    return r;
  }
  return {real_convolve_fft(p.coeffs, q.coeffs, out_len)};
}

Polynomial poly_truncate(Polynomial p, std::size_t len) {
  if (p.coeffs.size() > len) p.coeffs.resize(len);
  return p;
}

Polynomial poly_inv_mod(const Polynomial& p, std::size_t len) {
  if (len == 0) return {};
  if (p.coeffs.empty() || p.coeffs[0] == 0.0)
    throw std::invalid_argument("poly_inv_mod: zero constant term");
  Polynomial q{{1.0 / p.coeffs[0]}};
  std::size_t k = 1;
  // Newton: q <- q*(2 - p*q), doubling correct coefficients each pass.
  while (k < len) {
    k = std::min(k * 2, len);
    Polynomial pq = poly_truncate(poly_mul(poly_truncate(p, k), q), k);
    for (auto& c : pq.coeffs) c = -c;
    pq.coeffs[0] += 2.0;
    q = poly_truncate(poly_mul(q, pq), k);
  }
  q.coeffs.resize(len, 0.0);
  return q;
}

}  // namespace lssl
