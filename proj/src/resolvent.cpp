#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "lssl/kernel.hpp"

namespace lssl {

namespace {

// Matrix over the ring of power series truncated at x^len.
struct SeriesMatrix {
  std::size_t rows = 0, cols = 0, len = 0;
  std::vector<Polynomial> entries;

  SeriesMatrix() = default;
  SeriesMatrix(std::size_t r, std::size_t c, std::size_t l)
      : rows(r), cols(c), len(l), entries(r * c) {}

  Polynomial& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

SeriesMatrix series_mul(const SeriesMatrix& a, const SeriesMatrix& b, std::size_t len) {
  SeriesMatrix out(a.rows, b.cols, len);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Polynomial& aik = a.at(i, k);
      if (aik.coeffs.empty()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        Polynomial prod = poly_truncate(poly_mul(aik, b.at(k, j)), len);
        Polynomial& dst = out.at(i, j);
        if (dst.coeffs.size() < prod.coeffs.size()) dst.coeffs.resize(prod.coeffs.size(), 0.0);
        for (std::size_t t = 0; t < prod.coeffs.size(); ++t) dst.coeffs[t] += prod.coeffs[t];
      }
    }
  }
  return out;
}

SeriesMatrix series_sub(SeriesMatrix a, const SeriesMatrix& b) {
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      const Polynomial& src = b.at(i, j);
      Polynomial& dst = a.at(i, j);
      if (dst.coeffs.size() < src.coeffs.size()) dst.coeffs.resize(src.coeffs.size(), 0.0);
      for (std::size_t t = 0; t < src.coeffs.size(); ++t) dst.coeffs[t] -= src.coeffs[t];
    }
  return a;
}

// Multiply every entry by x (shift coefficients up one degree).
SeriesMatrix series_shift(SeriesMatrix a) {
  for (auto& e : a.entries) {
    if (e.coeffs.empty()) continue;
    e.coeffs.insert(e.coeffs.begin(), 0.0);
    if (e.coeffs.size() > a.len) e.coeffs.resize(a.len);
  }
  return a;
}

SeriesMatrix series_truncate(SeriesMatrix a, std::size_t len) {
  a.len = len;
  for (auto& e : a.entries)
    if (e.coeffs.size() > len) e.coeffs.resize(len);
  return a;
}

// Newton inversion of S with invertible constant term: X <- X (2I - S X).
SeriesMatrix series_inverse(const SeriesMatrix& s) {
  const std::size_t k = s.rows;
  SeriesMatrix x(k, k, 1);
  if (k == 0) return x;
  DenseMatrix s0(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      s0(i, j) = s.at(i, j).coeffs.empty() ? 0.0 : s.at(i, j).coeffs[0];
  DenseMatrix x0;
  try {
    x0 = dense_solve_multi(s0, DenseMatrix::identity(k));
  } catch (const std::runtime_error&) {
    throw std::runtime_error(
        "resolvent_kernel_fast: series inversion failure (constant term below 1e-12)");
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) x.at(i, j).coeffs = {x0(i, j)};

  std::size_t cur = 1;
  while (cur < s.len) {
    cur = std::min(cur * 2, s.len);
    x.len = cur;
    SeriesMatrix e = series_mul(series_truncate(s, cur), x, cur);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Polynomial& p = e.at(i, j);
        for (auto& cval : p.coeffs) cval = -cval;
        if (p.coeffs.empty()) p.coeffs.resize(1, 0.0);
        if (i == j) p.coeffs[0] += 2.0;
      }
    x = series_mul(x, e, cur);
  }
  return x;
}

// M = U V^T with columns past the cutoff singular value dropped. One-sided
// Jacobi: rotate columns of a working copy to orthogonality while
// accumulating the rotations.
std::pair<DenseMatrix, DenseMatrix> rank_factorize(const DenseMatrix& m, double cutoff) {
  const std::size_t rows = m.rows(), cols = m.cols();
  DenseMatrix w = m;
  DenseMatrix j = DenseMatrix::identity(cols);
  const double tol = 1e-14;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
          app += w(r, p) * w(r, p);
          aqq += w(r, q) * w(r, q);
          apq += w(r, p) * w(r, q);
        }
        if (std::fabs(apq) <= tol * std::sqrt(app * aqq)) continue;
        rotated = true;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t =
            (zeta >= 0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t r = 0; r < rows; ++r) {
          const double wp = w(r, p), wq = w(r, q);
          w(r, p) = cs * wp - sn * wq;
          w(r, q) = sn * wp + cs * wq;
        }
        for (std::size_t r = 0; r < cols; ++r) {
          const double jp = j(r, p), jq = j(r, q);
          j(r, p) = cs * jp - sn * jq;
          j(r, q) = sn * jp + cs * jq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < cols; ++c) {
    double norm2 = 0.0;
    for (std::size_t r = 0; r < rows; ++r) norm2 += w(r, c) * w(r, c);
    if (std::sqrt(norm2) > cutoff) keep.push_back(c);
  }
  DenseMatrix u(rows, keep.size()), v(cols, keep.size());
  for (std::size_t kidx = 0; kidx < keep.size(); ++kidx) {
    for (std::size_t r = 0; r < rows; ++r) u(r, kidx) = w(r, keep[kidx]);
    for (std::size_t r = 0; r < cols; ++r) v(r, kidx) = j(r, keep[kidx]);
  }
  return {u, v};
}

DenseMatrix hcat(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

SeriesMatrix series_block(const SeriesMatrix& s, std::size_t r0, std::size_t r1,
                          std::size_t c0, std::size_t c1) {
  SeriesMatrix out(r1 - r0, c1 - c0, s.len);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c) out.at(r - r0, c - c0) = s.at(r, c);
  return out;
}

// C^T (I - A x)^{-1} B over series mod x^len; bcols/ccols are N x k.
SeriesMatrix resolvent_rec(const DenseMatrix& a, const DenseMatrix& bcols,
                           const DenseMatrix& ccols, std::size_t len) {
  const std::size_t n = a.rows();
  const std::size_t kb = bcols.cols(), kc = ccols.cols();
  if (n == 1) {
    Polynomial geom;
    geom.coeffs.resize(len);
    double pw = 1.0;
    for (std::size_t i = 0; i < len; ++i) {
      geom.coeffs[i] = pw;
      pw *= a(0, 0);
    }
    SeriesMatrix out(kc, kb, len);
    for (std::size_t i = 0; i < kc; ++i)
      for (std::size_t j = 0; j < kb; ++j) {
        const double scale = ccols(0, i) * bcols(0, j);
        if (scale == 0.0) continue;
        Polynomial p = geom;
        for (auto& cv : p.coeffs) cv *= scale;
        out.at(i, j) = std::move(p);
      }
    return out;
  }

  const std::size_t h = n / 2;
  const DenseMatrix a00 = a.block(0, h, 0, h);
  const DenseMatrix a11 = a.block(h, n, h, n);
  DenseMatrix neg01 = a.block(0, h, h, n);
  DenseMatrix neg10 = a.block(h, n, 0, h);
  for (auto& v : neg01.data()) v = -v;
  for (auto& v : neg10.data()) v = -v;
  // I - A x = blockdiag(I - A00 x, I - A11 x) + [[0,Uu],[Ul,0]] [[Vl,0],[0,Vu]]^T x
  auto [uu, vu] = rank_factorize(neg01, 1e-10);  // -A01 = Uu Vu^T
  auto [ul, vl] = rank_factorize(neg10, 1e-10);  // -A10 = Ul Vl^T
  const std::size_t r1 = uu.cols(), r2 = ul.cols();

  const DenseMatrix b0 = bcols.block(0, h, 0, kb), b1 = bcols.block(h, n, 0, kb);
  const DenseMatrix c0 = ccols.block(0, h, 0, kc), c1 = ccols.block(h, n, 0, kc);

  const SeriesMatrix top = resolvent_rec(a00, hcat(b0, uu), hcat(c0, vl), len);
  const SeriesMatrix bot = resolvent_rec(a11, hcat(b1, ul), hcat(c1, vu), len);

  // M1 = C^T blockdiag^{-1} B
  SeriesMatrix m1 = series_block(top, 0, kc, 0, kb);
  {
    const SeriesMatrix m1b = series_block(bot, 0, kc, 0, kb);
    for (std::size_t i = 0; i < kc; ++i)
      for (std::size_t j = 0; j < kb; ++j) {
        Polynomial& dst = m1.at(i, j);
        const Polynomial& src = m1b.at(i, j);
        if (dst.coeffs.size() < src.coeffs.size()) dst.coeffs.resize(src.coeffs.size(), 0.0);
        for (std::size_t t = 0; t < src.coeffs.size(); ++t) dst.coeffs[t] += src.coeffs[t];
      }
  }
  if (r1 == 0 && r2 == 0) return m1;

  // Column order of U = [[0,Uu],[Ul,0]]: r2 columns through Ul, then r1
  // through Uu; row order of V^T matches (Vl rows, then Vu rows).
  const std::size_t rr = r1 + r2;
  SeriesMatrix m2(kc, rr, len), m3(rr, rr, len), m4(rr, kb, len);
  for (std::size_t i = 0; i < kc; ++i) {
    for (std::size_t j = 0; j < r2; ++j) m2.at(i, j) = bot.at(i, kb + j);
    for (std::size_t j = 0; j < r1; ++j) m2.at(i, r2 + j) = top.at(i, kb + j);
  }
  for (std::size_t i = 0; i < r2; ++i) {
    for (std::size_t j = 0; j < kb; ++j) m4.at(i, j) = top.at(kc + i, j);
    for (std::size_t j = 0; j < r1; ++j) m3.at(i, r2 + j) = top.at(kc + i, kb + j);
  }
  for (std::size_t i = 0; i < r1; ++i) {
    for (std::size_t j = 0; j < kb; ++j) m4.at(r2 + i, j) = bot.at(kc + i, j);
    for (std::size_t j = 0; j < r2; ++j) m3.at(r2 + i, j) = bot.at(kc + i, kb + j);
  }

  // Woodbury: result = M1 - x M2 (I + x M3)^{-1} M4
  SeriesMatrix s = series_shift(m3);
  for (std::size_t i = 0; i < rr; ++i) {
    Polynomial& p = s.at(i, i);
    if (p.coeffs.empty()) p.coeffs.resize(1, 0.0);
    p.coeffs[0] += 1.0;
  }
  const SeriesMatrix sinv = series_inverse(s);
  const SeriesMatrix corr = series_mul(series_mul(series_shift(m2), sinv, len), m4, len);
  return series_sub(std::move(m1), corr);
}

}  // namespace

KrylovKernel resolvent_kernel_fast(const DenseMatrix& a, const RealVector& b,
                                   const RealVector& c, std::size_t len) {
  const std::size_t n = b.size();
  if (a.rows() != n || a.cols() != n || c.size() != n)
    throw std::invalid_argument("resolvent_kernel_fast: dimension mismatch");
  if (n == 0 || (n & (n - 1)) != 0 || n > 64)
    throw std::invalid_argument("resolvent_kernel_fast: N must be a power of two <= 64");
  if (len == 0 || len > 4096)
    throw std::invalid_argument("resolvent_kernel_fast: L must be in [1, 4096]");

  DenseMatrix bcol(n, 1), ccol(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    bcol(i, 0) = b[i];
    ccol(i, 0) = c[i];
  }
  const SeriesMatrix res = resolvent_rec(a, bcol, ccol, len);
  KrylovKernel out;
  out.taps = res.at(0, 0).coeffs;
  out.taps.resize(len, 0.0);
  return out;
}

}  // namespace lssl
