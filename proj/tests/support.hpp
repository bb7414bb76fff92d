#pragma once
// Test-only helpers. Nothing here calls into the library's numerics, so the
// checks built on it stay independent of the code under test.

#include "structsolve/core.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace structsolve::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Complex random_complex(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(g);
  return {re, u(g)};
}

inline CVector random_vector(std::size_t n, std::mt19937_64& g) {
  CVector v(n);
  for (auto& z : v) z = random_complex(g);
  return v;
}

inline DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& g) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_complex(g);
  return m;
}

/// Frobenius norm with long double accumulation.
inline double frob(const DenseMatrix& m) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const long double re = m(i, j).real();
      const long double im = m(i, j).imag();
      acc += re * re + im * im;
    }
  return static_cast<double>(std::sqrt(acc));
}

inline double vnorm(const CVector& v) {
  long double acc = 0.0L;
  for (const auto& z : v) acc += static_cast<long double>(std::norm(z));
  return static_cast<double>(std::sqrt(acc));
}

/// Plain triple-loop product.
inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

inline CVector matvec(const DenseMatrix& a, const CVector& x) {
  CVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

inline DenseMatrix diff(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline double rel_diff(const DenseMatrix& a, const DenseMatrix& b) { return frob(diff(a, b)) / frob(b); }

inline double rel_diff(const CVector& a, const CVector& b) {
  CVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return vnorm(d) / vnorm(b);
}

inline DenseMatrix adjoint(const DenseMatrix& a) {
  DenseMatrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
  return c;
}

/// Unitary DFT matrix F(j, k) = exp(2 pi i jk / n) / sqrt(n), built from
/// reduced angles so it is exact to rounding.
inline DenseMatrix dft_matrix(std::size_t n) {
  DenseMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      f(j, k) = std::polar(scale, angle);
    }
  return f;
}

/// Dense T with t_ij = a_{i-j}; `a` stores a_{1-n}..a_{n-1}.
inline DenseMatrix toeplitz_matrix(std::size_t n, const CVector& a) {
  DenseMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = a[i + n - 1 - j];
  return t;
}

/// Z_f: ones on the subdiagonal and f in the top-right corner.
inline DenseMatrix shift(std::size_t n, double f) {
  DenseMatrix z(n, n);
  for (std::size_t i = 1; i < n; ++i) z(i, i - 1) = 1.0;
  if (n > 0) z(0, n - 1) = f;
  return z;
}

inline DenseMatrix diag(const CVector& d) {
  DenseMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

/// Gaussian elimination without pivoting on a copy, k steps, trailing block.
inline DenseMatrix eliminate(DenseMatrix a, std::size_t k) {
  const std::size_t n = a.rows();
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t i = s + 1; i < n; ++i) {
      const Complex m = a(i, s) / a(s, s);
      for (std::size_t j = s; j < n; ++j) a(i, j) -= m * a(s, j);
    }
  DenseMatrix out(n - k, n - k);
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = k; j < n; ++j) out(i - k, j - k) = a(i, j);
  return out;
}

/// Rows and columns of `a` reordered: out(i, j) = a(rows[i], cols[j]).
inline DenseMatrix reorder(const DenseMatrix& a, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
  DenseMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  return out;
}

/// Well-separated real nodes: t_i = 2i + 1 + jitter, s_j = 2j + jitter', scaled to [0, 2).
inline std::pair<CVector, CVector> separated_real_nodes(std::size_t n, std::mt19937_64& g) {
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  CVector t(n), s(n);
  const double h = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = (2.0 * static_cast<double>(i) + 1.0 + jitter(g)) * h;
    s[i] = (2.0 * static_cast<double>(i) + jitter(g)) * h;
  }
  return {t, s};
}

}  // namespace structsolve::testing
