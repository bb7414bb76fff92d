#include "structsolve/oracle.hpp"

#include <cmath>

namespace structsolve {

DenseFactorization dense_gepp_factor(const DenseMatrix& a) {
  if (a.rows() != a.cols() || a.empty()) throw DimensionError("dense_gepp_factor: matrix must be square and nonempty");
  const std::size_t n = a.rows();
  DenseMatrix w = a;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::size_t> pivots;
  pivots.reserve(n);

  double scale = 0.0;
  for (const auto& z : a.entries()) scale = std::max(scale, std::abs(z));

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(w(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(w(i, k)) > best) {
        best = std::abs(w(i, k));
        p = i;
      }
    }
    if (!(best > static_cast<double>(n) * kEps * scale)) throw SingularError("dense_gepp_factor: matrix is singular");
    pivots.push_back(p);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      std::swap(perm[k], perm[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex m = w(i, k) / w(k, k);
      w(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) w(i, j) -= m * w(k, j);
    }
  }

  DenseFactorization f{Permutation(perm), DenseMatrix(n, n), DenseMatrix(n, n), std::move(pivots)};
  for (std::size_t i = 0; i < n; ++i) {
    f.L(i, i) = 1.0;
    for (std::size_t j = 0; j < i; ++j) f.L(i, j) = w(i, j);
    for (std::size_t j = i; j < n; ++j) f.U(i, j) = w(i, j);
  }
  return f;
}

CVector dense_solve(const DenseFactorization& f, std::span<const Complex> b) {
  const std::size_t n = f.L.rows();
  if (b.size() != n) throw DimensionError("dense_solve: right-hand side length differs from order");
  CVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = b[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) acc -= f.L(i, j) * y[j];
    y[i] = acc;
  }
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = y[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= f.U(i, j) * y[j];
    y[i] = acc / f.U(i, i);
  }
  return y;
}

CVector dense_solve(const DenseMatrix& a, std::span<const Complex> b) {
  return dense_solve(dense_gepp_factor(a), b);
}

DenseMatrix dense_schur_complement(const DenseMatrix& a, std::size_t k) {
  if (a.rows() != a.cols()) throw DimensionError("dense_schur_complement: matrix must be square");
  const std::size_t n = a.rows();
  if (k > n) throw DimensionError("dense_schur_complement: more steps than rows");
  DenseMatrix w = a;
  for (std::size_t p = 0; p < k; ++p) {
    if (w(p, p) == Complex{}) throw SingularError("dense_schur_complement: zero pivot");
    for (std::size_t i = p + 1; i < n; ++i) {
      const Complex m = w(i, p) / w(p, p);
      for (std::size_t j = p + 1; j < n; ++j) w(i, j) -= m * w(p, j);
    }
  }
  DenseMatrix s(n - k, n - k);
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = k; j < n; ++j) s(i - k, j - k) = w(i, j);
  return s;
}

DenseMatrix dense_inverse(const DenseMatrix& a) {
  const DenseFactorization f = dense_gepp_factor(a);
  const std::size_t n = a.rows();
  DenseMatrix inv(n, n);
  CVector e(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), Complex{});
    e[j] = 1.0;
    const CVector x = dense_solve(f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = x[i];
  }
  return inv;
}

double cond_estimate(const DenseMatrix& a) {
  return frobenius_norm(a) * frobenius_norm(dense_inverse(a));
}

DenseMatrix dense_toeplitz(const ToeplitzCoeffs& c) {
  const std::size_t n = c.size();
  DenseMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = c[static_cast<long>(i) - static_cast<long>(j)];
  return t;
}

}  // namespace structsolve
