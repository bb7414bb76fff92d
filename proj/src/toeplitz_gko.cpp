#include "structsolve/toeplitz_gko.hpp"

#include "structsolve/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace structsolve {

GeneratorPair toeplitz_generators(const ToeplitzCoeffs& c) {
  const std::size_t n = c.size();
  if (n < 2) throw DimensionError("toeplitz_generators: order must be at least 2");
  const long ln = static_cast<long>(n);
  DenseMatrix phi(n, 2);
  DenseMatrix psi(2, n);
  phi(0, 0) = 1.0;
  phi(0, 1) = c[0];
  for (long i = 1; i < ln; ++i) phi(static_cast<std::size_t>(i), 1) = c[i - ln] + c[i];
  for (long j = 0; j + 1 < ln; ++j) psi(0, static_cast<std::size_t>(j)) = c[ln - 1 - j] - c[-1 - j];
  psi(0, n - 1) = c[0];
  psi(1, n - 1) = 1.0;
  return {std::move(phi), std::move(psi)};
}

std::pair<GeneratorPair, CauchyNodes> to_cauchy_generators(const GeneratorPair& g, std::size_t n) {
  if (g.size() != n) throw DimensionError("to_cauchy_generators: generator order differs from n");
  const DftPlan plan(n);
  const CVector d = scaling_D(n);
  const std::size_t alpha = g.alpha();

  DenseMatrix phi_c(n, alpha);
  for (std::size_t m = 0; m < alpha; ++m) {
    const CVector col = plan.forward(g.phi().column(m));
    for (std::size_t i = 0; i < n; ++i) phi_c(i, m) = col[i];
  }
  // Row m of Psi_C is the conjugate of F D conj(Gamma row m).
  DenseMatrix psi_c(alpha, n);
  for (std::size_t m = 0; m < alpha; ++m) {
    CVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = d[j] * std::conj(g.psi()(m, j));
    const CVector fv = plan.forward(v);
    for (std::size_t j = 0; j < n; ++j) psi_c(m, j) = std::conj(fv[j]);
  }
  return {GeneratorPair(std::move(phi_c), std::move(psi_c)), toeplitz_cauchy_nodes(n)};
}

ToeplitzFactorization toeplitz_factor(const ToeplitzCoeffs& c, PivotStrategy strategy,
                                      const FactorOptions& options) {
  const std::size_t n = c.size();
  if (n < 2) throw DimensionError("toeplitz_factor: order must be at least 2");
  auto [gc, nodes] = to_cauchy_generators(toeplitz_generators(c), n);
  ToeplitzFactorization f;
  f.inner = gko_factor(gc, nodes, strategy, options);
  f.n = n;
  f.plan = DftPlan(n);
  f.d = scaling_D(n);
  f.nodes = std::move(nodes);
  f.cauchy_generators = std::move(gc);
  return f;
}

CVector toeplitz_solve(const ToeplitzFactorization& f, std::span<const Complex> b) {
  if (b.size() != f.n) throw DimensionError("toeplitz_solve: right-hand side length differs from order");
  // R y = F b with y = F D x.
  const CVector y = solve_with_factors(f.inner, f.plan.forward(b));
  CVector x = f.plan.inverse(y);
  for (std::size_t i = 0; i < f.n; ++i) x[i] *= std::conj(f.d[i]);
  return x;
}

DenseMatrix shift_matrix(std::size_t n, double corner) {
  DenseMatrix z(n, n);
  for (std::size_t i = 1; i < n; ++i) z(i, i - 1) = 1.0;
  if (n > 0) z(0, n - 1) += corner;
  return z;
}

DenseMatrix shift_displacement(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("shift_displacement: matrix must be square");
  const std::size_t n = a.rows();
  // (Z_1 A)_ij = a_{i-1,j} (row n-1 wraps to row 0);
  // (A Z_-1)_ij = a_{i,j+1} for j < n-1, -a_{i,0} for j = n-1.
  DenseMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t up = (i + n - 1) % n;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex right = (j + 1 < n) ? a(i, j + 1) : -a(i, 0);
      b(i, j) = a(up, j) - right;
    }
  }
  return b;
}

DenseMatrix toeplitz_displacement(const ToeplitzCoeffs& c) {
  if (c.size() < 2) throw DimensionError("toeplitz_displacement: order must be at least 2");
  return shift_displacement(dense_toeplitz(c));
}

double max_imag(std::span<const Complex> x) {
  double m = 0.0;
  for (const auto& z : x) m = std::max(m, std::abs(z.imag()));
  return m;
}

}  // namespace structsolve
