#include "structsolve/diagnostics.hpp"

#include "structsolve/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace structsolve {

DenseMatrix v_matrix(const GeneratorPair& g) {
  const std::size_t n = g.size();
  const double inf = std::numeric_limits<double>::infinity();
  DenseMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double num = 0.0;
      Complex den{};
      for (std::size_t m = 0; m < g.alpha(); ++m) {
        num += std::abs(g.phi()(i, m)) * std::abs(g.psi()(m, j));
        den += g.phi()(i, m) * g.psi()(m, j);
      }
      v(i, j) = std::abs(den) < 1e-300 ? Complex(inf, 0.0) : num / den;
    }
  }
  return v;
}

double v_matrix_min(const DenseMatrix& v) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& z : v.entries()) m = std::min(m, std::abs(z));
  return m;
}

NodeSpread node_spread(const CauchyNodes& nodes) {
  double dmin = std::numeric_limits<double>::infinity();
  double dmax = 0.0;
  for (const auto& t : nodes.t()) {
    for (const auto& s : nodes.s()) {
      const double d = std::abs(t - s);
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
  }
  return {1.0 / dmin, 1.0 / dmax};
}

GrowthReport growth_report(const GKOFactorization& f, const CauchyNodes& nodes) {
  const auto& steps = f.trace.steps;
  const std::size_t n = f.size();
  if (steps.size() != n || nodes.size() != n) throw DimensionError("growth_report: trace does not match factorization");

  GrowthReport r;
  double hat_l = 0.0;
  double hat_u = 0.0;
  for (const auto& st : steps) {
    hat_l += st.hat_l_sq;
    hat_u += st.hat_u_sq;
    r.v_kk_norm = std::max(r.v_kk_norm, st.v_kk);
    r.degenerate = r.degenerate || st.degenerate;
  }
  r.norm_L = frobenius_norm(f.L);
  r.norm_U = frobenius_norm(f.U);
  r.hatL_ratio = std::sqrt(hat_l) / r.norm_L;
  r.hatU_ratio = std::sqrt(hat_u) / r.norm_U;
  r.g1 = r.hatL_ratio + r.hatU_ratio + r.v_kk_norm;

  r.g2_computed = f.trace.schur_ratio_tracked;
  if (r.g2_computed) {
    // max over steps 2..n; a 1x1 problem has no Schur complement and reports 1.
    r.g2 = n > 1 ? 0.0 : 1.0;
    for (std::size_t k = 1; k < n; ++k) r.g2 = std::max(r.g2, steps[k].hatted_norm_ratio);
  } else {
    r.g2 = std::numeric_limits<double>::quiet_NaN();
  }
  r.g3 = r.g2_computed ? std::max(r.g1, r.g2) : r.g1;

  const NodeSpread spread = node_spread(nodes);
  r.b_max = spread.b_max;
  r.b_min = spread.b_min;
  const double lu = r.norm_L * r.norm_U;
  const double dn = static_cast<double>(n);
  const double g2_term = r.g2_computed ? r.g2 : 0.0;
  r.bound_cauchy = kEps * (spread.ratio() * r.g1 + dn * g2_term) * lu;
  r.bound_toeplitz = kEps * r.g3 * dn * lu;
  return r;
}

BackwardErrorReport backward_error_cauchy(const GeneratorPair& g, const CauchyNodes& nodes,
                                          const GKOFactorization& f) {
  const DenseMatrix r = materialize_cauchy(g, nodes);
  BackwardErrorReport rep;
  rep.abs_err = frobenius_norm(f.reconstruct() - r);
  rep.rel_err = rep.abs_err / frobenius_norm(r);
  return rep;
}

BackwardErrorReport backward_error_toeplitz(const ToeplitzCoeffs& c, const ToeplitzFactorization& f) {
  const std::size_t n = f.n;
  if (c.size() != n) throw DimensionError("backward_error_toeplitz: order mismatch");
  const DenseMatrix m = f.inner.reconstruct();
  // F^* M F D, column by column then row by row.
  DenseMatrix left(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const CVector col = f.plan.inverse(m.column(j));
    for (std::size_t i = 0; i < n; ++i) left(i, j) = col[i];
  }
  // (X F)_{i,:} = (F^T X^T)... F is symmetric, so row i of X F is F (row i of X).
  DenseMatrix approx(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const CVector row = f.plan.forward(left.row(i));
    for (std::size_t j = 0; j < n; ++j) approx(i, j) = row[j] * f.d[j];
  }
  const DenseMatrix t = dense_toeplitz(c);
  BackwardErrorReport rep;
  rep.abs_err = frobenius_norm(approx - t);
  rep.rel_err = rep.abs_err / frobenius_norm(t);
  return rep;
}

DenseMatrix recover_from_displacement(const DenseMatrix& b) {
  if (b.rows() != b.cols()) throw DimensionError("recover_from_displacement: matrix must be square");
  const std::size_t n = b.rows();
  DenseMatrix a(n, n);
  // 0-based: a_ij = (sum_{k>=j} b_{(i+1+k-j) mod n, k} - sum_{k<j} b_{(i+1+k-j) mod n, k}) / 2
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t r = (i + 1 + k + n - j) % n;
        if (k >= j) {
          acc += b(r, k);
        } else {
          acc -= b(r, k);
        }
      }
      a(i, j) = 0.5 * acc;
    }
  }
  return a;
}

BackwardErrorReport solve_quality(const DenseMatrix& a, std::span<const Complex> b,
                                  std::span<const Complex> x_tilde) {
  if (a.rows() != b.size() || a.cols() != x_tilde.size()) throw DimensionError("solve_quality: size mismatch");
  BackwardErrorReport rep;
  const CVector r = subtract(a * x_tilde, b);
  const double nb = norm2(b);
  rep.abs_err = norm2(r);
  rep.rel_err = rep.abs_err / (frobenius_norm(a) * norm2(x_tilde) + nb);
  rep.residual = rep.abs_err / nb;
  const CVector x = dense_solve(a, b);
  const double nx = norm2(x);
  rep.forward_err = nx > 0.0 ? norm2(subtract(x_tilde, x)) / nx : norm2(x_tilde);
  return rep;
}

BackwardErrorReport solve_quality(const ToeplitzCoeffs& c, std::span<const Complex> b,
                                  std::span<const Complex> x_tilde) {
  return solve_quality(dense_toeplitz(c), b, x_tilde);
}

}  // namespace structsolve
