#pragma once

#include "structsolve/core.hpp"
#include "structsolve/toeplitz_gko.hpp"

#include <optional>

namespace structsolve {

/// Generator growth factors and the unit-constant backward-error bounds.
/// All small constants in the bounds are taken as 1.
struct GrowthReport {
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  double v_kk_norm = 0.0;   // max_k |v_kk^(k)|
  double hatL_ratio = 0.0;  // ||L^||_F / ||L||_F
  double hatU_ratio = 0.0;  // ||U^||_F / ||U||_F
  double b_max = 0.0;
  double b_min = 0.0;
  double bound_cauchy = 0.0;
  double bound_toeplitz = 0.0;
  double norm_L = 0.0;
  double norm_U = 0.0;
  bool g2_computed = false;
  bool degenerate = false;
};

struct BackwardErrorReport {
  double abs_err = 0.0;
  double rel_err = 0.0;
  std::optional<double> residual;       // ||A x~ - b|| / ||b||
  std::optional<double> forward_err;    // ||x~ - x|| / ||x||, x from the dense oracle
};

/// v_ij = (sum_m |phi_im||psi_mj|) / (sum_m phi_im psi_mj). Entries whose
/// denominator is below 1e-300 in magnitude are set to +inf.
DenseMatrix v_matrix(const GeneratorPair& g);

/// Smallest |v_ij|.
double v_matrix_min(const DenseMatrix& v);

/// b_max / b_min for B = [1/(t_i - s_j)].
struct NodeSpread {
  double b_max = 0.0;
  double b_min = 0.0;
  double ratio() const { return b_max / b_min; }
};
NodeSpread node_spread(const CauchyNodes& nodes);

GrowthReport growth_report(const GKOFactorization& f, const CauchyNodes& nodes);

BackwardErrorReport backward_error_cauchy(const GeneratorPair& g, const CauchyNodes& nodes,
                                          const GKOFactorization& f);

/// ||F^* (P^T L U P'^T) F D - T||_F
BackwardErrorReport backward_error_toeplitz(const ToeplitzCoeffs& c, const ToeplitzFactorization& f);

/// Inverts A -> Z_1 A - A Z_-1 by wrapped diagonal sums.
DenseMatrix recover_from_displacement(const DenseMatrix& b);

/// Residual and forward error of x~ for T x = b. abs_err/rel_err hold the
/// absolute residual and the normwise backward error
/// ||T x~ - b|| / (||T||_F ||x~|| + ||b||).
BackwardErrorReport solve_quality(const ToeplitzCoeffs& c, std::span<const Complex> b,
                                  std::span<const Complex> x_tilde);

/// Same as above for a dense system.
BackwardErrorReport solve_quality(const DenseMatrix& a, std::span<const Complex> b,
                                  std::span<const Complex> x_tilde);

}  // namespace structsolve
