#pragma once

#include "structsolve/core.hpp"

namespace structsolve {

/// Unitary DFT F = n^{-1/2} [exp(2 pi i jk / n)] by direct summation.
class DftPlan {
 public:
  DftPlan() = default;
  explicit DftPlan(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  /// roots[k] = exp(2 pi i k / n)
  const CVector& roots() const noexcept { return roots_; }

  CVector forward(std::span<const Complex> v) const;
  CVector inverse(std::span<const Complex> v) const;

  /// Dense F, for oracles.
  DenseMatrix matrix() const;

 private:
  CVector transform(std::span<const Complex> v, bool conjugate) const;

  std::size_t n_ = 0;
  CVector roots_;
};

CVector apply_F(const DftPlan& plan, std::span<const Complex> v);
CVector apply_F_inv(const DftPlan& plan, std::span<const Complex> v);

/// t_k = exp(2 pi i k / n), s_k = exp(pi i (2k + 1) / n), k = 0..n-1.
CauchyNodes toeplitz_cauchy_nodes(std::size_t n);

/// d_k = exp(pi i k / n)
CVector scaling_D(std::size_t n);

}  // namespace structsolve
