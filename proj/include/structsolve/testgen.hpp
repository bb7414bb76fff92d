#pragma once

#include "structsolve/core.hpp"

#include <cstdint>

namespace structsolve {

/// Order and perturbation of the adversarial Toeplitz family.
class AdversarialSpec {
 public:
  AdversarialSpec(std::size_t n, double delta);

  std::size_t n() const noexcept { return n_; }
  double delta() const noexcept { return delta_; }

 private:
  std::size_t n_;
  double delta_;
};

struct CauchyProblem {
  GeneratorPair generators;
  CauchyNodes nodes;
};

/// Real Toeplitz matrix whose Cauchy generators have psi_11 + psi_21
/// proportional to delta, so column 1 of V grows like 1/delta.
ToeplitzCoeffs adversarial_toeplitz(const AdversarialSpec& spec);

/// Phi = [a, a + f], Psi = [a^T; -a^T] with ||a|| = 1, ||f|| = f_norm on
/// interleaved real nodes.
CauchyProblem cancellation_cauchy(std::size_t n, double f_norm, std::uint64_t seed);

/// Coefficients i.i.d. uniform in [-1, 1].
ToeplitzCoeffs random_toeplitz(std::size_t n, std::uint64_t seed);

/// Generator entries uniform in [-1, 1] on interleaved real nodes.
CauchyProblem random_cauchy_type(std::size_t n, std::size_t alpha, std::uint64_t seed);

/// Interleaved real nodes on [0, 2): t at even, s at odd multiples of 1/n,
/// each jittered by at most 0.2/n.
CauchyNodes interleaved_nodes(std::size_t n, std::uint64_t seed);

}  // namespace structsolve
