#pragma once

#include "structsolve/cauchy_gko.hpp"
#include "structsolve/core.hpp"
#include "structsolve/dft.hpp"

#include <utility>

namespace structsolve {

/// T = F^* P^T L U P'^T F D, where P^T L U P'^T factors R = F T D^{-1} F^*.
struct ToeplitzFactorization {
  GKOFactorization inner;
  std::size_t n = 0;
  DftPlan plan;
  CVector d;
  CauchyNodes nodes;
  GeneratorPair cauchy_generators;
};

/// {Z_1, Z_-1}-generators of T: Z_1 T - T Z_-1 = Phi Psi, alpha = 2.
GeneratorPair toeplitz_generators(const ToeplitzCoeffs& c);

/// Phi_C = F Omega, Psi_C^* = F D Gamma^*, with the matching unit-circle nodes.
std::pair<GeneratorPair, CauchyNodes> to_cauchy_generators(const GeneratorPair& g, std::size_t n);

ToeplitzFactorization toeplitz_factor(const ToeplitzCoeffs& c, PivotStrategy strategy,
                                      const FactorOptions& options = {});

CVector toeplitz_solve(const ToeplitzFactorization& f, std::span<const Complex> b);

/// Z_1 A - A Z_-1 for any square A.
DenseMatrix shift_displacement(const DenseMatrix& a);

/// Z_1 T - T Z_-1, densely.
DenseMatrix toeplitz_displacement(const ToeplitzCoeffs& c);

/// Z_f: ones on the subdiagonal, f in the top-right corner.
DenseMatrix shift_matrix(std::size_t n, double corner);

/// Largest |Im x_i|; a diagnostic for solves of real systems.
double max_imag(std::span<const Complex> x);

}  // namespace structsolve
