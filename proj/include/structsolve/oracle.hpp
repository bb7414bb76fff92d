#pragma once

// Dense O(n^3) references. Nothing here shares code with the structured
// elimination in cauchy_gko.

#include "structsolve/core.hpp"

namespace structsolve {

/// P A = L U
struct DenseFactorization {
  Permutation perm;
  DenseMatrix L;
  DenseMatrix U;
  std::vector<std::size_t> pivot_sequence;  // row chosen at each step, in working order
};

/// Textbook GE/PP; ties go to the smallest index.
DenseFactorization dense_gepp_factor(const DenseMatrix& a);

CVector dense_solve(const DenseMatrix& a, std::span<const Complex> b);
CVector dense_solve(const DenseFactorization& f, std::span<const Complex> b);

/// A22 - A21 A11^{-1} A12 after k unpivoted elimination steps.
DenseMatrix dense_schur_complement(const DenseMatrix& a, std::size_t k);

DenseMatrix dense_inverse(const DenseMatrix& a);

/// ||A||_F ||A^{-1}||_F
double cond_estimate(const DenseMatrix& a);

/// t_ij = a_{i-j}
DenseMatrix dense_toeplitz(const ToeplitzCoeffs& c);

}  // namespace structsolve
