#pragma once

#include "structsolve/core.hpp"

#include <optional>

namespace structsolve {

enum class PivotStrategy { none, partial_row, row1_col1 };

const char* to_string(PivotStrategy s) noexcept;
std::optional<PivotStrategy> parse_pivot_strategy(std::string_view name) noexcept;

struct FactorOptions {
  /// Record ||V^(k) o R_k|| / ||R_k|| at each step. This costs O(n^2) per step,
  /// so it is skipped for orders above `schur_ratio_limit`.
  bool track_schur_ratio = true;
  std::size_t schur_ratio_limit = 256;
};

/// Entries r^(k)_jk, j = k..n-1, of the step-k reduced matrix.
CVector recover_column(const GeneratorPair& g, const CauchyNodes& nodes, std::size_t k);
/// Entries r^(k)_kj, j = k..n-1.
CVector recover_row(const GeneratorPair& g, const CauchyNodes& nodes, std::size_t k);

/// One generator update of the Schur complement of position k:
///   phi_j <- phi_j - l_jk phi_k,           j > k
///   psi_j <- psi_j - psi_k u_kj / u_kk,    j > k
/// Row k of Phi and column k of Psi are zeroed; rows/columns before k are
/// copied unchanged. `l_col` and `u_row` are full-length vectors of which
/// only entries j > k are read.
GeneratorPair schur_update(const GeneratorPair& g, std::span<const Complex> l_col,
                           std::span<const Complex> u_row, Complex u_kk, std::size_t k);

/// Structured Gaussian elimination on Cauchy-type generators:
/// R = P^T L U P'^T in O(alpha n^2) operations.
GKOFactorization gko_factor(const GeneratorPair& g, const CauchyNodes& nodes, PivotStrategy strategy,
                            const FactorOptions& options = {});

/// Solves P^T L U P'^T x = b.
CVector solve_with_factors(const GKOFactorization& f, std::span<const Complex> b);

struct CauchySolution {
  CVector x;
  GrowthTrace trace;
};

CauchySolution cauchy_solve(const GeneratorPair& g, const CauchyNodes& nodes, std::span<const Complex> b,
                            PivotStrategy strategy);

}  // namespace structsolve
