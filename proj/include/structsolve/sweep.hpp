#pragma once

#include "structsolve/cauchy_gko.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace structsolve {

enum class RhsKind { ones, random };

struct SweepConfig {
  std::size_t n = 8;
  std::vector<int> delta_exponents = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
  std::vector<PivotStrategy> strategies = {PivotStrategy::partial_row, PivotStrategy::row1_col1};
  RhsKind rhs = RhsKind::ones;
  std::uint64_t seed = 0;
  /// Exponent window used for the regression slopes.
  int slope_min_exponent = 2;
  int slope_max_exponent = 6;
};

void validate(const SweepConfig& config);

struct SweepRecord {
  double delta = 0.0;
  int exponent = 0;
  PivotStrategy strategy = PivotStrategy::partial_row;
  bool ok = false;
  std::string error;
  double forward_err = 0.0;
  double residual = 0.0;
  double cond = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  double bmax_over_bmin = 0.0;
  double backward_err = 0.0;
  double max_imag = 0.0;
};

struct SweepSlopes {
  PivotStrategy strategy = PivotStrategy::partial_row;
  /// least-squares slope of log10(err) against k = log10(1/delta)
  std::optional<double> forward_err_slope;
  std::optional<double> residual_slope;
  std::size_t points = 0;
};

struct SweepResult {
  std::vector<SweepRecord> records;  // delta-major, then strategy in config order
  std::vector<SweepSlopes> slopes;
  bool all_ok() const;
};

SweepRecord run_sweep_point(std::size_t n, int exponent, PivotStrategy strategy, RhsKind rhs, std::uint64_t seed);

SweepResult run_sweep(const SweepConfig& config);

/// Least-squares slope of y against x; nullopt with fewer than two points.
std::optional<double> least_squares_slope(std::span<const double> x, std::span<const double> y);

inline constexpr const char* kSweepCsvHeader =
    "delta,strategy,forward_err,residual,cond,g1,g2,g3,bmax_over_bmin,backward_err";

std::string to_csv(const SweepResult& result);

}  // namespace structsolve
