#include "structsolve/sweep.hpp"

#include "structsolve/diagnostics.hpp"
#include "structsolve/oracle.hpp"
#include "structsolve/testgen.hpp"
#include "structsolve/toeplitz_gko.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace structsolve {

void validate(const SweepConfig& config) {
  if (config.n < 4 || config.n % 2 != 0) throw DimensionError("sweep: n must be even and at least 4");
  if (config.delta_exponents.empty()) throw DimensionError("sweep: no delta exponents");
  for (int k : config.delta_exponents)
    if (k <= 0) throw DimensionError("sweep: delta exponents must be positive");
  if (config.strategies.empty()) throw DimensionError("sweep: no pivot strategies");
}

bool SweepResult::all_ok() const {
  for (const auto& r : records)
    if (!r.ok) return false;
  return true;
}

SweepRecord run_sweep_point(std::size_t n, int exponent, PivotStrategy strategy, RhsKind rhs, std::uint64_t seed) {
  SweepRecord rec;
  rec.exponent = exponent;
  rec.delta = std::pow(10.0, -exponent);
  rec.strategy = strategy;
  try {
    const ToeplitzCoeffs c = adversarial_toeplitz(AdversarialSpec(n, rec.delta));
    CVector b(n, Complex(1.0, 0.0));
    if (rhs == RhsKind::random) {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      for (auto& x : b) x = u(rng);
    }
    const ToeplitzFactorization f = toeplitz_factor(c, strategy);
    const CVector x = toeplitz_solve(f, b);
    const DenseMatrix t = dense_toeplitz(c);
    const BackwardErrorReport q = solve_quality(t, b, x);
    const GrowthReport g = growth_report(f.inner, f.nodes);
    rec.forward_err = *q.forward_err;
    rec.residual = *q.residual;
    rec.cond = cond_estimate(t);
    rec.g1 = g.g1;
    rec.g2 = g.g2;
    rec.g3 = g.g3;
    rec.bmax_over_bmin = g.b_max / g.b_min;
    rec.backward_err = backward_error_toeplitz(c, f).rel_err;
    rec.max_imag = max_imag(x);
    rec.ok = true;
  } catch (const Error& e) {
    rec.error = e.what();
  }
  return rec;
}

std::optional<double> least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

SweepResult run_sweep(const SweepConfig& config) {
  validate(config);
  SweepResult result;
  for (int k : config.delta_exponents)
    for (PivotStrategy s : config.strategies)
      result.records.push_back(run_sweep_point(config.n, k, s, config.rhs, config.seed));

  for (PivotStrategy s : config.strategies) {
    std::vector<double> ks, fe, rs;
    for (const auto& r : result.records) {
      if (r.strategy != s || !r.ok) continue;
      if (r.exponent < config.slope_min_exponent || r.exponent > config.slope_max_exponent) continue;
      if (!(r.forward_err > 0.0) || !(r.residual > 0.0)) continue;
      ks.push_back(r.exponent);
      fe.push_back(std::log10(r.forward_err));
      rs.push_back(std::log10(r.residual));
    }
    result.slopes.push_back({s, least_squares_slope(ks, fe), least_squares_slope(ks, rs), ks.size()});
  }
  return result;
}

std::string to_csv(const SweepResult& result) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  char buf[512];
  for (const auto& r : result.records) {
    if (r.ok) {
      std::snprintf(buf, sizeof buf, "%.0e,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.delta,
                    to_string(r.strategy), r.forward_err, r.residual, r.cond, r.g1, r.g2, r.g3, r.bmax_over_bmin,
                    r.backward_err);
    } else {
      std::snprintf(buf, sizeof buf, "%.0e,%s,nan,nan,nan,nan,nan,nan,nan,nan\n", r.delta, to_string(r.strategy));
    }
    out += buf;
  }
  return out;
}

}  // namespace structsolve
