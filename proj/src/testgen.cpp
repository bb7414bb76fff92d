#include "structsolve/testgen.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace structsolve {

AdversarialSpec::AdversarialSpec(std::size_t n, double delta) : n_(n), delta_(delta) {
  if (n < 4 || n % 2 != 0) throw DimensionError("AdversarialSpec: order must be even and at least 4");
  if (!(delta > 0.0 && delta <= 1.0)) throw DimensionError("AdversarialSpec: delta must lie in (0, 1]");
}

ToeplitzCoeffs adversarial_toeplitz(const AdversarialSpec& spec) {
  const std::size_t n = spec.n();
  const long ln = static_cast<long>(n);
  CVector a(2 * n - 1);
  auto at = [&](long k) -> Complex& { return a[static_cast<std::size_t>(k + ln - 1)]; };
  const double angle = std::numbers::pi / static_cast<double>(n);
  at(0) = 1.0;
  at(ln / 2 - 1) = -std::sin(angle);
  at(ln - 1) = std::cos(angle) + spec.delta() / 2.0;
  for (long i = 1; i < ln; ++i) at(i - ln) = -at(i);
  return {n, std::move(a)};
}

CauchyNodes interleaved_nodes(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DimensionError("interleaved_nodes: order must be positive");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  const double h = 1.0 / static_cast<double>(n);
  CVector t(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = (2.0 * static_cast<double>(i) + jitter(rng)) * h;
    s[i] = (2.0 * static_cast<double>(i) + 1.0 + jitter(rng)) * h;
  }
  return {std::move(t), std::move(s)};
}

CauchyProblem cancellation_cauchy(std::size_t n, double f_norm, std::uint64_t seed) {
  if (n < 2) throw DimensionError("cancellation_cauchy: order must be at least 2");
  if (!(f_norm > 0.0 && f_norm <= 1.0)) throw DimensionError("cancellation_cauchy: f_norm must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  // Magnitudes in [0.5, 1] with random signs keep every |a_i|/|f_i| within 2x of the mean.
  std::uniform_real_distribution<double> mag(0.5, 1.0);
  std::bernoulli_distribution sign(0.5);
  auto draw = [&](double norm) {
    CVector v(n);
    for (auto& x : v) x = sign(rng) ? mag(rng) : -mag(rng);
    const double scale = norm / norm2(v);
    for (auto& x : v) x *= scale;
    return v;
  };
  const CVector a = draw(1.0);
  const CVector f = draw(f_norm);
  DenseMatrix phi(n, 2), psi(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    phi(i, 0) = a[i];
    phi(i, 1) = a[i] + f[i];
    psi(0, i) = a[i];
    psi(1, i) = -a[i];
  }
  return {GeneratorPair(std::move(phi), std::move(psi)), interleaved_nodes(n, seed)};
}

ToeplitzCoeffs random_toeplitz(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw DimensionError("random_toeplitz: order must be at least 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CVector a(2 * n - 1);
  for (auto& x : a) x = u(rng);
  return {n, std::move(a)};
}

CauchyProblem random_cauchy_type(std::size_t n, std::size_t alpha, std::uint64_t seed) {
  if (n < 1) throw DimensionError("random_cauchy_type: order must be positive");
  if (alpha < 1 || alpha > 4) throw DimensionError("random_cauchy_type: alpha must lie in [1, 4]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix phi(n, alpha), psi(alpha, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < alpha; ++m) phi(i, m) = u(rng);
  for (std::size_t m = 0; m < alpha; ++m)
    for (std::size_t j = 0; j < n; ++j) psi(m, j) = u(rng);
  return {GeneratorPair(std::move(phi), std::move(psi)), interleaved_nodes(n, seed)};
}

}  // namespace structsolve
