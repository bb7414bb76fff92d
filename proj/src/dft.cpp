#include "structsolve/dft.hpp"

#include <cmath>
#include <numbers>

namespace structsolve {

namespace {

Complex unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

DftPlan::DftPlan(std::size_t n) : n_(n), roots_(n) {
  if (n == 0) throw DimensionError("DftPlan: order must be positive");
  for (std::size_t k = 0; k < n; ++k)
    roots_[k] = unit(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

CVector DftPlan::transform(std::span<const Complex> v, bool conjugate) const {
  if (v.size() != n_) throw DimensionError("DFT: vector length differs from plan order");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_));
  CVector out(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    Complex acc{};
    std::size_t idx = 0;  // (k * j) mod n
    for (std::size_t j = 0; j < n_; ++j) {
      const Complex w = conjugate ? std::conj(roots_[idx]) : roots_[idx];
      acc += w * v[j];
      idx += k;
      if (idx >= n_) idx -= n_;
    }
    out[k] = acc * scale;
  }
  return out;
}

CVector DftPlan::forward(std::span<const Complex> v) const { return transform(v, false); }
CVector DftPlan::inverse(std::span<const Complex> v) const { return transform(v, true); }

DenseMatrix DftPlan::matrix() const {
  DenseMatrix f(n_, n_);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_));
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t j = 0; j < n_; ++j) f(k, j) = roots_[(k * j) % n_] * scale;
  return f;
}

CVector apply_F(const DftPlan& plan, std::span<const Complex> v) { return plan.forward(v); }
CVector apply_F_inv(const DftPlan& plan, std::span<const Complex> v) { return plan.inverse(v); }

CauchyNodes toeplitz_cauchy_nodes(std::size_t n) {
  if (n == 0) throw DimensionError("toeplitz_cauchy_nodes: order must be positive");
  CVector t(n), s(n);
  const double dn = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double dk = static_cast<double>(k);
    t[k] = unit(2.0 * std::numbers::pi * dk / dn);
    s[k] = unit(std::numbers::pi * (2.0 * dk + 1.0) / dn);
  }
  return {std::move(t), std::move(s)};
}

CVector scaling_D(std::size_t n) {
  if (n == 0) throw DimensionError("scaling_D: order must be positive");
  CVector d(n);
  for (std::size_t k = 0; k < n; ++k)
    d[k] = unit(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  return d;
}

}  // namespace structsolve
