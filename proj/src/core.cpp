#include "structsolve/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace structsolve {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, CVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows_ * cols_, "DenseMatrix: entry count does not match shape");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "DenseMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CVector DenseMatrix::column(std::size_t j) const {
  CVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.cols() == b.rows(), "matrix product: inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
    }
  }
  return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: shapes differ");
  CVector e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return {a.rows(), a.cols(), std::move(e)};
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference: shapes differ");
  CVector e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return {a.rows(), a.cols(), std::move(e)};
}

DenseMatrix operator*(Complex scale, const DenseMatrix& a) {
  CVector e(a.entries().begin(), a.entries().end());
  for (auto& x : e) x *= scale;
  return {a.rows(), a.cols(), std::move(e)};
}

CVector operator*(const DenseMatrix& a, std::span<const Complex> x) {
  require(a.cols() == x.size(), "matrix-vector product: length mismatch");
  CVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    auto r = a.row(i);
    for (std::size_t j = 0; j < x.size(); ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

DenseMatrix conj_transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

DenseMatrix scale_rows(std::span<const Complex> d, const DenseMatrix& a) {
  require(d.size() == a.rows(), "scale_rows: length mismatch");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (auto& x : out.row(i)) x *= d[i];
  return out;
}

DenseMatrix scale_cols(const DenseMatrix& a, std::span<const Complex> d) {
  require(d.size() == a.cols(), "scale_cols: length mismatch");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = out.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] *= d[j];
  }
  return out;
}

double frobenius_norm(const DenseMatrix& m) {
  if (m.entries().empty()) throw DimensionError("frobenius_norm of an empty matrix");
  return norm2(m.entries());
}

double norm2(std::span<const Complex> v) {
  // Scaled accumulation so that huge or tiny entries do not overflow.
  double scale = 0.0;
  double ssq = 1.0;
  for (const Complex& z : v) {
    for (double part : {z.real(), z.imag()}) {
      if (part == 0.0) continue;
      const double a = std::abs(part);
      if (scale < a) {
        ssq = 1.0 + ssq * (scale / a) * (scale / a);
        scale = a;
      } else {
        ssq += (a / scale) * (a / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

CVector subtract(std::span<const Complex> a, std::span<const Complex> b) {
  require(a.size() == b.size(), "subtract: length mismatch");
  CVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    require(v < map_.size() && !seen[v], "Permutation: map is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

DenseMatrix Permutation::as_matrix() const {
  DenseMatrix p(size(), size());
  for (std::size_t i = 0; i < size(); ++i) p(i, map_[i]) = 1.0;
  return p;
}

DenseMatrix apply_row_perm(const Permutation& p, const DenseMatrix& m) {
  require(p.size() == m.rows(), "apply_row_perm: permutation length differs from row count");
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto src = m.row(p[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

DenseMatrix apply_col_perm(const DenseMatrix& m, const Permutation& p) {
  require(p.size() == m.cols(), "apply_col_perm: permutation length differs from column count");
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, p[j]);
  return out;
}

CVector permute(const Permutation& p, std::span<const Complex> v) {
  require(p.size() == v.size(), "permute: length mismatch");
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[p[i]];
  return out;
}

CVector permute_inverse(const Permutation& p, std::span<const Complex> v) {
  require(p.size() == v.size(), "permute_inverse: length mismatch");
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[p[i]] = v[i];
  return out;
}

GeneratorPair::GeneratorPair(DenseMatrix phi, DenseMatrix psi)
    : phi_(std::move(phi)), psi_(std::move(psi)) {
  require(phi_.cols() >= 1, "GeneratorPair: displacement rank must be at least 1");
  require(psi_.rows() == phi_.cols(), "GeneratorPair: Psi must have alpha rows");
  require(psi_.cols() == phi_.rows(), "GeneratorPair: Phi and Psi orders differ");
}

Complex GeneratorPair::product(std::size_t i, std::size_t j) const {
  Complex acc{};
  for (std::size_t m = 0; m < alpha(); ++m) acc += phi_(i, m) * psi_(m, j);
  return acc;
}

CauchyNodes::CauchyNodes(CVector t, CVector s) : t_(std::move(t)), s_(std::move(s)) {
  require(t_.size() == s_.size(), "CauchyNodes: t and s lengths differ");
  double scale = 1.0;
  for (const auto& z : t_) scale = std::max(scale, std::abs(z));
  for (const auto& z : s_) scale = std::max(scale, std::abs(z));
  const double tol = kCollisionTolerance * scale;
  for (std::size_t i = 0; i < t_.size(); ++i)
    for (std::size_t j = 0; j < s_.size(); ++j)
      if (!(std::abs(t_[i] - s_[j]) >= tol))
        throw NodeCollisionError("CauchyNodes: t[" + std::to_string(i) + "] collides with s[" +
                                 std::to_string(j) + "]");
}

ToeplitzCoeffs::ToeplitzCoeffs(std::size_t n, CVector a) : n_(n), a_(std::move(a)) {
  require(n_ >= 1, "ToeplitzCoeffs: order must be positive");
  require(a_.size() == 2 * n_ - 1, "ToeplitzCoeffs: expected 2n-1 coefficients");
}

ToeplitzCoeffs ToeplitzCoeffs::from_column_row(std::span<const Complex> first_col,
                                               std::span<const Complex> first_row) {
  require(!first_col.empty() && first_col.size() == first_row.size(),
          "ToeplitzCoeffs: first column and row lengths differ");
  const std::size_t n = first_col.size();
  CVector a(2 * n - 1);
  // t_{0j} = a_{-j}, t_{i0} = a_i
  for (std::size_t j = 1; j < n; ++j) a[n - 1 - j] = first_row[j];
  for (std::size_t i = 0; i < n; ++i) a[n - 1 + i] = first_col[i];
  return {n, std::move(a)};
}

bool ToeplitzCoeffs::is_real(double tol) const {
  return std::all_of(a_.begin(), a_.end(), [tol](const Complex& z) { return std::abs(z.imag()) <= tol; });
}

DenseMatrix GKOFactorization::reconstruct() const {
  const DenseMatrix lu = L * U;
  // R = P^T (LU) P'^T: row i of LU is row row_perm[i] of R.
  DenseMatrix r(lu.rows(), lu.cols());
  for (std::size_t i = 0; i < lu.rows(); ++i)
    for (std::size_t j = 0; j < lu.cols(); ++j) r(row_perm[i], col_perm[j]) = lu(i, j);
  return r;
}

DenseMatrix materialize_cauchy(const GeneratorPair& g, const CauchyNodes& nodes) {
  require(g.size() == nodes.size(), "materialize_cauchy: generator and node orders differ");
  const std::size_t n = g.size();
  DenseMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = g.product(i, j) / (nodes.t()[i] - nodes.s()[j]);
  return r;
}

}  // namespace structsolve
