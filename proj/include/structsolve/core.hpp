#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace structsolve {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree, or an argument is outside its domain.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Some t_i coincides with some s_j, so r_ij cannot be recovered from generators.
class NodeCollisionError : public Error {
 public:
  using Error::Error;
};

/// Elimination hit a pivot below the breakdown threshold.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Dense complex matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, CVector entries);
  DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<Complex> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  CVector column(std::size_t j) const;

  std::span<const Complex> entries() const noexcept { return entries_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  CVector entries_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(Complex scale, const DenseMatrix& a);
CVector operator*(const DenseMatrix& a, std::span<const Complex> x);

DenseMatrix conj_transpose(const DenseMatrix& a);
DenseMatrix transpose(const DenseMatrix& a);
/// diag(d) * a
DenseMatrix scale_rows(std::span<const Complex> d, const DenseMatrix& a);
/// a * diag(d)
DenseMatrix scale_cols(const DenseMatrix& a, std::span<const Complex> d);

double frobenius_norm(const DenseMatrix& m);
double norm2(std::span<const Complex> v);
CVector subtract(std::span<const Complex> a, std::span<const Complex> b);

/// A bijection on {0..n-1}. Applied to rows, row i of the result is row map[i]
/// of the input, so as a matrix P has P(i, map[i]) = 1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> map);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  void swap(std::size_t i, std::size_t j) { std::swap(map_[i], map_[j]); }

  DenseMatrix as_matrix() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> map_;
};

DenseMatrix apply_row_perm(const Permutation& p, const DenseMatrix& m);
/// Column j of the result is column map[j] of m, i.e. m * P^T.
DenseMatrix apply_col_perm(const DenseMatrix& m, const Permutation& p);
/// out[i] = v[map[i]]  (P v)
CVector permute(const Permutation& p, std::span<const Complex> v);
/// out[map[i]] = v[i]  (P^T v)
CVector permute_inverse(const Permutation& p, std::span<const Complex> v);

/// Generator pair (Phi, Psi) of A_f R - R A_b = Phi Psi; Phi is n x alpha,
/// Psi is alpha x n.
class GeneratorPair {
 public:
  GeneratorPair() = default;
  GeneratorPair(DenseMatrix phi, DenseMatrix psi);

  std::size_t size() const noexcept { return phi_.rows(); }
  std::size_t alpha() const noexcept { return phi_.cols(); }
  const DenseMatrix& phi() const noexcept { return phi_; }
  const DenseMatrix& psi() const noexcept { return psi_; }

  /// phi_i psi_j
  Complex product(std::size_t i, std::size_t j) const;

 private:
  DenseMatrix phi_;
  DenseMatrix psi_;
};

/// Diagonals of D_t, D_s. Construction rejects min|t_i - s_j| below
/// 1e-14 * max(|t|, |s|, 1).
class CauchyNodes {
 public:
  CauchyNodes() = default;
  CauchyNodes(CVector t, CVector s);

  std::size_t size() const noexcept { return t_.size(); }
  const CVector& t() const noexcept { return t_; }
  const CVector& s() const noexcept { return s_; }

  static constexpr double kCollisionTolerance = 1e-14;

 private:
  CVector t_;
  CVector s_;
};

/// Coefficients a_{1-n}..a_{n-1} of T with t_ij = a_{i-j}.
class ToeplitzCoeffs {
 public:
  ToeplitzCoeffs() = default;
  /// `a` holds a_{1-n}, ..., a_0, ..., a_{n-1} in that order.
  ToeplitzCoeffs(std::size_t n, CVector a);

  static ToeplitzCoeffs from_column_row(std::span<const Complex> first_col,
                                        std::span<const Complex> first_row);

  std::size_t size() const noexcept { return n_; }
  /// a_k for 1-n <= k <= n-1
  Complex operator[](long k) const { return a_[static_cast<std::size_t>(k + static_cast<long>(n_) - 1)]; }
  const CVector& coefficients() const noexcept { return a_; }
  bool is_real(double tol = 0.0) const;

 private:
  std::size_t n_ = 0;
  CVector a_;
};

/// Per-step record of the elimination.
struct GrowthStep {
  std::size_t pivot_index = 0;       // working row (or column) brought to position k
  double pivot_magnitude = 0.0;
  bool column_interchange = false;
  double v_col_max = 0.0;            // max_j |v_jk|, j >= k
  double v_row_max = 0.0;            // max_j |v_kj|, j >= k
  double v_kk = 0.0;                 // |v_kk|
  double hat_l_sq = 0.0;             // sum_j |v_jk l_jk|^2, j >= k
  double hat_u_sq = 0.0;             // sum_j |v_kj u_kj|^2, j >= k
  /// ||V^(k) o R_k||_F / ||R_k||_F; NaN when not tracked.
  double hatted_norm_ratio = std::numeric_limits<double>::quiet_NaN();
  bool degenerate = false;           // some V entry had a vanishing denominator
};

struct GrowthTrace {
  std::vector<GrowthStep> steps;
  bool schur_ratio_tracked = false;
};

/// P R P' = L U, i.e. R = P^T L U P'^T.
struct GKOFactorization {
  Permutation row_perm;
  Permutation col_perm;
  DenseMatrix L;
  DenseMatrix U;
  GrowthTrace trace;

  std::size_t size() const noexcept { return L.rows(); }
  /// P^T L U P'^T
  DenseMatrix reconstruct() const;
};

/// r_ij = phi_i psi_j / (t_i - s_j)
DenseMatrix materialize_cauchy(const GeneratorPair& g, const CauchyNodes& nodes);

}  // namespace structsolve
