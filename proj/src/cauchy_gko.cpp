#include "structsolve/cauchy_gko.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>

namespace structsolve {

namespace {

constexpr double kTinyDenominator = 1e-300;

/// Working generator state. Psi is stored transposed so that psi_j is a
/// contiguous row, like phi_j.
struct Workspace {
  std::size_t n = 0;
  std::size_t alpha = 0;
  DenseMatrix phi;   // n x alpha
  DenseMatrix psiT;  // n x alpha
  CVector t;
  CVector s;

  Workspace(const GeneratorPair& g, const CauchyNodes& nodes)
      : n(g.size()), alpha(g.alpha()), phi(g.phi()), psiT(transpose(g.psi())), t(nodes.t()), s(nodes.s()) {
    if (nodes.size() != n) throw DimensionError("generator and node orders differ");
  }

  Complex product(std::size_t i, std::size_t j) const {
    Complex acc{};
    auto a = phi.row(i);
    auto b = psiT.row(j);
    for (std::size_t m = 0; m < alpha; ++m) acc += a[m] * b[m];
    return acc;
  }

  double abs_product(std::size_t i, std::size_t j) const {
    double acc = 0.0;
    auto a = phi.row(i);
    auto b = psiT.row(j);
    for (std::size_t m = 0; m < alpha; ++m) acc += std::abs(a[m]) * std::abs(b[m]);
    return acc;
  }

  Complex entry(std::size_t i, std::size_t j) const { return product(i, j) / (t[i] - s[j]); }
};

void swap_rows(DenseMatrix& m, std::size_t a, std::size_t b, std::size_t ncols) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.begin() + static_cast<std::ptrdiff_t>(ncols), rb.begin());
}

void swap_cols(DenseMatrix& m, std::size_t a, std::size_t b, std::size_t nrows) {
  if (a == b) return;
  for (std::size_t i = 0; i < nrows; ++i) std::swap(m(i, a), m(i, b));
}

/// Index of the first entry of maximal magnitude in v[from..).
std::size_t argmax_abs(const CVector& v, std::size_t from, double& best) {
  std::size_t idx = from;
  best = -1.0;
  for (std::size_t j = from; j < v.size(); ++j) {
    const double a = std::abs(v[j]);
    if (a > best) {
      best = a;
      idx = j;
    }
  }
  return idx;
}

/// In-place generator update for elimination step k.
void update_generators(DenseMatrix& phi, DenseMatrix& psiT, std::span<const Complex> l_col,
                       std::span<const Complex> u_row, Complex u_kk, std::size_t k) {
  const std::size_t n = phi.rows();
  const std::size_t alpha = phi.cols();
  for (std::size_t j = k + 1; j < n; ++j) {
    const Complex l = l_col[j];
    const Complex w = u_row[j] / u_kk;
    auto pj = phi.row(j);
    auto pk = phi.row(k);
    auto qj = psiT.row(j);
    auto qk = psiT.row(k);
    for (std::size_t m = 0; m < alpha; ++m) {
      pj[m] -= l * pk[m];
      qj[m] -= qk[m] * w;
    }
  }
  for (auto& x : phi.row(k)) x = 0.0;
  for (auto& x : psiT.row(k)) x = 0.0;
}

GrowthStep measure_step(const Workspace& w, std::size_t k, Complex u_kk, bool schur_ratio) {
  GrowthStep st;
  const double inf = std::numeric_limits<double>::infinity();
  const double abs_ukk = std::abs(u_kk);
  for (std::size_t j = k; j < w.n; ++j) {
    // column k: |v_jk| and |v_jk l_jk|
    const double a_col = w.abs_product(j, k);
    const double p_col = std::abs(w.product(j, k));
    double v_col = inf;
    if (p_col >= kTinyDenominator) {
      v_col = a_col / p_col;
    } else {
      st.degenerate = true;
    }
    st.v_col_max = std::max(st.v_col_max, v_col);
    const double hl = a_col / (std::abs(w.t[j] - w.s[k]) * abs_ukk);
    st.hat_l_sq += hl * hl;

    // row k: |v_kj| and |v_kj u_kj|
    const double a_row = w.abs_product(k, j);
    const double p_row = std::abs(w.product(k, j));
    double v_row = inf;
    if (p_row >= kTinyDenominator) {
      v_row = a_row / p_row;
    } else {
      st.degenerate = true;
    }
    st.v_row_max = std::max(st.v_row_max, v_row);
    const double hu = a_row / std::abs(w.t[k] - w.s[j]);
    st.hat_u_sq += hu * hu;

    if (j == k) st.v_kk = v_col;
  }
  if (schur_ratio) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = k; i < w.n; ++i) {
      for (std::size_t j = k; j < w.n; ++j) {
        const double dist = std::abs(w.t[i] - w.s[j]);
        const double hat = w.abs_product(i, j) / dist;
        const double plain = std::abs(w.product(i, j)) / dist;
        num += hat * hat;
        den += plain * plain;
      }
    }
    st.hatted_norm_ratio = den > 0.0 ? std::sqrt(num / den) : inf;
  }
  return st;
}

}  // namespace

const char* to_string(PivotStrategy s) noexcept {
  switch (s) {
    case PivotStrategy::none: return "none";
    case PivotStrategy::partial_row: return "partial";
    case PivotStrategy::row1_col1: return "row1col1";
  }
  return "unknown";
}

std::optional<PivotStrategy> parse_pivot_strategy(std::string_view name) noexcept {
  if (name == "none") return PivotStrategy::none;
  if (name == "partial" || name == "partial_row") return PivotStrategy::partial_row;
  if (name == "row1col1" || name == "row1_col1") return PivotStrategy::row1_col1;
  return std::nullopt;
}

CVector recover_column(const GeneratorPair& g, const CauchyNodes& nodes, std::size_t k) {
  if (g.size() != nodes.size()) throw DimensionError("recover_column: generator and node orders differ");
  if (k >= g.size()) throw DimensionError("recover_column: step out of range");
  CVector out;
  out.reserve(g.size() - k);
  for (std::size_t j = k; j < g.size(); ++j) out.push_back(g.product(j, k) / (nodes.t()[j] - nodes.s()[k]));
  return out;
}

CVector recover_row(const GeneratorPair& g, const CauchyNodes& nodes, std::size_t k) {
  if (g.size() != nodes.size()) throw DimensionError("recover_row: generator and node orders differ");
  if (k >= g.size()) throw DimensionError("recover_row: step out of range");
  CVector out;
  out.reserve(g.size() - k);
  for (std::size_t j = k; j < g.size(); ++j) out.push_back(g.product(k, j) / (nodes.t()[k] - nodes.s()[j]));
  return out;
}

GeneratorPair schur_update(const GeneratorPair& g, std::span<const Complex> l_col,
                           std::span<const Complex> u_row, Complex u_kk, std::size_t k) {
  const std::size_t n = g.size();
  if (k >= n || l_col.size() != n || u_row.size() != n)
    throw DimensionError("schur_update: vector lengths must equal the generator order");
  if (u_kk == Complex{}) throw SingularError("schur_update: zero pivot");
  DenseMatrix phi = g.phi();
  DenseMatrix psiT = transpose(g.psi());
  update_generators(phi, psiT, l_col, u_row, u_kk, k);
  return {std::move(phi), transpose(psiT)};
}

GKOFactorization gko_factor(const GeneratorPair& g, const CauchyNodes& nodes, PivotStrategy strategy,
                            const FactorOptions& options) {
  Workspace w(g, nodes);
  const std::size_t n = w.n;
  if (n == 0) throw DimensionError("gko_factor: empty matrix");

  GKOFactorization f;
  f.row_perm = Permutation::identity(n);
  f.col_perm = Permutation::identity(n);
  f.L = DenseMatrix(n, n);
  f.U = DenseMatrix(n, n);
  f.trace.schur_ratio_tracked = options.track_schur_ratio && n <= options.schur_ratio_limit;
  f.trace.steps.reserve(n);

  CVector col(n), row(n);
  const double breakdown = static_cast<double>(n) * kEps;

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k; j < n; ++j) col[j] = w.entry(j, k);
    double max_col = 0.0;
    const std::size_t q = argmax_abs(col, k, max_col);

    double max_row = -1.0;
    std::size_t p = k;
    if (strategy == PivotStrategy::row1_col1) {
      for (std::size_t j = k; j < n; ++j) row[j] = w.entry(k, j);
      p = argmax_abs(row, k, max_row);
    }

    const bool column_swap = strategy == PivotStrategy::row1_col1 && max_row > max_col;
    std::size_t pivot_index = k;
    Complex u_kk;
    if (column_swap) {
      pivot_index = p;
      if (p != k) {
        std::swap(w.s[k], w.s[p]);
        swap_rows(w.psiT, k, p, w.alpha);
        std::swap(row[k], row[p]);
        swap_cols(f.U, k, p, k);
        f.col_perm.swap(k, p);
      }
      u_kk = row[k];
      col[k] = u_kk;
      for (std::size_t j = k + 1; j < n; ++j) col[j] = w.entry(j, k);
    } else {
      if (strategy != PivotStrategy::none) {
        pivot_index = q;
        if (q != k) {
          std::swap(w.t[k], w.t[q]);
          swap_rows(w.phi, k, q, w.alpha);
          std::swap(col[k], col[q]);
          swap_rows(f.L, k, q, k);
          f.row_perm.swap(k, q);
        }
      }
      u_kk = col[k];
      for (std::size_t j = k + 1; j < n; ++j) row[j] = w.entry(k, j);
    }
    row[k] = u_kk;

    const double candidate_max = std::max(max_col, max_row);
    const double pivot_mag = std::abs(u_kk);
    if (!(pivot_mag > breakdown * candidate_max) || !std::isfinite(pivot_mag)) {
      throw SingularError("gko_factor: pivot " + std::to_string(pivot_mag) + " at step " + std::to_string(k) +
                          " is below the breakdown threshold");
    }

    GrowthStep st = measure_step(w, k, u_kk, f.trace.schur_ratio_tracked);
    st.pivot_index = pivot_index;
    st.pivot_magnitude = pivot_mag;
    st.column_interchange = column_swap;
    f.trace.steps.push_back(st);

    f.L(k, k) = 1.0;
    f.U(k, k) = u_kk;
    for (std::size_t j = k + 1; j < n; ++j) {
      col[j] /= u_kk;
      f.L(j, k) = col[j];
      f.U(k, j) = row[j];
    }
    update_generators(w.phi, w.psiT, col, row, u_kk, k);
  }
  return f;
}

CVector solve_with_factors(const GKOFactorization& f, std::span<const Complex> b) {
  const std::size_t n = f.size();
  if (b.size() != n) throw DimensionError("solve_with_factors: right-hand side length differs from order");
  CVector z = permute(f.row_perm, b);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = z[i];
    auto li = f.L.row(i);
    for (std::size_t j = 0; j < i; ++j) acc -= li[j] * z[j];
    z[i] = acc / li[i];
  }
  for (std::size_t i = n; i-- > 0;) {
    auto ui = f.U.row(i);
    if (ui[i] == Complex{}) throw SingularError("solve_with_factors: zero diagonal in U");
    Complex acc = z[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= ui[j] * z[j];
    z[i] = acc / ui[i];
  }
  return permute_inverse(f.col_perm, z);
}

CauchySolution cauchy_solve(const GeneratorPair& g, const CauchyNodes& nodes, std::span<const Complex> b,
                            PivotStrategy strategy) {
  GKOFactorization f = gko_factor(g, nodes, strategy);
  CVector x = solve_with_factors(f, b);
  return {std::move(x), std::move(f.trace)};
}

}  // namespace structsolve
