#include "structsolve/structsolve.h"

#include "structsolve/cauchy_gko.hpp"
#include "structsolve/diagnostics.hpp"
#include "structsolve/oracle.hpp"
#include "structsolve/sweep.hpp"
#include "structsolve/testgen.hpp"
#include "structsolve/toeplitz_gko.hpp"

#include <cmath>
#include <limits>
#include <new>
#include <string>
#include <variant>

using namespace structsolve;

struct ss_problem {
  std::variant<ToeplitzCoeffs, CauchyProblem> data;
};

struct ss_factorization {
  ss_problem problem;
  std::variant<ToeplitzFactorization, GKOFactorization> factors;
};

struct ss_sweep {
  SweepResult result;
  std::string csv;
};

namespace {

thread_local std::string g_last_error;

ss_status fail(ss_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
ss_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return SS_OK;
  } catch (const NodeCollisionError& e) {
    return fail(SS_ERR_NODE_COLLISION, e.what());
  } catch (const SingularError& e) {
    return fail(SS_ERR_SINGULAR, e.what());
  } catch (const DimensionError& e) {
    return fail(SS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SS_ERR_INTERNAL, e.what());
  }
}

PivotStrategy to_strategy(ss_pivot p) {
  switch (p) {
    case SS_PIVOT_NONE: return PivotStrategy::none;
    case SS_PIVOT_PARTIAL: return PivotStrategy::partial_row;
    case SS_PIVOT_ROW1COL1: return PivotStrategy::row1_col1;
  }
  throw DimensionError("unknown pivot strategy");
}

ss_pivot to_pivot(PivotStrategy s) {
  switch (s) {
    case PivotStrategy::none: return SS_PIVOT_NONE;
    case PivotStrategy::partial_row: return SS_PIVOT_PARTIAL;
    case PivotStrategy::row1_col1: return SS_PIVOT_ROW1COL1;
  }
  return SS_PIVOT_NONE;
}

CVector to_vector(const ss_complex* v, std::size_t n) {
  if (n > 0 && v == nullptr) throw DimensionError("null array argument");
  CVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {v[i].re, v[i].im};
  return out;
}

void write_vector(std::span<const Complex> v, ss_complex* out) {
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = {v[i].real(), v[i].imag()};
}

template <typename T>
void require_non_null(const T* p, const char* what) {
  if (p == nullptr) throw DimensionError(std::string("null argument: ") + what);
}

ss_status emit(ss_problem** out, ss_problem value) {
  *out = new ss_problem(std::move(value));
  return SS_OK;
}

std::size_t order(const ss_problem& p) {
  return std::visit(
      [](const auto& d) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, ToeplitzCoeffs>) {
          return d.size();
        } else {
          return d.generators.size();
        }
      },
      p.data);
}

DenseMatrix problem_matrix(const ss_problem& p) {
  if (const auto* c = std::get_if<ToeplitzCoeffs>(&p.data)) return dense_toeplitz(*c);
  const auto& cp = std::get<CauchyProblem>(p.data);
  return materialize_cauchy(cp.generators, cp.nodes);
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void fill(const BackwardErrorReport& r, ss_error_report* out) {
  out->abs_err = r.abs_err;
  out->rel_err = r.rel_err;
  out->residual = r.residual.value_or(kNaN);
  out->forward_err = r.forward_err.value_or(kNaN);
}

}  // namespace

extern "C" {

const char* ss_version(void) { return "1.0.0"; }

const char* ss_last_error(void) { return g_last_error.c_str(); }

const char* ss_pivot_name(ss_pivot p) {
  try {
    return to_string(to_strategy(p));
  } catch (...) {
    return "unknown";
  }
}

ss_status ss_pivot_parse(const char* name, ss_pivot* out) {
  if (name == nullptr || out == nullptr) return fail(SS_ERR_INVALID_ARGUMENT, "null argument");
  const auto s = parse_pivot_strategy(name);
  if (!s) return fail(SS_ERR_INVALID_ARGUMENT,
                      "unknown pivot strategy '" + std::string(name) + "' (expected none, partial or row1col1)");
  *out = to_pivot(*s);
  return SS_OK;
}

ss_status ss_problem_toeplitz(size_t n, const ss_complex* a, ss_problem** out) {
  return guarded([&] {
    require_non_null(out, "out");
    if (n < 1) throw DimensionError("order must be positive");
    emit(out, {ToeplitzCoeffs(n, to_vector(a, 2 * n - 1))});
  });
}

ss_status ss_problem_cauchy(size_t n, size_t alpha, const ss_complex* t, const ss_complex* s,
                            const ss_complex* phi, const ss_complex* psi, ss_problem** out) {
  return guarded([&] {
    require_non_null(out, "out");
    if (n < 1 || alpha < 1) throw DimensionError("order and displacement rank must be positive");
    CauchyNodes nodes(to_vector(t, n), to_vector(s, n));
    GeneratorPair g(DenseMatrix(n, alpha, to_vector(phi, n * alpha)), DenseMatrix(alpha, n, to_vector(psi, alpha * n)));
    emit(out, {CauchyProblem{std::move(g), std::move(nodes)}});
  });
}

ss_status ss_problem_adversarial(size_t n, double delta, ss_problem** out) {
  return guarded([&] {
    require_non_null(out, "out");
    emit(out, {adversarial_toeplitz(AdversarialSpec(n, delta))});
  });
}

ss_status ss_problem_cancellation(size_t n, double f_norm, uint64_t seed, ss_problem** out) {
  return guarded([&] {
    require_non_null(out, "out");
    emit(out, {cancellation_cauchy(n, f_norm, seed)});
  });
}

ss_status ss_problem_random_toeplitz(size_t n, uint64_t seed, ss_problem** out) {
  return guarded([&] {
    require_non_null(out, "out");
    emit(out, {random_toeplitz(n, seed)});
  });
}

ss_status ss_problem_random_cauchy(size_t n, size_t alpha, uint64_t seed, ss_problem** out) {
  return guarded([&] {
    require_non_null(out, "out");
    emit(out, {random_cauchy_type(n, alpha, seed)});
  });
}

void ss_problem_free(ss_problem* p) { delete p; }

size_t ss_problem_order(const ss_problem* p) { return p ? order(*p) : 0; }

int ss_problem_is_toeplitz(const ss_problem* p) {
  return p && std::holds_alternative<ToeplitzCoeffs>(p->data) ? 1 : 0;
}

ss_status ss_problem_matrix(const ss_problem* p, ss_complex* out) {
  return guarded([&] {
    require_non_null(p, "problem");
    require_non_null(out, "out");
    const DenseMatrix m = problem_matrix(*p);
    write_vector(m.entries(), out);
  });
}

ss_status ss_problem_v_min(const ss_problem* p, double* out) {
  return guarded([&] {
    require_non_null(p, "problem");
    require_non_null(out, "out");
    GeneratorPair g;
    if (const auto* c = std::get_if<ToeplitzCoeffs>(&p->data)) {
      g = to_cauchy_generators(toeplitz_generators(*c), c->size()).first;
    } else {
      g = std::get<CauchyProblem>(p->data).generators;
    }
    *out = v_matrix_min(v_matrix(g));
  });
}

ss_status ss_factor(const ss_problem* p, ss_pivot strategy, ss_factorization** out) {
  return guarded([&] {
    require_non_null(p, "problem");
    require_non_null(out, "out");
    const PivotStrategy s = to_strategy(strategy);
    if (const auto* c = std::get_if<ToeplitzCoeffs>(&p->data)) {
      *out = new ss_factorization{*p, toeplitz_factor(*c, s)};
    } else {
      const auto& cp = std::get<CauchyProblem>(p->data);
      *out = new ss_factorization{*p, gko_factor(cp.generators, cp.nodes, s)};
    }
  });
}

void ss_factorization_free(ss_factorization* f) { delete f; }

size_t ss_factorization_order(const ss_factorization* f) { return f ? order(f->problem) : 0; }

namespace {

const GKOFactorization& inner(const ss_factorization& f) {
  if (const auto* t = std::get_if<ToeplitzFactorization>(&f.factors)) return t->inner;
  return std::get<GKOFactorization>(f.factors);
}

const CauchyNodes& nodes_of(const ss_factorization& f) {
  if (const auto* t = std::get_if<ToeplitzFactorization>(&f.factors)) return t->nodes;
  return std::get<CauchyProblem>(f.problem.data).nodes;
}

}  // namespace

ss_status ss_factorization_factors(const ss_factorization* f, ss_complex* L, ss_complex* U, size_t* row_perm,
                                   size_t* col_perm) {
  return guarded([&] {
    require_non_null(f, "factorization");
    const GKOFactorization& g = inner(*f);
    if (L) write_vector(g.L.entries(), L);
    if (U) write_vector(g.U.entries(), U);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (row_perm) row_perm[i] = g.row_perm[i];
      if (col_perm) col_perm[i] = g.col_perm[i];
    }
  });
}

ss_status ss_solve(const ss_factorization* f, const ss_complex* b, ss_complex* x) {
  return guarded([&] {
    require_non_null(f, "factorization");
    require_non_null(x, "x");
    const std::size_t n = order(f->problem);
    const CVector rhs = to_vector(b, n);
    CVector sol;
    if (const auto* t = std::get_if<ToeplitzFactorization>(&f->factors)) {
      sol = toeplitz_solve(*t, rhs);
    } else {
      sol = solve_with_factors(std::get<GKOFactorization>(f->factors), rhs);
    }
    write_vector(sol, x);
  });
}

ss_status ss_growth(const ss_factorization* f, ss_growth_report* out) {
  return guarded([&] {
    require_non_null(f, "factorization");
    require_non_null(out, "out");
    const GrowthReport r = growth_report(inner(*f), nodes_of(*f));
    *out = {r.g1, r.g2, r.g3, r.v_kk_norm, r.hatL_ratio, r.hatU_ratio, r.b_max, r.b_min,
            r.bound_cauchy, r.bound_toeplitz, r.g2_computed ? 1 : 0, r.degenerate ? 1 : 0};
  });
}

ss_status ss_backward_error(const ss_factorization* f, ss_error_report* out) {
  return guarded([&] {
    require_non_null(f, "factorization");
    require_non_null(out, "out");
    if (const auto* t = std::get_if<ToeplitzFactorization>(&f->factors)) {
      fill(backward_error_toeplitz(std::get<ToeplitzCoeffs>(f->problem.data), *t), out);
    } else {
      const auto& cp = std::get<CauchyProblem>(f->problem.data);
      fill(backward_error_cauchy(cp.generators, cp.nodes, std::get<GKOFactorization>(f->factors)), out);
    }
  });
}

ss_status ss_solve_quality(const ss_problem* p, const ss_complex* b, const ss_complex* x, ss_error_report* out) {
  return guarded([&] {
    require_non_null(p, "problem");
    require_non_null(out, "out");
    const std::size_t n = order(*p);
    fill(solve_quality(problem_matrix(*p), to_vector(b, n), to_vector(x, n)), out);
  });
}

ss_status ss_sweep_run(const ss_sweep_config* config, ss_sweep** out) {
  return guarded([&] {
    require_non_null(config, "config");
    require_non_null(out, "out");
    SweepConfig c;
    c.n = config->n;
    if (config->num_exponents > 0) {
      require_non_null(config->delta_exponents, "delta_exponents");
      c.delta_exponents.assign(config->delta_exponents, config->delta_exponents + config->num_exponents);
    }
    if (config->num_strategies > 0) {
      require_non_null(config->strategies, "strategies");
      c.strategies.clear();
      for (std::size_t i = 0; i < config->num_strategies; ++i) c.strategies.push_back(to_strategy(config->strategies[i]));
    }
    c.rhs = config->rhs_random ? RhsKind::random : RhsKind::ones;
    c.seed = config->seed;
    c.slope_min_exponent = config->slope_min_exponent;
    c.slope_max_exponent = config->slope_max_exponent;
    auto* s = new ss_sweep{run_sweep(c), {}};
    s->csv = to_csv(s->result);
    *out = s;
  });
}

void ss_sweep_free(ss_sweep* s) { delete s; }

size_t ss_sweep_record_count(const ss_sweep* s) { return s ? s->result.records.size() : 0; }

ss_status ss_sweep_get_record(const ss_sweep* s, size_t i, ss_sweep_record* out) {
  return guarded([&] {
    require_non_null(s, "sweep");
    require_non_null(out, "out");
    if (i >= s->result.records.size()) throw DimensionError("record index out of range");
    const SweepRecord& r = s->result.records[i];
    *out = {r.delta, r.exponent, to_pivot(r.strategy), r.ok ? 1 : 0, r.forward_err, r.residual, r.cond,
            r.g1, r.g2, r.g3, r.bmax_over_bmin, r.backward_err, r.max_imag};
  });
}

const char* ss_sweep_record_error(const ss_sweep* s, size_t i) {
  if (!s || i >= s->result.records.size()) return "";
  return s->result.records[i].error.c_str();
}

ss_status ss_sweep_slopes(const ss_sweep* s, ss_pivot strategy, double* forward_err_slope, double* residual_slope,
                          size_t* points) {
  return guarded([&] {
    require_non_null(s, "sweep");
    const PivotStrategy want = to_strategy(strategy);
    for (const auto& sl : s->result.slopes) {
      if (sl.strategy != want) continue;
      if (forward_err_slope) *forward_err_slope = sl.forward_err_slope.value_or(kNaN);
      if (residual_slope) *residual_slope = sl.residual_slope.value_or(kNaN);
      if (points) *points = sl.points;
      return;
    }
    throw DimensionError("strategy not part of this sweep");
  });
}

const char* ss_sweep_csv(const ss_sweep* s) { return s ? s->csv.c_str() : ""; }

}  // extern "C"
