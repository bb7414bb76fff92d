// Command-line front end. Links only against the C interface.
#include "structsolve/structsolve.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitSingular = 3;
constexpr int kExitCollision = 4;
constexpr int kExitInternal = 5;

// Thrown for malformed input files; maps to the parse exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries a failing library status out of a subcommand.
struct LibraryError : std::runtime_error {
  ss_status status;
  LibraryError(ss_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(ss_status s, const char* context) {
  if (s != SS_OK) throw LibraryError(s, std::string(context) + ": " + ss_last_error());
}

int exit_code_for(ss_status s) {
  switch (s) {
    case SS_ERR_PARSE: return kExitParse;
    case SS_ERR_SINGULAR: return kExitSingular;
    case SS_ERR_NODE_COLLISION: return kExitCollision;
    case SS_ERR_INVALID_ARGUMENT: return kExitUsage;
    default: return kExitInternal;
  }
}

struct ProblemDeleter {
  void operator()(ss_problem* p) const { ss_problem_free(p); }
};
struct FactorizationDeleter {
  void operator()(ss_factorization* f) const { ss_factorization_free(f); }
};
struct SweepDeleter {
  void operator()(ss_sweep* s) const { ss_sweep_free(s); }
};
using ProblemPtr = std::unique_ptr<ss_problem, ProblemDeleter>;
using FactorizationPtr = std::unique_ptr<ss_factorization, FactorizationDeleter>;
using SweepPtr = std::unique_ptr<ss_sweep, SweepDeleter>;

// ---------------------------------------------------------------------------
// Input parsing

ss_complex parse_complex(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw InputError(where + ": expected a number or an [re, im] pair");
}

std::vector<ss_complex> parse_complex_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  std::vector<ss_complex> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_complex(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

// Row-major flattening of a rows x cols nested array.
std::vector<ss_complex> parse_complex_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array() || v.size() != rows) {
    throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  }
  std::vector<ss_complex> out;
  out.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto row = parse_complex_list(v[i], where + "[" + std::to_string(i) + "]");
    if (row.size() != cols) throw InputError(where + ": ragged rows");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

struct SystemFile {
  ProblemPtr problem;
  std::optional<std::vector<ss_complex>> b;
  bool real_toeplitz = false;
};

SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw InputError("top level must be an object");

  SystemFile sys;
  ss_problem* raw = nullptr;
  if (doc.contains("toeplitz")) {
    const json& t = doc["toeplitz"];
    if (!t.is_object() || !t.contains("n") || !t["n"].is_number_integer() || !t.contains("a")) {
      throw InputError("toeplitz: needs integer \"n\" and array \"a\"");
    }
    const long long n = t["n"].get<long long>();
    if (n < 1) throw InputError("toeplitz.n must be positive");
    auto a = parse_complex_list(t["a"], "toeplitz.a");
    if (a.size() != static_cast<std::size_t>(2 * n - 1)) throw InputError("toeplitz.a must have 2n-1 entries");
    sys.real_toeplitz = true;
    for (const auto& c : a) sys.real_toeplitz = sys.real_toeplitz && c.im == 0.0;
    check(ss_problem_toeplitz(static_cast<std::size_t>(n), a.data(), &raw), "toeplitz");
  } else if (doc.contains("cauchy")) {
    const json& c = doc["cauchy"];
    for (const char* key : {"t", "s", "phi", "psi"}) {
      if (!c.is_object() || !c.contains(key)) throw InputError(std::string("cauchy: missing \"") + key + "\"");
    }
    auto t = parse_complex_list(c["t"], "cauchy.t");
    auto s = parse_complex_list(c["s"], "cauchy.s");
    const std::size_t n = t.size();
    if (n == 0 || s.size() != n) throw InputError("cauchy: t and s must be non-empty and of equal length");
    if (!c["phi"].is_array() || c["phi"].size() != n || !c["phi"][0].is_array()) {
      throw InputError("cauchy.phi must be an n x alpha array");
    }
    const std::size_t alpha = c["phi"][0].size();
    if (alpha == 0) throw InputError("cauchy.phi must have at least one column");
    auto phi = parse_complex_matrix(c["phi"], n, alpha, "cauchy.phi");
    auto psi = parse_complex_matrix(c["psi"], alpha, n, "cauchy.psi");
    check(ss_problem_cauchy(n, alpha, t.data(), s.data(), phi.data(), psi.data(), &raw), "cauchy");
  } else {
    throw InputError("expected a \"toeplitz\" or \"cauchy\" object");
  }
  sys.problem.reset(raw);

  if (doc.contains("b")) {
    auto b = parse_complex_list(doc["b"], "b");
    if (b.size() != ss_problem_order(sys.problem.get())) throw InputError("b has the wrong length");
    sys.b = std::move(b);
  }
  return sys;
}

// ---------------------------------------------------------------------------
// Output helpers

json to_json(const ss_complex& c) { return json::array({c.re, c.im}); }

json to_json(const std::vector<ss_complex>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

json matrix_json(const std::vector<ss_complex>& m, std::size_t n) {
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_json(m[i * n + j]));
    out.push_back(row);
  }
  return out;
}

// NaN is not representable in JSON; emit null instead.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const ss_error_report& r) {
  return json{{"abs_err", number_or_null(r.abs_err)},
              {"rel_err", number_or_null(r.rel_err)},
              {"residual", number_or_null(r.residual)},
              {"forward_err", number_or_null(r.forward_err)}};
}

json to_json(const ss_growth_report& g) {
  return json{{"g1", number_or_null(g.g1)},
              {"g2", number_or_null(g.g2)},
              {"g3", number_or_null(g.g3)},
              {"v_kk_norm", number_or_null(g.v_kk_norm)},
              {"hat_l_ratio", number_or_null(g.hat_l_ratio)},
              {"hat_u_ratio", number_or_null(g.hat_u_ratio)},
              {"b_max", number_or_null(g.b_max)},
              {"b_min", number_or_null(g.b_min)},
              {"bmax_over_bmin", number_or_null(g.b_max / g.b_min)},
              {"bound_cauchy", number_or_null(g.bound_cauchy)},
              {"bound_toeplitz", number_or_null(g.bound_toeplitz)},
              {"g2_computed", g.g2_computed != 0},
              {"degenerate", g.degenerate != 0}};
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

ss_pivot parse_strategy(const std::string& name) {
  ss_pivot p;
  if (ss_pivot_parse(name.c_str(), &p) != SS_OK) throw CLI::ValidationError("--strategy", "unknown strategy '" + name + "'");
  return p;
}

// ---------------------------------------------------------------------------
// Subcommands

struct SystemOptions {
  std::string input;
  std::string strategy = "partial";
  std::string out;
};

int cmd_solve(const SystemOptions& opt) {
  SystemFile sys = load_system(opt.input);
  const std::size_t n = ss_problem_order(sys.problem.get());
  std::vector<ss_complex> b = sys.b.value_or(std::vector<ss_complex>(n, ss_complex{1.0, 0.0}));

  ss_factorization* raw = nullptr;
  check(ss_factor(sys.problem.get(), parse_strategy(opt.strategy), &raw), "factor");
  FactorizationPtr f(raw);
  std::vector<ss_complex> x(n);
  check(ss_solve(f.get(), b.data(), x.data()), "solve");
  ss_error_report factor_err{};
  check(ss_backward_error(f.get(), &factor_err), "backward error");
  ss_error_report quality{};
  check(ss_solve_quality(sys.problem.get(), b.data(), x.data(), &quality), "solve quality");

  json report{{"n", n},
              {"strategy", ss_pivot_name(parse_strategy(opt.strategy))},
              {"x", to_json(x)},
              {"factorization_error", to_json(factor_err)},
              {"solution_error", to_json(quality)}};
  if (sys.real_toeplitz) {
    bool real_b = true;
    for (const auto& c : b) real_b = real_b && c.im == 0.0;
    if (real_b) {
      double max_imag = 0.0;
      for (const auto& c : x) max_imag = std::max(max_imag, std::abs(c.im));
      report["max_imag"] = max_imag;
    }
  }
  write_output(report.dump(2) + "\n", opt.out);
  return 0;
}

int cmd_factor(const SystemOptions& opt) {
  SystemFile sys = load_system(opt.input);
  const std::size_t n = ss_problem_order(sys.problem.get());
  ss_factorization* raw = nullptr;
  check(ss_factor(sys.problem.get(), parse_strategy(opt.strategy), &raw), "factor");
  FactorizationPtr f(raw);
  std::vector<ss_complex> L(n * n), U(n * n);
  std::vector<std::size_t> rp(n), cp(n);
  check(ss_factorization_factors(f.get(), L.data(), U.data(), rp.data(), cp.data()), "factors");
  ss_error_report err{};
  check(ss_backward_error(f.get(), &err), "backward error");
  json report{{"n", n},
              {"strategy", ss_pivot_name(parse_strategy(opt.strategy))},
              {"row_perm", rp},
              {"col_perm", cp},
              {"L", matrix_json(L, n)},
              {"U", matrix_json(U, n)},
              {"backward_error", to_json(err)}};
  write_output(report.dump(2) + "\n", opt.out);
  return 0;
}

int cmd_growth(const SystemOptions& opt) {
  SystemFile sys = load_system(opt.input);
  ss_factorization* raw = nullptr;
  check(ss_factor(sys.problem.get(), parse_strategy(opt.strategy), &raw), "factor");
  FactorizationPtr f(raw);
  ss_growth_report g{};
  check(ss_growth(f.get(), &g), "growth");
  double v_min = 0.0;
  check(ss_problem_v_min(sys.problem.get(), &v_min), "v matrix");
  json report = to_json(g);
  report["strategy"] = ss_pivot_name(parse_strategy(opt.strategy));
  report["v_min"] = number_or_null(v_min);
  write_output(report.dump(2) + "\n", opt.out);
  return 0;
}

struct SweepOptions {
  std::size_t n = 8;
  int exp_min = 2;
  int exp_max = 16;
  int slope_min = 2;
  int slope_max = 6;
  std::vector<std::string> strategies;
  std::string rhs = "ones";
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("STRUCTSOLVE_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("STRUCTSOLVE_SEED", std::string("not an unsigned integer: '") + env + "'");
  }
  return 0;
}

int cmd_sweep(const SweepOptions& opt) {
  if (opt.exp_min < 1 || opt.exp_max < opt.exp_min) {
    throw CLI::ValidationError("--delta-exp-min/max", "need 1 <= min <= max");
  }
  std::vector<int> exponents;
  for (int k = opt.exp_min; k <= opt.exp_max; ++k) exponents.push_back(k);
  std::vector<ss_pivot> strategies;
  for (const auto& s : opt.strategies) strategies.push_back(parse_strategy(s));
  if (strategies.empty()) strategies = {SS_PIVOT_PARTIAL, SS_PIVOT_ROW1COL1};

  ss_sweep_config config{};
  config.n = opt.n;
  config.delta_exponents = exponents.data();
  config.num_exponents = exponents.size();
  config.strategies = strategies.data();
  config.num_strategies = strategies.size();
  config.rhs_random = opt.rhs == "random" ? 1 : 0;
  config.seed = resolve_seed(opt.seed);
  config.slope_min_exponent = opt.slope_min;
  config.slope_max_exponent = opt.slope_max;

  ss_sweep* raw = nullptr;
  check(ss_sweep_run(&config, &raw), "sweep");
  SweepPtr sweep(raw);

  json summary{{"n", opt.n},
               {"seed", config.seed},
               {"rhs", opt.rhs},
               {"slope_window", {opt.slope_min, opt.slope_max}}};
  json slopes = json::array();
  for (ss_pivot p : strategies) {
    double fwd = 0.0, res = 0.0;
    std::size_t points = 0;
    check(ss_sweep_slopes(sweep.get(), p, &fwd, &res, &points), "slopes");
    slopes.push_back({{"strategy", ss_pivot_name(p)},
                      {"forward_err_slope", number_or_null(fwd)},
                      {"residual_slope", number_or_null(res)},
                      {"points", points}});
  }
  summary["slopes"] = slopes;

  bool all_ok = true;
  json failures = json::array();
  json records = json::array();
  const std::size_t count = ss_sweep_record_count(sweep.get());
  for (std::size_t i = 0; i < count; ++i) {
    ss_sweep_record r{};
    check(ss_sweep_get_record(sweep.get(), i, &r), "record");
    all_ok = all_ok && r.ok;
    if (!r.ok) {
      failures.push_back({{"delta", r.delta}, {"strategy", ss_pivot_name(r.strategy)},
                          {"error", ss_sweep_record_error(sweep.get(), i)}});
    }
    records.push_back({{"delta", r.delta},
                       {"strategy", ss_pivot_name(r.strategy)},
                       {"ok", r.ok != 0},
                       {"forward_err", number_or_null(r.forward_err)},
                       {"residual", number_or_null(r.residual)},
                       {"cond", number_or_null(r.cond)},
                       {"g1", number_or_null(r.g1)},
                       {"g2", number_or_null(r.g2)},
                       {"g3", number_or_null(r.g3)},
                       {"bmax_over_bmin", number_or_null(r.bmax_over_bmin)},
                       {"backward_err", number_or_null(r.backward_err)},
                       {"max_imag", number_or_null(r.max_imag)}});
  }
  summary["records"] = count;
  summary["failed"] = failures;

  if (opt.format == "json") {
    json doc{{"summary", summary}, {"records", records}};
    write_output(doc.dump(2) + "\n", opt.out);
  } else {
    write_output(ss_sweep_csv(sweep.get()), opt.out);
    std::cerr << summary.dump() << "\n";
  }
  return all_ok ? 0 : kExitUsage;
}

void add_system_options(CLI::App* cmd, SystemOptions& opt) {
  cmd->add_option("input", opt.input, "System file (JSON)")->required();
  cmd->add_option("--strategy", opt.strategy, "Pivoting: none, partial or row1col1")->capture_default_str();
  cmd->add_option("--out", opt.out, "Output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured GKO solver for Toeplitz and Cauchy-type systems"};
  app.set_version_flag("--version", std::string(ss_version()));
  app.require_subcommand(1);

  SystemOptions solve_opt, factor_opt, growth_opt;
  add_system_options(app.add_subcommand("solve", "Solve a system file"), solve_opt);
  add_system_options(app.add_subcommand("factor", "Factor a system file and print P, P', L, U"), factor_opt);
  add_system_options(app.add_subcommand("growth", "Report generator growth factors"), growth_opt);

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "Run the adversarial Toeplitz delta sweep");
  sweep->add_option("--n", sweep_opt.n, "Matrix order (even, >= 4)")->capture_default_str();
  sweep->add_option("--delta-exp-min", sweep_opt.exp_min, "Smallest k in delta = 10^-k")->capture_default_str();
  sweep->add_option("--delta-exp-max", sweep_opt.exp_max, "Largest k in delta = 10^-k")->capture_default_str();
  sweep->add_option("--slope-exp-min", sweep_opt.slope_min, "Regression window start")->capture_default_str();
  sweep->add_option("--slope-exp-max", sweep_opt.slope_max, "Regression window end")->capture_default_str();
  sweep->add_option("--strategy", sweep_opt.strategies, "Pivoting strategy; repeat for several (default partial, row1col1)");
  sweep->add_option("--rhs", sweep_opt.rhs, "Right-hand side")->check(CLI::IsMember({"ones", "random"}))->capture_default_str();
  sweep->add_option("--seed", sweep_opt.seed, "Seed for the random right-hand side (default $STRUCTSOLVE_SEED or 0)");
  sweep->add_option("--out", sweep_opt.out, "Output path (default stdout)");
  sweep->add_option("--format", sweep_opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand("solve")) return cmd_solve(solve_opt);
    if (app.got_subcommand("factor")) return cmd_factor(factor_opt);
    if (app.got_subcommand("growth")) return cmd_growth(growth_opt);
    return cmd_sweep(sweep_opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.status);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
