#include "structsolve/sweep.hpp"
#include "structsolve/oracle.hpp"
#include "structsolve/testgen.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace structsolve;

namespace {

SweepConfig small_config() {
  SweepConfig c;
  c.delta_exponents = {2, 3, 4, 5, 6};
  return c;
}

}  // namespace

TEST(Sweep, CsvHeaderIsFixed) {
  const std::string csv = to_csv(run_sweep(small_config()));
  const std::string first = csv.substr(0, csv.find('\n'));
  EXPECT_EQ(first, "delta,strategy,forward_err,residual,cond,g1,g2,g3,bmax_over_bmin,backward_err");
  EXPECT_EQ(first, kSweepCsvHeader);
}

TEST(Sweep, OneRecordPerDeltaAndStrategyInOrder) {
  const SweepResult r = run_sweep(small_config());
  ASSERT_EQ(r.records.size(), 10u);
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    EXPECT_EQ(r.records[i].exponent, 2 + static_cast<int>(i / 2));
    EXPECT_EQ(r.records[i].strategy, i % 2 == 0 ? PivotStrategy::partial_row : PivotStrategy::row1_col1);
    EXPECT_DOUBLE_EQ(r.records[i].delta, std::pow(10.0, -r.records[i].exponent));
    EXPECT_TRUE(r.records[i].ok) << r.records[i].error;
  }
  EXPECT_TRUE(r.all_ok());
  std::istringstream lines(to_csv(r));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 11);
}

TEST(Sweep, ByteIdenticalAcrossRuns) {
  SweepConfig c = small_config();
  c.rhs = RhsKind::random;
  c.seed = 12345;
  EXPECT_EQ(to_csv(run_sweep(c)), to_csv(run_sweep(c)));
  SweepConfig d = c;
  d.seed = 54321;
  EXPECT_NE(to_csv(run_sweep(c)), to_csv(run_sweep(d)));
}

TEST(Sweep, RecordsAreConsistent) {
  const SweepResult r = run_sweep(small_config());
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.g3, std::max(rec.g1, rec.g2));
    EXPECT_LT(rec.bmax_over_bmin, 16.0 / 3.141592653589793);
    EXPECT_GT(rec.cond, 1.0 / rec.delta);
    // The exact solution is real, so the imaginary part is bounded by the perturbation error.
    const CVector x = dense_solve(dense_toeplitz(adversarial_toeplitz(AdversarialSpec(8, rec.delta))), CVector(8, 1.0));
    EXPECT_LE(rec.max_imag, 10.0 * rec.cond * (rec.backward_err + 8.0 * kEps) * norm2(x));
  }
  // The modified strategy keeps the factorization backward error flat.
  for (const auto& rec : r.records)
    if (rec.strategy == PivotStrategy::row1_col1) EXPECT_LT(rec.backward_err, 1e-14);
}

TEST(Sweep, SlopesUseTheWindow) {
  SweepConfig c = small_config();
  c.delta_exponents = {2, 3, 4, 5, 6, 7, 8};
  const SweepResult r = run_sweep(c);
  ASSERT_EQ(r.slopes.size(), 2u);
  for (const auto& s : r.slopes) {
    EXPECT_EQ(s.points, 5u);
    ASSERT_TRUE(s.forward_err_slope.has_value());
    ASSERT_TRUE(s.residual_slope.has_value());
    std::vector<double> k, lr;
    for (const auto& rec : r.records)
      if (rec.strategy == s.strategy && rec.exponent <= 6) {
        k.push_back(rec.exponent);
        lr.push_back(std::log10(rec.residual));
      }
    EXPECT_NEAR(*s.residual_slope, *least_squares_slope(k, lr), 1e-12);
  }
}

TEST(Sweep, FailedRecordsDoNotStopTheRun) {
  SweepConfig c;
  c.delta_exponents = {4, 16};
  c.strategies = {PivotStrategy::row1_col1};
  const SweepResult r = run_sweep(c);
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_TRUE(r.records[0].ok);
  // 1 + 5e-17 rounds away, so the matrix is singular in floating point.
  EXPECT_FALSE(r.records[1].ok);
  EXPECT_FALSE(r.records[1].error.empty());
  EXPECT_FALSE(r.all_ok());
  EXPECT_NE(to_csv(r).find("nan"), std::string::npos);
}

TEST(Sweep, ValidateRejectsBadConfigs) {
  SweepConfig c;
  c.n = 7;
  EXPECT_THROW(validate(c), DimensionError);
  c = SweepConfig{};
  c.delta_exponents = {0};
  EXPECT_THROW(validate(c), DimensionError);
  c = SweepConfig{};
  c.strategies.clear();
  EXPECT_THROW(validate(c), DimensionError);
  EXPECT_NO_THROW(validate(SweepConfig{}));
}

TEST(LeastSquaresSlope, ExactOnLines) {
  const std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
  EXPECT_DOUBLE_EQ(*least_squares_slope(x, y), 2.0);
  const std::vector<double> one{1.0};
  EXPECT_FALSE(least_squares_slope(one, one).has_value());
}
