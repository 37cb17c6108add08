#include "phonograd/report.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace phonograd;

namespace {

bool has_warning(const SensitivityReport& r, const std::string& code) {
  for (const auto& w : r.warnings)
    if (w.code == code) return true;
  return false;
}

}  // namespace

TEST(Report, EarthPresets) {
  const auto r6 = run_report(preset("earth-1e6"));
  EXPECT_REL(*r6.bound.delta_rel, oracle::kEarth1000000DeltaRel, 1e-12);
  EXPECT_REL(r6.bound.delta_abs.value(), oracle::kEarth1000000DeltaAbs, 1e-12);
  EXPECT_REL(r6.force.gal, oracle::kEarth1000000ForceGal2r, 1e-12);
  EXPECT_REL(r6.force.baseline_length.value(), 2.0 * oracle::kEarth1000000RTf, 1e-13);
  EXPECT_EQ(r6.budget.limiting_factor, LimitingFactor::kRequested);
  EXPECT_TRUE(r6.warnings.empty());
  EXPECT_FALSE(r6.pair.has_value());

  const auto r8 = run_report(preset("earth-1e8"));
  EXPECT_REL(*r8.bound.delta_rel, oracle::kEarth100000000DeltaRel, 1e-12);
  EXPECT_REL(r8.force.gal, oracle::kEarth100000000ForceGal2r, 1e-12);
}

TEST(Report, SpherePresets) {
  const auto r6 = run_report(preset("sphere20mg-1e6"));
  EXPECT_REL(*r6.bound.delta_rel, oracle::kSphere1000000DeltaRel, 1e-12);
  EXPECT_REL(r6.force.gal, oracle::kSphere1000000ForceGal2r, 1e-12);
  const auto r8 = run_report(preset("sphere20mg-1e8"));
  EXPECT_REL(*r8.bound.delta_rel, oracle::kSphere100000000DeltaRel, 1e-12);
  EXPECT_REL(r8.profile.radius.value(), oracle::kSphere100000000RTf, 1e-13);
}

TEST(Report, BudgetFeedsTheBound) {
  const auto r = run_report(with_overrides(preset("earth-1e6"), {"t_requested=1000"}));
  EXPECT_EQ(r.budget.limiting_factor, LimitingFactor::kDamping);
  EXPECT_EQ(r.bound.t, r.budget.t_granted);
  EXPECT_REL(*r.bound.delta_rel, oracle::kEarth1000000DeltaRel * 100.0 / (0.1 * oracle::kEarth10000001Gamma), 1e-12);
}

TEST(Report, ZeroGradientSource) {
  const auto r = run_report(with_overrides(preset("earth-1e6"), {"source.M=0"}));
  EXPECT_FALSE(r.bound.delta_rel.has_value());
  EXPECT_GT(r.bound.delta_abs.value(), 0.0);
  EXPECT_TRUE(has_warning(r, "zero_gradient"));
  EXPECT_EQ(r.trap.lambda, 1.0);
}

TEST(Report, Warnings) {
  EXPECT_TRUE(has_warning(run_report(with_overrides(preset("earth-1e6"), {"condensate.N_a=2e5"})), "tf_marginal"));
  EXPECT_TRUE(has_warning(run_report(with_overrides(preset("earth-1e6"), {"condensate.N_a=2e4"})), "tf_invalid"));
  EXPECT_TRUE(has_warning(run_report(with_overrides(preset("earth-1e6"), {"condensate.T=1e-9"})),
                          "temperature_above_mu"));
  EXPECT_TRUE(has_warning(run_report(with_overrides(preset("sphere20mg-1e6"), {"source.R=7e-4"})),
                          "sphere_proximity"));
  EXPECT_TRUE(has_warning(run_report(with_overrides(preset("earth-1e6"), {"mode.l=1", "mode.branch=l_minus_one"})),
                          "dipole_mode"));
  const auto strong = run_report(with_overrides(preset("earth-1e6"), {"source={kind: direct, direct_epsilon: 0.3}"}));
  EXPECT_TRUE(has_warning(strong, "first_order_inaccurate"));
}

TEST(Report, WarningsAreNotDuplicated) {
  const auto r = run_report(with_overrides(preset("sphere20mg-1e6"), {"source.R=7e-4", "condensate.N_a=2e5"}));
  for (std::size_t i = 0; i < r.warnings.size(); ++i)
    for (std::size_t j = i + 1; j < r.warnings.size(); ++j) EXPECT_NE(r.warnings[i], r.warnings[j]);
  EXPECT_EQ(r.warnings.size(), 3u);  // proximity, tf_marginal, temperature_above_mu
}

TEST(Report, PairMode) {
  const auto r = run_report(with_overrides(preset("earth-1e8"), {"mode.kind=pair"}));
  ASSERT_TRUE(r.pair.has_value());
  EXPECT_REL(r.pair->delta_omega_exact.value(), oracle::kEarthDw3Exact, 1e-12);
  EXPECT_REL(r.bound.phase_signal, 100.0 * oracle::kEarthDw3Exact, 1e-12);
}

TEST(Report, ErrorsNameTheStage) {
  auto expect_stage = [](const std::vector<std::string>& ov, ErrorCode code, const std::string& stage) {
    try {
      run_report(with_overrides(preset("earth-1e6"), ov));
      ADD_FAILURE() << "no error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code) << e.what();
      EXPECT_EQ(e.stage(), stage) << e.what();
    }
  };
  expect_stage({"source.R=0"}, ErrorCode::kSingularGeometry, "source");
  expect_stage({"source={kind: direct, direct_epsilon: 10}"}, ErrorCode::kTrapUnstable, "trap");
  expect_stage({"condensate.N_a=0.5"}, ErrorCode::kInvalidInput, "condensate");
  expect_stage({"mode.l=0"}, ErrorCode::kInvalidMode, "modes");
  expect_stage({"budget.safety_fraction=2"}, ErrorCode::kInvalidInput, "budget");
  expect_stage({"mode.branch=l_minus_one"}, ErrorCode::kGradientBlindMode, "bound");
  expect_stage({"baseline_length=1e-3", "scheme={kind: su2}"}, ErrorCode::kIncompleteScheme, "bound");
}

TEST(Comparison, EarthPresetBaselines) {
  const auto c = run_comparison(preset("earth-1e8"));
  ASSERT_EQ(c.table.rows.size(), 3u);
  EXPECT_EQ(c.table.rows[0].summary.label, "phononic");
  EXPECT_EQ(c.table.rows[1].summary.label, "free-fall");
  EXPECT_EQ(c.table.rows[2].summary.label, "trapped");
  EXPECT_REL(c.free_fall.delta_rel, oracle::kJointOptimumDeltaRel, 1e-12);
  EXPECT_REL(c.trapped.delta_rel, oracle::kTrappedDeltaRel, 1e-12);
  EXPECT_REL(c.table.rows[2].phononic_over_row, oracle::kEarth100000000DeltaRel / oracle::kTrappedDeltaRel, 1e-12);
}

TEST(Comparison, SharesNumbersWithTheScenario) {
  const auto c = run_comparison(with_overrides(preset("earth-1e8"), {"baselines.free_fall.n_kick=18"}));
  EXPECT_REL(c.free_fall.delta_rel, oracle::kN18TGeomDeltaRel, 1e-12);
  bool warned = false;
  for (const auto& w : c.report.warnings) warned |= w.code == "free_fall";
  EXPECT_TRUE(warned);
  const auto su2 = run_comparison(with_overrides(preset("earth-1e8"), {"scheme={kind: su2, N_bar: 15000}"}));
  EXPECT_REL(su2.free_fall.squeezed_number, 1e4, 1e-15);
  EXPECT_ERROR_CODE(run_comparison(with_overrides(preset("earth-1e8"), {"source.M=0"})), ErrorCode::kZeroGradient);
}
