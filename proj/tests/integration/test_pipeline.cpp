// End-to-end runs over the committed scenario and sweep files.

#include <filesystem>

#include "oracle_values.hpp"
#include "phonograd/emit.hpp"
#include "phonograd/report.hpp"
#include "phonograd/sweep.hpp"
#include "test_support.hpp"

using namespace phonograd;

namespace {

std::filesystem::path dir() { return PHONOGRAD_SCENARIO_DIR; }

}  // namespace

TEST(Pipeline, CommittedScenariosMatchPresets) {
  for (const auto& info : preset_catalog()) {
    EXPECT_EQ(load_scenario(dir() / (info.name + ".yaml")), preset(info.name)) << info.name;
  }
}

TEST(Pipeline, EarthReports) {
  const auto small = run_report(load_scenario(dir() / "earth-1e6.yaml"));
  EXPECT_REL(small.profile.radius.value(), oracle::kEarth1000000RTf, 1e-9);
  EXPECT_REL(*small.bound.delta_rel, oracle::kEarth1000000DeltaRel, 1e-9);
  EXPECT_REL(small.force.gal, oracle::kEarth1000000ForceGal2r, 1e-9);
  EXPECT_TRUE(small.warnings.empty());

  const auto large = run_report(load_scenario(dir() / "earth-1e8.yaml"));
  EXPECT_REL(*large.bound.delta_rel, oracle::kEarth100000000DeltaRel, 1e-9);
  EXPECT_REL(1.0 / large.budget.gamma.value(), oracle::kEarth1000000001Gamma, 1e-9);
}

TEST(Pipeline, PairScenario) {
  const auto r = run_report(load_scenario(dir() / "earth-1e8-pair.yaml"));
  ASSERT_TRUE(r.pair.has_value());
  EXPECT_REL(r.pair->delta_omega_exact.value(), oracle::kEarthDw3Exact, 1e-9);
}

TEST(Pipeline, Comparison) {
  const auto c = run_comparison(preset("earth-1e8"));
  ASSERT_EQ(c.table.rows.size(), 3u);
  EXPECT_EQ(c.free_fall.n_kick, 10);
  EXPECT_REL(c.free_fall.delta_rel, oracle::kJointOptimumDeltaRel, 1e-9);
  EXPECT_REL(c.trapped.delta_rel, oracle::kTrappedDeltaRel, 1e-9);
  EXPECT_GT(c.table.rows[0].summary.delta_rel, c.table.rows[1].summary.delta_rel);
}

TEST(Pipeline, SweepFiles) {
  const auto atoms = run_sweep(load_sweep(dir() / "sweeps" / "atom-number.yaml"), 2);
  ASSERT_EQ(atoms.rows.size(), 3u);
  EXPECT_REL(*atoms.rows[1].report->bound.delta_rel, oracle::kEarth100000000DeltaRel, 1e-9);

  const auto ls = run_sweep(load_sweep(dir() / "sweeps" / "mode-pair-l.yaml"), 4);
  const double expected[] = {oracle::kEarthDw2Exact, oracle::kEarthDw3Exact, oracle::kEarthDw4Exact,
                             oracle::kEarthDw5Exact, oracle::kEarthDw6Exact, oracle::kEarthDw7Exact,
                             oracle::kEarthDw8Exact};
  ASSERT_EQ(ls.rows.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    ASSERT_TRUE(ls.rows[i].report) << ls.rows[i].error_message;
    EXPECT_REL(ls.rows[i].report->pair->delta_omega_exact.value(), expected[i], 1e-9);
  }

  const auto distance = run_sweep(load_sweep(dir() / "sweeps" / "sphere-distance.yaml"), 3);
  double previous = INFINITY;
  for (const auto& row : distance.rows) {
    ASSERT_TRUE(row.report) << row.error_message;
    EXPECT_LT(row.report->trap.epsilon_grad.value(), previous);
    previous = row.report->trap.epsilon_grad.value();
  }
  EXPECT_EQ(emit(sweep_table(distance), Format::kCsv).find("sphere_proximity"), std::string::npos);
}
