#include "phonograd/metrology.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace phonograd;

namespace {
PerturbedTrap earth_trap() { return perturb_trap(TrapConfig{from_hz(0.2)}, GravitySource::earth()); }
}  // namespace

TEST(Qfi, SchemeFormulas) {
  EXPECT_DOUBLE_EQ(qfi(MetrologyScheme::single_mode(1e3)), 8.0 * 1e3 * 1001.0);
  MetrologyScheme su2{.kind = SchemeKind::kSU2, .total_number = 1500.0};
  EXPECT_DOUBLE_EQ(qfi(su2), 8.0 * 1500.0 * 1502.0 / 3.0);
  MetrologyScheme su11{.kind = SchemeKind::kSU11, .total_number = 1500.0};
  EXPECT_DOUBLE_EQ(qfi(su11), 4.0 * 1500.0 * 1502.0 / 3.0);
  MetrologyScheme pumped{.kind = SchemeKind::kPumpedUpSU11, .squeezing = 4.0, .pump_number = 1e6};
  EXPECT_REL(qfi(pumped), oracle::kPumpedNAlpha1e6R4, 1e-14);
}

TEST(Qfi, SqueezingAndNumberAgree) {
  MetrologyScheme by_r{.kind = SchemeKind::kSingleModeSqueezed, .squeezing = 2.0};
  const double nr = std::pow(std::sinh(2.0), 2);
  EXPECT_REL(by_r.resolved_squeezed_number(), nr, 1e-15);
  EXPECT_REL(qfi(by_r), qfi(MetrologyScheme::single_mode(nr)), 1e-14);
  EXPECT_REL(MetrologyScheme::single_mode(nr).resolved_squeezing(), 2.0, 1e-14);

  MetrologyScheme both{.kind = SchemeKind::kSingleModeSqueezed, .squeezed_number = nr, .squeezing = 2.0};
  EXPECT_NO_THROW(validate(both));
  both.squeezed_number = nr * 1.001;
  EXPECT_ERROR_CODE(validate(both), ErrorCode::kInconsistentScheme);
}

TEST(Qfi, IncompleteSchemes) {
  EXPECT_ERROR_CODE(qfi(MetrologyScheme{.kind = SchemeKind::kSingleModeSqueezed}), ErrorCode::kIncompleteScheme);
  EXPECT_ERROR_CODE(qfi(MetrologyScheme{.kind = SchemeKind::kSU2}), ErrorCode::kIncompleteScheme);
  EXPECT_ERROR_CODE(qfi(MetrologyScheme{.kind = SchemeKind::kPumpedUpSU11, .squeezing = 1.0}),
                    ErrorCode::kIncompleteScheme);
  EXPECT_ERROR_CODE(qfi(MetrologyScheme{.kind = SchemeKind::kPumpedUpSU11, .pump_number = 10.0}),
                    ErrorCode::kIncompleteScheme);
  EXPECT_ERROR_CODE(validate(MetrologyScheme::single_mode(-1.0)), ErrorCode::kInvalidInput);
}

TEST(SchemeComparison, Ratios) {
  const auto su2 = scheme_comparison_factor(SchemeKind::kSU2, 1e4);
  EXPECT_REL(su2.computed_ratio, oracle::kRatioSu21e4, 1e-13);
  EXPECT_FALSE(su2.discrepancy_flagged);
  const auto su11 = scheme_comparison_factor(SchemeKind::kSU11, 1e4);
  EXPECT_REL(su11.computed_ratio, oracle::kRatioSu111e4, 1e-13);
  EXPECT_FALSE(su11.discrepancy_flagged);
  const auto pumped = scheme_comparison_factor(SchemeKind::kPumpedUpSU11, 1e4);
  EXPECT_REL(pumped.computed_ratio, oracle::kRatioPumped1e4, 1e-12);
  EXPECT_DOUBLE_EQ(pumped.quoted_ratio, 1.0 / 16.0);
  EXPECT_TRUE(pumped.discrepancy_flagged);
  EXPECT_DOUBLE_EQ(scheme_comparison_factor(SchemeKind::kSingleModeSqueezed, 1e4).computed_ratio, 1.0);
}

TEST(SchemeComparison, AsymptoticRegimeOnly) {
  EXPECT_ERROR_CODE(scheme_comparison_factor(SchemeKind::kSU2, 99.0), ErrorCode::kOutsideAsymptoticRegime);
  EXPECT_NO_THROW(scheme_comparison_factor(SchemeKind::kSU2, 100.0));
}

TEST(ErrorBound, EarthPresetsMatchOracle) {
  const auto t = earth_trap();
  const auto mode = mode_frequency(3, ModeBranch::kMaxM, t);
  const auto b6 = gradient_error_bound(t, mode, MetrologyScheme::single_mode(1e3), Time{100.0}, 10000);
  ASSERT_TRUE(b6.delta_rel.has_value());
  EXPECT_REL(*b6.delta_rel, oracle::kEarth1000000DeltaRel, 1e-12);
  EXPECT_REL(b6.delta_abs.value(), oracle::kEarth1000000DeltaAbs, 1e-12);
  EXPECT_REL(*b6.delta_rel_per_shot, 100.0 * oracle::kEarth1000000DeltaRel, 1e-12);
  const auto b8 = gradient_error_bound(t, mode, MetrologyScheme::single_mode(1e4), Time{100.0}, 10000);
  EXPECT_REL(*b8.delta_rel, oracle::kEarth100000000DeltaRel, 1e-12);
  EXPECT_REL(b8.delta_abs.value(), oracle::kEarth100000000DeltaAbs, 1e-12);
}

TEST(ErrorBound, ClosedFormSingleMode) {
  // delta = 2 w0^2 / (alpha eps) / (sqrt(l) w0 t sqrt(2 N_rep N_r (N_r + 1)))
  const auto t = earth_trap();
  for (int l : {2, 4, 7}) {
    const auto mode = mode_frequency(l, ModeBranch::kLMinusOne, t);
    const auto b = gradient_error_bound(t, mode, MetrologyScheme::single_mode(500.0), Time{30.0}, 200);
    const double w0 = t.omega0.value();
    const double expected = 2.0 * w0 * w0 / (mode.alpha * t.epsilon_grad.value()) /
                            (std::sqrt(l) * w0 * 30.0 * std::sqrt(2.0 * 200 * 500.0 * 501.0));
    EXPECT_REL(*b.delta_rel, expected, 1e-12) << "l=" << l;
  }
}

TEST(ErrorBound, PairUsesExactDifference) {
  const auto t = earth_trap();
  const auto pair = mode_pair_difference(3, t);
  const auto b = gradient_error_bound(t, pair, MetrologyScheme::single_mode(1e4), Time{100.0}, 10000);
  const double dphi = 1.0 / std::sqrt(1e4 * 8.0 * 1e4 * 10001.0);
  EXPECT_REL(b.phase_signal, 100.0 * oracle::kEarthDw3Exact, 1e-12);
  EXPECT_REL(*b.delta_rel, dphi / (100.0 * oracle::kEarthDw3Exact), 1e-12);
}

TEST(ErrorBound, ZeroGradientGivesAbsoluteOnly) {
  const auto t = perturb_trap(TrapConfig{from_hz(0.2)}, GravitySource::point(Mass{0.0}, Length{1.0}));
  const auto mode = mode_frequency(3, ModeBranch::kMaxM, t);
  const auto b = gradient_error_bound(t, mode, MetrologyScheme::single_mode(1e3), Time{100.0}, 10000);
  EXPECT_FALSE(b.delta_rel.has_value());
  EXPECT_FALSE(b.delta_rel_per_shot.has_value());
  EXPECT_DOUBLE_EQ(b.phase_signal, 0.0);
  // Same absolute sensitivity as at the Earth gradient, to first order.
  EXPECT_REL(b.delta_abs.value(), oracle::kEarth1000000DeltaAbs, 1e-12);
}

TEST(ErrorBound, Errors) {
  const auto t = earth_trap();
  const auto blind = mode_frequency(3, ModeBranch::kLMinusOne, t);
  const auto scheme = MetrologyScheme::single_mode(1e3);
  EXPECT_ERROR_CODE(gradient_error_bound(t, blind, scheme, Time{100.0}, 1), ErrorCode::kGradientBlindMode);
  const auto mode = mode_frequency(3, ModeBranch::kMaxM, t);
  EXPECT_ERROR_CODE(gradient_error_bound(t, mode, scheme, Time{0.0}, 1), ErrorCode::kInvalidInput);
  EXPECT_ERROR_CODE(gradient_error_bound(t, mode, scheme, Time{1.0}, 0), ErrorCode::kInvalidInput);
}

TEST(ForceEquivalent, EarthPresets) {
  const auto t = earth_trap();
  const auto mode = mode_frequency(3, ModeBranch::kMaxM, t);
  const auto b6 = gradient_error_bound(t, mode, MetrologyScheme::single_mode(1e3), Time{100.0}, 10000);
  const auto f6 = differential_force_equivalent(b6, Length{2.0 * oracle::kEarth1000000RTf});
  EXPECT_REL(f6.gal, oracle::kEarth1000000ForceGal2r, 1e-12);
  EXPECT_REL(f6.gal_per_shot, 100.0 * oracle::kEarth1000000ForceGal2r, 1e-12);
  EXPECT_REL(f6.standard_g, f6.acceleration.value() / 9.80665, 1e-15);
  EXPECT_ERROR_CODE(differential_force_equivalent(b6, Length{0.0}), ErrorCode::kInvalidInput);
}
