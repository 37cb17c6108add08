#include "phonograd/modes.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace phonograd;

namespace {
PerturbedTrap earth_trap() { return perturb_trap(TrapConfig{from_hz(0.2)}, GravitySource::earth()); }
PerturbedTrap sphere_trap() {
  return perturb_trap(TrapConfig{from_hz(0.2)}, GravitySource::sphere(Mass{2e-5}, Length{1e-3}, Length{6.3e-4}));
}
}  // namespace

TEST(Modes, StringariFrequencies) {
  const auto t = earth_trap();
  EXPECT_REL(mode_frequency(2, ModeBranch::kMaxM, t).omega_exact.value(), oracle::kEarthW22Exact, 1e-14);
  EXPECT_REL(mode_frequency(3, ModeBranch::kMaxM, t).omega_exact.value(), oracle::kEarthW33Exact, 1e-14);
  EXPECT_REL(mode_frequency(3, ModeBranch::kLMinusOne, t).omega_exact.value(), oracle::kEarthW32Exact, 1e-14);
  const auto s = sphere_trap();
  EXPECT_REL(mode_frequency(3, ModeBranch::kMaxM, s).omega_exact.value(), oracle::kSphereW33Exact, 1e-14);
}

TEST(Modes, ResponseCoefficients) {
  const auto t = earth_trap();
  const auto mm = mode_frequency(3, ModeBranch::kMaxM, t);
  EXPECT_DOUBLE_EQ(mm.alpha, 1.0);
  EXPECT_REL(mm.domega_deps.value(), std::sqrt(3.0) / (4.0 * t.omega0.value()), 1e-15);
  EXPECT_DOUBLE_EQ(mode_frequency(3, ModeBranch::kLMinusOne, t).alpha, 0.0);
  EXPECT_DOUBLE_EQ(mode_frequency(6, ModeBranch::kLMinusOne, t).alpha, 0.5);
  EXPECT_DOUBLE_EQ(mode_frequency(2, ModeBranch::kLMinusOne, t).alpha, 0.5);
  const auto l5 = mode_frequency(5, ModeBranch::kLMinusOne, t);
  EXPECT_REL(gradient_response(l5, t).value(), 2.0 * t.epsilon_grad.value() / (4.0 * t.omega0.value() * std::sqrt(5.0)),
             1e-15);
}

TEST(Modes, DipoleFlag) {
  const auto t = earth_trap();
  const auto d = mode_frequency(1, ModeBranch::kLMinusOne, t);
  EXPECT_TRUE(d.is_dipole);
  EXPECT_EQ(d.omega_exact, t.omega_z);
  EXPECT_FALSE(mode_frequency(1, ModeBranch::kMaxM, t).is_dipole);
  EXPECT_FALSE(mode_frequency(2, ModeBranch::kLMinusOne, t).is_dipole);
}

TEST(Modes, PairDifferenceMatchesOracle) {
  const auto t = earth_trap();
  const auto p = mode_pair_difference(3, t);
  EXPECT_REL(p.delta_omega_exact.value(), oracle::kEarthDw3Exact, 1e-12);
  EXPECT_REL(p.delta_omega_approx.value(), oracle::kEarthDw3Approx, 1e-14);
  const auto s = mode_pair_difference(3, sphere_trap());
  EXPECT_REL(s.delta_omega_exact.value(), oracle::kSphereDw3Exact, 1e-12);
  EXPECT_REL(s.delta_omega_approx.value(), oracle::kSphereDw3Approx, 1e-14);
  EXPECT_REL(p.delta_phi(Time{100.0}), 100.0 * oracle::kEarthDw3Exact, 1e-12);
}

TEST(Modes, PairDifferenceDecreasesWithL) {
  const auto t = earth_trap();
  const double expected[] = {oracle::kEarthDw2Exact, oracle::kEarthDw3Exact, oracle::kEarthDw4Exact,
                             oracle::kEarthDw5Exact, oracle::kEarthDw6Exact, oracle::kEarthDw7Exact,
                             oracle::kEarthDw8Exact};
  double previous = INFINITY;
  for (int l = 2; l <= 8; ++l) {
    const double dw = mode_pair_difference(l, t).delta_omega_exact.value();
    EXPECT_REL(dw, expected[l - 2], 1e-12) << "l=" << l;
    EXPECT_LT(dw, previous);
    previous = dw;
  }
}

TEST(Modes, InvalidAngularMomentum) {
  const auto t = earth_trap();
  EXPECT_ERROR_CODE(mode_frequency(0, ModeBranch::kMaxM, t), ErrorCode::kInvalidMode);
  EXPECT_ERROR_CODE(mode_frequency(-2, ModeBranch::kLMinusOne, t), ErrorCode::kInvalidMode);
  EXPECT_ERROR_CODE(mode_pair_difference(1, t), ErrorCode::kInvalidMode);
}
