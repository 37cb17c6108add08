#include "phonograd/modes.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "phonograd/error.hpp"

namespace phonograd {

std::string_view to_string(ModeBranch b) {
  switch (b) {
    case ModeBranch::kMaxM: return "max_m";
    case ModeBranch::kLMinusOne: return "l_minus_one";
  }
  return "unknown";
}

double PhononMode::approximation_error() const {
  return std::fabs((omega_exact - omega_approx) / omega_exact);
}

PhononMode mode_frequency(int l, ModeBranch branch, const PerturbedTrap& trap) {
  if (l < 1) throw Error(ErrorCode::kInvalidMode, "angular momentum l must be >= 1, got " + std::to_string(l));

  const double sqrt_l = std::sqrt(static_cast<double>(l));
  const AngularFrequencySq wp_sq = trap.omega_perp * trap.omega_perp;
  const AngularFrequencySq wz_sq = trap.omega_z * trap.omega_z;

  PhononMode mode;
  mode.l = l;
  mode.branch = branch;
  if (branch == ModeBranch::kMaxM) {
    mode.omega_exact = sqrt(static_cast<double>(l) * wp_sq);
    mode.alpha = 1.0;
    mode.domega_deps = sqrt_l / (4.0 * trap.omega0);
  } else {
    mode.omega_exact = sqrt(static_cast<double>(l - 1) * wp_sq + wz_sq);
    mode.alpha = std::abs(l - 3) / static_cast<double>(l);
    mode.domega_deps = static_cast<double>(l - 3) / (4.0 * trap.omega0 * sqrt_l);
    mode.is_dipole = (l == 1);
  }
  mode.omega_approx = sqrt_l * trap.omega0 + mode.domega_deps * trap.epsilon_grad;
  return mode;
}

AngularFrequency gradient_response(const PhononMode& mode, const PerturbedTrap& trap) {
  return mode.domega_deps * trap.epsilon_grad;
}

ModePair mode_pair_difference(int l, const PerturbedTrap& trap) {
  if (l < 2) throw Error(ErrorCode::kInvalidMode, "mode pair needs l >= 2, got " + std::to_string(l));

  ModePair pair;
  pair.l = l;
  pair.max_m = mode_frequency(l, ModeBranch::kMaxM, trap);
  pair.l_minus_one = mode_frequency(l, ModeBranch::kLMinusOne, trap);
  // omega_ll^2 - omega_l,l-1^2 = omega_perp^2 - omega_z^2 = (3/2) eps.
  pair.delta_omega_exact = 1.5 * trap.epsilon_grad / (pair.max_m.omega_exact + pair.l_minus_one.omega_exact);
  pair.ddelta_omega_deps = 3.0 / (4.0 * std::sqrt(static_cast<double>(l)) * trap.omega0);
  pair.delta_omega_approx = pair.ddelta_omega_deps * trap.epsilon_grad;
  return pair;
}

}  // namespace phonograd
