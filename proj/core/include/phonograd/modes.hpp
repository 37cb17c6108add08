#pragma once

#include <string_view>

#include "phonograd/gravity_trap.hpp"
#include "phonograd/units.hpp"

namespace phonograd {

/// Surface modes delta n ~ r^l Y_lm of a trapped TF condensate. Only the two
/// branches with analytic frequencies are supported.
enum class ModeBranch {
  kMaxM,       // m = +-l
  kLMinusOne,  // m = +-(l-1)
};

std::string_view to_string(ModeBranch b);

struct PhononMode {
  int l = 0;
  ModeBranch branch = ModeBranch::kMaxM;
  AngularFrequency omega_exact;
  AngularFrequency omega_approx;  // first order in eps_grad
  double alpha = 1.0;             // 1 for kMaxM, |(l-3)/l| for kLMinusOne
  Time domega_deps;               // d omega / d eps at eps = 0 (signed)
  bool is_dipole = false;         // l = 1, m = 0 centre-of-mass mode

  [[nodiscard]] double approximation_error() const;
};

/// Throws kInvalidMode for l < 1.
PhononMode mode_frequency(int l, ModeBranch branch, const PerturbedTrap& trap);

/// First-order frequency shift caused by eps_grad:
/// sqrt(l) eps / (4 omega0) for kMaxM, (l-3) eps / (4 omega0 sqrt(l)) for kLMinusOne.
AngularFrequency gradient_response(const PhononMode& mode, const PerturbedTrap& trap);

/// omega_{l,l} - omega_{l,l-1} for one angular momentum.
struct ModePair {
  int l = 0;
  PhononMode max_m;
  PhononMode l_minus_one;
  AngularFrequency delta_omega_exact;
  AngularFrequency delta_omega_approx;  // 3 eps / (4 sqrt(l) omega0)
  Time ddelta_omega_deps;               // 3 / (4 sqrt(l) omega0)

  [[nodiscard]] double delta_phi(Time t) const { return delta_omega_exact * t; }
};

/// Throws kInvalidMode for l < 2.
ModePair mode_pair_difference(int l, const PerturbedTrap& trap);

}  // namespace phonograd
