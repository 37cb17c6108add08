#pragma once

#include <string_view>

#include "phonograd/gravity_trap.hpp"
#include "phonograd/species.hpp"
#include "phonograd/units.hpp"

namespace phonograd {

struct CondensateSpec {
  AtomSpecies species;
  double atom_number = 1.0;
  Temperature temperature{0.0};

  friend bool operator==(const CondensateSpec&, const CondensateSpec&) = default;
};

enum class TfValidity { kValid, kMarginal, kInvalid };

std::string_view to_string(TfValidity v);

inline constexpr double kTfValidThreshold = 100.0;
inline constexpr double kTfMarginalThreshold = 10.0;

/// Thomas-Fermi ground state of the deformed trap.
struct CondensateProfile {
  Length radius;          // transverse TF radius; axial radius is radius / lambda
  Energy mu;              // chemical potential
  NumberDensity n0;       // peak density mu / U0
  InteractionStrength U0;
  double lambda = 1.0;
  double tf_parameter = 0.0;  // N_a a_scatt / a_bar_HO
  Length a_bar_ho;
  AngularFrequency omega_bar;
  double atom_number = 0.0;
};

/// Throws kInvalidInput for N_a < 1 or T < 0.
CondensateProfile solve_profile(const CondensateSpec& spec, const PerturbedTrap& trap);

/// Parabolic TF density, clipped to zero outside the ellipsoid.
NumberDensity density_at(const CondensateProfile& profile, Length rho, Length z_prime);

/// N_a = 8 pi R^3 mu / (15 U0 lambda), evaluated from the solved profile.
double closed_form_atom_number(const CondensateProfile& profile);

TfValidity tf_validity(const CondensateProfile& profile);
TfValidity tf_validity(double tf_parameter);

}  // namespace phonograd
