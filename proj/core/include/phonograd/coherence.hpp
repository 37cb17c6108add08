#pragma once

#include <string_view>

#include "phonograd/condensate.hpp"
#include "phonograd/modes.hpp"
#include "phonograd/species.hpp"
#include "phonograd/units.hpp"

namespace phonograd {

/// Density half-life under three-body loss dn/dt = -D n^3: t = 3 / (2 D n0^2).
/// Infinite when D = 0.
Time half_life(const CondensateProfile& profile, const AtomSpecies& species);

struct DampingEstimate {
  Quantity<0, 0, -1> gamma;
  bool above_chemical_potential = false;  // k_B T > mu, outside the law's range
};

/// Landau damping of low-frequency phonons,
///   gamma ~ prefactor sqrt(l) omega0 (k_B T / mu)^{3/2} (n0 a^3)^{1/2}.
DampingEstimate damping_rate(const CondensateProfile& profile, const PhononMode& mode, const PerturbedTrap& trap,
                             const AtomSpecies& species, Temperature temperature, double prefactor = 1.0);

enum class LimitingFactor { kRequested, kDamping, kHalfLife };

std::string_view to_string(LimitingFactor f);

struct BudgetOptions {
  double safety_fraction = 0.1;
  double damping_prefactor = 1.0;

  friend bool operator==(const BudgetOptions&, const BudgetOptions&) = default;
};

struct CoherenceBudget {
  Time t_halflife;
  Quantity<0, 0, -1> gamma;
  Time t_damping;  // 1 / gamma, infinite at T = 0
  Time t_requested;
  Time t_granted;
  LimitingFactor limiting_factor = LimitingFactor::kRequested;
  bool above_chemical_potential = false;
};

/// Grants min(requested, f t_damping, f t_halflife) with f = safety_fraction.
CoherenceBudget time_budget(Time requested, const CondensateProfile& profile, const PhononMode& mode,
                            const PerturbedTrap& trap, const AtomSpecies& species, Temperature temperature,
                            const BudgetOptions& options = {});

}  // namespace phonograd
