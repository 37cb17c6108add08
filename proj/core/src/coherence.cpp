#include "phonograd/coherence.hpp"

#include <cmath>
#include <limits>

#include "phonograd/constants.hpp"
#include "phonograd/error.hpp"

namespace phonograd {

std::string_view to_string(LimitingFactor f) {
  switch (f) {
    case LimitingFactor::kRequested: return "requested";
    case LimitingFactor::kDamping: return "damping";
    case LimitingFactor::kHalfLife: return "half_life";
  }
  return "unknown";
}

Time half_life(const CondensateProfile& profile, const AtomSpecies& species) {
  if (!(profile.n0.value() > 0.0)) throw Error(ErrorCode::kInvalidInput, "peak density must be positive");
  if (species.three_body_D.value() == 0.0) return Time{std::numeric_limits<double>::infinity()};
  return 3.0 / (2.0 * species.three_body_D * profile.n0 * profile.n0);
}

DampingEstimate damping_rate(const CondensateProfile& profile, const PhononMode& mode, const PerturbedTrap& trap,
                             const AtomSpecies& species, Temperature temperature, double prefactor) {
  if (!isfinite(temperature) || temperature.value() < 0.0)
    throw Error(ErrorCode::kInvalidInput, "temperature must be >= 0");
  if (!(profile.mu.value() > 0.0)) throw Error(ErrorCode::kInvalidInput, "chemical potential must be positive");
  if (!std::isfinite(prefactor) || prefactor < 0.0)
    throw Error(ErrorCode::kInvalidInput, "damping prefactor must be >= 0");

  DampingEstimate out;
  const double thermal = kConstants.k_B * temperature / profile.mu;
  out.above_chemical_potential = thermal > 1.0;
  if (temperature.value() == 0.0) return out;

  const double gas_parameter = profile.n0 * pow<3>(species.a_scatt);
  out.gamma = prefactor * std::sqrt(static_cast<double>(mode.l)) * trap.omega0 * std::pow(thermal, 1.5) *
              std::sqrt(gas_parameter);
  return out;
}

CoherenceBudget time_budget(Time requested, const CondensateProfile& profile, const PhononMode& mode,
                            const PerturbedTrap& trap, const AtomSpecies& species, Temperature temperature,
                            const BudgetOptions& options) {
  if (!isfinite(requested) || !(requested.value() > 0.0))
    throw Error(ErrorCode::kInvalidInput, "requested time must be positive");
  if (!(options.safety_fraction > 0.0) || options.safety_fraction > 1.0)
    throw Error(ErrorCode::kInvalidInput, "safety fraction must lie in (0, 1]");

  const DampingEstimate damping = damping_rate(profile, mode, trap, species, temperature, options.damping_prefactor);

  CoherenceBudget b;
  b.t_halflife = half_life(profile, species);
  b.gamma = damping.gamma;
  b.t_damping = damping.gamma.value() > 0.0 ? 1.0 / damping.gamma : Time{std::numeric_limits<double>::infinity()};
  b.t_requested = requested;
  b.above_chemical_potential = damping.above_chemical_potential;

  b.t_granted = requested;
  b.limiting_factor = LimitingFactor::kRequested;
  const Time damping_cap = options.safety_fraction * b.t_damping;
  const Time halflife_cap = options.safety_fraction * b.t_halflife;
  if (damping_cap < b.t_granted) {
    b.t_granted = damping_cap;
    b.limiting_factor = LimitingFactor::kDamping;
  }
  if (halflife_cap < b.t_granted) {
    b.t_granted = halflife_cap;
    b.limiting_factor = LimitingFactor::kHalfLife;
  }
  return b;
}

}  // namespace phonograd
