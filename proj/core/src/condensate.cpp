#include "phonograd/condensate.hpp"

#include <cmath>

#include "phonograd/constants.hpp"
#include "phonograd/error.hpp"

namespace phonograd {

std::string_view to_string(TfValidity v) {
  switch (v) {
    case TfValidity::kValid: return "valid";
    case TfValidity::kMarginal: return "marginal";
    case TfValidity::kInvalid: return "invalid";
  }
  return "unknown";
}

CondensateProfile solve_profile(const CondensateSpec& spec, const PerturbedTrap& trap) {
  validate(spec.species);
  if (!std::isfinite(spec.atom_number) || spec.atom_number < 1.0)
    throw Error(ErrorCode::kInvalidInput, "atom number must be >= 1");
  if (!isfinite(spec.temperature) || spec.temperature.value() < 0.0)
    throw Error(ErrorCode::kInvalidInput, "temperature must be >= 0");

  const Mass m = spec.species.mass;
  const Action hbar = kConstants.hbar;

  CondensateProfile p;
  p.atom_number = spec.atom_number;
  p.lambda = trap.lambda;
  p.U0 = 4.0 * kPi * hbar * hbar * spec.species.a_scatt / m;
  p.radius = root<5>(15.0 * spec.atom_number * p.U0 * trap.lambda /
                     (4.0 * kPi * m * trap.omega_perp * trap.omega_perp));
  p.mu = 0.5 * m * pow<2>(trap.omega_perp * p.radius);
  p.n0 = p.mu / p.U0;
  p.omega_bar = cbrt(trap.omega_perp * trap.omega_perp * trap.omega_z);
  p.a_bar_ho = sqrt(hbar / (m * p.omega_bar));
  p.tf_parameter = spec.atom_number * (spec.species.a_scatt / p.a_bar_ho);
  return p;
}

NumberDensity density_at(const CondensateProfile& profile, Length rho, Length z_prime) {
  const Length axial = profile.lambda * z_prime;
  const double s = (rho * rho + axial * axial) / (profile.radius * profile.radius);
  if (s >= 1.0) return NumberDensity{0.0};
  return profile.n0 * (1.0 - s);
}

double closed_form_atom_number(const CondensateProfile& profile) {
  return 8.0 * kPi * pow<3>(profile.radius) * profile.mu / (15.0 * profile.U0 * profile.lambda);
}

TfValidity tf_validity(double tf_parameter) {
  if (tf_parameter >= kTfValidThreshold) return TfValidity::kValid;
  if (tf_parameter >= kTfMarginalThreshold) return TfValidity::kMarginal;
  return TfValidity::kInvalid;
}

TfValidity tf_validity(const CondensateProfile& profile) { return tf_validity(profile.tf_parameter); }

}  // namespace phonograd
