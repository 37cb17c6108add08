#include "phonograd/gravity_trap.hpp"

#include <cmath>
#include <limits>

#include "phonograd/constants.hpp"
#include "phonograd/error.hpp"

namespace phonograd {

std::string_view to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::kPointEarth: return "point";
    case SourceKind::kSphere: return "sphere";
    case SourceKind::kDirect: return "direct";
  }
  return "unknown";
}

GravitySource GravitySource::point(Mass mass, Length distance) {
  GravitySource s;
  s.kind = SourceKind::kPointEarth;
  s.mass = mass;
  s.distance = distance;
  return s;
}

GravitySource GravitySource::sphere(Mass mass, Length distance, Length sphere_radius) {
  GravitySource s;
  s.kind = SourceKind::kSphere;
  s.mass = mass;
  s.distance = distance;
  s.sphere_radius = sphere_radius;
  return s;
}

GravitySource GravitySource::sphere_from_density(MassDensity density, Length distance, Length sphere_radius) {
  const Mass mass = density * (4.0 / 3.0 * kPi) * pow<3>(sphere_radius);
  return sphere(mass, distance, sphere_radius);
}

GravitySource GravitySource::direct(GravityGradient epsilon) {
  GravitySource s;
  s.kind = SourceKind::kDirect;
  s.direct_epsilon = epsilon;
  return s;
}

GravitySource GravitySource::earth() { return point(Mass{5.972e24}, Length{6.371e6}); }

void validate(const GravitySource& source) {
  if (source.kind == SourceKind::kDirect) {
    if (!isfinite(source.direct_epsilon)) throw Error(ErrorCode::kInvalidSource, "gradient is not finite");
    return;
  }
  if (!isfinite(source.mass) || source.mass.value() < 0.0)
    throw Error(ErrorCode::kInvalidSource, "source mass must be finite and >= 0");
  if (!isfinite(source.distance) || source.distance.value() < 0.0)
    throw Error(ErrorCode::kInvalidSource, "source distance must be finite and >= 0");
  if (source.distance.value() == 0.0)
    throw Error(ErrorCode::kSingularGeometry, "source centre coincides with the trap centre");
  if (source.kind == SourceKind::kSphere) {
    if (!isfinite(source.sphere_radius) || !(source.sphere_radius.value() > 0.0))
      throw Error(ErrorCode::kInvalidSource, "sphere radius must be positive");
    if (source.distance < source.sphere_radius)
      throw Error(ErrorCode::kInvalidSource, "condensate would sit inside the sphere");
  }
}

MassDensity mass_density(const GravitySource& source) {
  if (source.kind != SourceKind::kSphere) throw Error(ErrorCode::kInvalidSource, "mass density needs a sphere source");
  validate(source);
  return source.mass / ((4.0 / 3.0 * kPi) * pow<3>(source.sphere_radius));
}

std::optional<std::string> proximity_warning(const GravitySource& source) {
  if (source.kind != SourceKind::kSphere) return std::nullopt;
  if (source.distance < 1.2 * source.sphere_radius) {
    return "sphere centre is closer than 1.2 sphere radii; quadratic expansion of the potential is degraded";
  }
  return std::nullopt;
}

double contact_scaling_ratio(const GravitySource& source) {
  const GravityGradient eps = gradient_of(source);
  return eps / (8.0 * mass_density(source) * kConstants.G);
}

GravityGradient gradient_of(const GravitySource& source) {
  validate(source);
  if (source.kind == SourceKind::kDirect) return source.direct_epsilon;
  return 2.0 * source.mass * kConstants.G / pow<3>(source.distance);
}

double PerturbedTrap::stiffness_ratio() const {
  if (epsilon_grad.value() == 0.0) return std::numeric_limits<double>::infinity();
  return omega0 * omega0 / epsilon_grad;
}

PerturbedTrap perturb_trap(const TrapConfig& trap, const GravitySource& source) {
  if (!isfinite(trap.omega0) || !(trap.omega0.value() > 0.0))
    throw Error(ErrorCode::kInvalidInput, "trap frequency must be positive");
  const GravityGradient eps = gradient_of(source);
  const AngularFrequencySq w0_sq = trap.omega0 * trap.omega0;
  const AngularFrequencySq wz_sq = w0_sq - eps;
  const AngularFrequencySq wp_sq = w0_sq + 0.5 * eps;
  if (!(wz_sq.value() > 0.0) || !(wp_sq.value() > 0.0)) {
    throw Error(ErrorCode::kTrapUnstable, "omega0^2 does not exceed the tidal term; confinement is lost");
  }

  PerturbedTrap out;
  out.omega0 = trap.omega0;
  out.omega_perp = sqrt(wp_sq);
  out.omega_z = sqrt(wz_sq);
  out.lambda = out.omega_z / out.omega_perp;
  out.epsilon_grad = eps;
  if (source.kind != SourceKind::kDirect) {
    out.sag_acceleration = source.mass * kConstants.G / pow<2>(source.distance);
  }
  out.z_g = out.sag_acceleration / wz_sq;
  return out;
}

Energy constant_offset(const PerturbedTrap& trap, const AtomSpecies& species) {
  return -1.0 * species.mass * pow<2>(trap.sag_acceleration) / (2.0 * trap.omega_z * trap.omega_z);
}

Energy evaluate_potential(const PerturbedTrap& trap, const AtomSpecies& species, Length rho, Length z_prime) {
  if (!isfinite(rho) || !isfinite(z_prime)) throw Error(ErrorCode::kInvalidQuantity, "position is not finite");
  return 0.5 * species.mass * (pow<2>(trap.omega_perp * rho) + pow<2>(trap.omega_z * z_prime));
}

}  // namespace phonograd
