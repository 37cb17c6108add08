#pragma once

#include <optional>
#include <string>

#include "phonograd/species.hpp"
#include "phonograd/units.hpp"

namespace phonograd {

enum class SourceKind { kPointEarth, kSphere, kDirect };

std::string_view to_string(SourceKind kind);

/// Spherical, homogeneous gravitating body on the trap's z axis, or a gradient
/// given directly.
struct GravitySource {
  SourceKind kind = SourceKind::kPointEarth;
  Mass mass{0.0};
  Length distance{0.0};       // centre of source to centre of trap
  Length sphere_radius{0.0};  // kSphere only
  GravityGradient direct_epsilon{0.0};  // kDirect only

  static GravitySource point(Mass mass, Length distance);
  static GravitySource sphere(Mass mass, Length distance, Length sphere_radius);
  static GravitySource sphere_from_density(MassDensity density, Length distance, Length sphere_radius);
  static GravitySource direct(GravityGradient epsilon);

  /// Earth as a point mass: M = 5.972e24 kg at R = 6.371e6 m.
  static GravitySource earth();

  friend bool operator==(const GravitySource&, const GravitySource&) = default;
};

/// Throws kInvalidSource / kSingularGeometry for malformed sources.
void validate(const GravitySource& source);

/// rho_M = M / ((4/3) pi r^3); kSphere only.
MassDensity mass_density(const GravitySource& source);

/// Non-empty when the quadratic expansion of the potential is doubtful
/// (sphere closer than 1.2 radii).
std::optional<std::string> proximity_warning(const GravitySource& source);

/// eps_grad / (8 rho_M G) = (pi/3)(r/R)^3; tends to ~1 near contact.
double contact_scaling_ratio(const GravitySource& source);

/// 2MG/R^3 for mass sources, the stored value for kDirect.
GravityGradient gradient_of(const GravitySource& source);

struct TrapConfig {
  AngularFrequency omega0{0.0};

  friend bool operator==(const TrapConfig&, const TrapConfig&) = default;
};

/// Isotropic trap deformed by the source's tidal field, expanded to second
/// order about the trap centre.
struct PerturbedTrap {
  AngularFrequency omega0;
  AngularFrequency omega_perp;  // omega_perp^2 = omega0^2 + eps/2
  AngularFrequency omega_z;     // omega_z^2 = omega0^2 - eps
  double lambda = 1.0;          // omega_z / omega_perp
  Length z_g;                   // equilibrium sag along z
  Acceleration sag_acceleration;  // MG/R^2; zero for kDirect
  GravityGradient epsilon_grad;

  /// omega0^2 / eps_grad; infinite for eps = 0.
  [[nodiscard]] double stiffness_ratio() const;
};

/// Throws kTrapUnstable when omega0^2 <= eps (axial confinement lost).
PerturbedTrap perturb_trap(const TrapConfig& trap, const GravitySource& source);

/// Constant C = -m (MG/R^2)^2 / (2 omega_z^2); diagnostic only.
Energy constant_offset(const PerturbedTrap& trap, const AtomSpecies& species);

/// V = (m/2)(omega_perp^2 rho^2 + omega_z^2 z'^2), z' measured from z_g.
Energy evaluate_potential(const PerturbedTrap& trap, const AtomSpecies& species, Length rho, Length z_prime);

}  // namespace phonograd
