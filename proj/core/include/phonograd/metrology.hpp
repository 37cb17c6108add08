#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "phonograd/gravity_trap.hpp"
#include "phonograd/modes.hpp"
#include "phonograd/units.hpp"

namespace phonograd {

enum class SchemeKind { kSingleModeSqueezed, kSU2, kSU11, kPumpedUpSU11 };

std::string_view to_string(SchemeKind kind);

/// Probe state and interferometer. Which fields are required depends on kind:
///   kSingleModeSqueezed  squeezed_number or squeezing
///   kSU2, kSU11          total_number
///   kPumpedUpSU11        pump_number and (squeezing or squeezed_number)
struct MetrologyScheme {
  SchemeKind kind = SchemeKind::kSingleModeSqueezed;
  std::optional<double> squeezed_number;  // N_r = sinh^2 r
  std::optional<double> squeezing;        // r
  double chi = 0.0;                       // squeezing phase; no QFI depends on it
  std::optional<double> total_number;     // N_bar
  std::optional<double> pump_number;      // N_alpha

  static MetrologyScheme single_mode(double squeezed_number);

  /// N_r, from either field. Throws kIncompleteScheme if neither is set.
  [[nodiscard]] double resolved_squeezed_number() const;
  /// r, from either field. Throws kIncompleteScheme if neither is set.
  [[nodiscard]] double resolved_squeezing() const;

  friend bool operator==(const MetrologyScheme&, const MetrologyScheme&) = default;
};

/// Throws kInconsistentScheme if N_r and r disagree beyond 1e-12 relative,
/// kInvalidInput for negative particle numbers.
void validate(const MetrologyScheme& scheme);

/// Optimal phase QFI of the scheme (large-N_bar forms for SU2/SU11).
double qfi(const MetrologyScheme& scheme);

inline constexpr double kAsymptoticMinSqueezed = 100.0;

struct SchemeComparison {
  SchemeKind kind;
  double squeezed_number = 0.0;
  double computed_ratio = 0.0;  // H_scheme / H_single at equal squeezed number
  double quoted_ratio = 0.0;    // 3/4, 3/8, 1/16
  bool discrepancy_flagged = false;  // computed and quoted differ by more than 5%
};

/// SU2/SU11 use N_bar = (3/2) N_r; pumped-up uses N_alpha = N_r unless
/// pump_number is given. Throws kOutsideAsymptoticRegime for N_r < 100.
SchemeComparison scheme_comparison_factor(SchemeKind kind, double squeezed_number,
                                          std::optional<double> pump_number = std::nullopt);

using PhasePerGradient = Quantity<0, 0, 2>;

struct ErrorBound {
  double qfi = 0.0;
  std::int64_t n_rep = 1;
  Time t;
  GravityGradient epsilon_grad;
  double phase_signal = 0.0;           // accumulated phase, rad
  PhasePerGradient phase_per_gradient;  // d(phase)/d(eps), first order
  double delta_phi = 0.0;              // 1 / sqrt(N_rep H)
  std::optional<double> delta_rel;     // empty when eps = 0
  GravityGradient delta_abs;
  double delta_phi_per_shot = 0.0;
  std::optional<double> delta_rel_per_shot;
  GravityGradient delta_abs_per_shot;
};

/// Single-mode bound. With a squeezed-vacuum probe this is
///   delta = 2 omega0^2 / (alpha eps) / (sqrt(l) omega0 t sqrt(2 N_rep N_r (N_r+1))).
/// Throws kGradientBlindMode for alpha = 0.
ErrorBound gradient_error_bound(const PerturbedTrap& trap, const PhononMode& mode, const MetrologyScheme& scheme,
                                Time t, std::int64_t n_rep);

/// Two-mode bound from the phase difference accumulated between the branches.
ErrorBound gradient_error_bound(const PerturbedTrap& trap, const ModePair& pair, const MetrologyScheme& scheme, Time t,
                                std::int64_t n_rep);

struct ForceEquivalent {
  Length baseline_length;
  Acceleration acceleration;
  double gal = 0.0;
  double standard_g = 0.0;
  Acceleration acceleration_per_shot;
  double gal_per_shot = 0.0;
  double standard_g_per_shot = 0.0;
};

/// delta_abs * baseline_length expressed as a differential acceleration.
ForceEquivalent differential_force_equivalent(const ErrorBound& bound, Length baseline_length);

}  // namespace phonograd
