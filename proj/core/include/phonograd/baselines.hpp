#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phonograd/metrology.hpp"
#include "phonograd/species.hpp"
#include "phonograd/units.hpp"

namespace phonograd {

/// Matter-wave interferometers used as reference points for the phononic bound.

/// Whether a momentum kick of order n transfers n hbar k (single-photon
/// recoil) or n hbar 2k (two-photon Raman/Bragg).
enum class KickConvention { kSinglePhoton, kTwoPhoton };

std::string_view to_string(KickConvention c);

/// H = 8 N_r (N_a + 2 N_r) for a squeezed coherent single-particle probe.
double matter_wave_qfi(double atom_number, double squeezed_number);

/// t_free <= 2 sqrt(2 s / g).
Time max_free_fall_time(Length setup_size);

/// n <= m s / (hbar k t), before rounding to an even integer.
double max_kick_order(Length setup_size, Wavenumber k, Time t_free, const AtomSpecies& species);

/// phi = hbar n^2 k^2 eps t^3 / (2m).
double tidal_phase(int n_kick, Wavenumber k, GravityGradient eps, Time t_free, const AtomSpecies& species);

/// Supremum of tidal_phase over all pairs allowed by the two constraints above:
/// sqrt(2) m eps s^{5/2} / (sqrt(g) hbar).
double tidal_phase_ceiling(Length setup_size, GravityGradient eps, const AtomSpecies& species);

struct FreeFallSetup {
  Length setup_size{600e-6};
  Length laser_wavelength{1.56e-6};
  KickConvention convention = KickConvention::kSinglePhoton;
  std::optional<int> n_kick_override;
  std::optional<Time> t_free_override;

  friend bool operator==(const FreeFallSetup&, const FreeFallSetup&) = default;
};

struct FreeFallBaseline {
  Length setup_size;
  Length laser_wavelength;
  Wavenumber k_eff;
  int n_kick = 0;
  Time t_free;
  double phi_tidal = 0.0;
  double atom_number = 0.0;
  double squeezed_number = 0.0;
  double qfi = 0.0;
  std::int64_t n_rep = 1;
  GravityGradient epsilon_grad;
  double delta_rel = 0.0;
  double delta_rel_per_shot = 0.0;
  bool kick_bound_violated = false;  // only possible with n_kick_override
  std::vector<std::string> warnings;
};

/// Without overrides, picks the even n >= 2 and t_free(n) = min(2 sqrt(2s/g),
/// m s/(hbar k n)) that maximise the tidal phase. An n_kick override keeps the
/// geometric t_free (or t_free_override) and warns if the kick bound is broken.
/// Throws kZeroGradient for eps = 0, kSetupTooSmall when no even n >= 2 fits
/// the overridden t_free, kInvalidInput for N_r > N_a or non-positive inputs.
FreeFallBaseline free_fall_bound(const FreeFallSetup& setup, GravityGradient eps, const AtomSpecies& species,
                                 double atom_number, double squeezed_number, std::int64_t n_rep);

struct TrappedSetup {
  Length baseline{600e-6};  // L, distance between the two traps
  Length split{30e-6};      // delta z, wave-function split in each trap
  std::optional<Time> interrogation_time;  // defaults to the phononic t

  friend bool operator==(const TrappedSetup&, const TrappedSetup&) = default;
};

struct TrappedBaseline {
  Length baseline;
  Length split;
  Time t;
  double delta_phi_signal = 0.0;  // m L eps dz t / hbar
  double qfi = 0.0;
  std::int64_t n_rep = 1;
  GravityGradient epsilon_grad;
  double delta_rel = 0.0;
  double delta_rel_per_shot = 0.0;
};

/// Throws kSplitTooLarge when split > L/10, kZeroGradient for eps = 0.
TrappedBaseline trapped_bound(Length baseline, Length split, Time t, GravityGradient eps, const AtomSpecies& species,
                              double atom_number, double squeezed_number, std::int64_t n_rep);

struct BoundSummary {
  std::string label;
  GravityGradient epsilon_grad;
  double delta_rel = 0.0;
  GravityGradient delta_abs;
  double delta_rel_per_shot = 0.0;
  GravityGradient delta_abs_per_shot;
};

BoundSummary summarize(const ErrorBound& bound, std::string label);
BoundSummary summarize(const FreeFallBaseline& baseline, std::string label = "free-fall");
BoundSummary summarize(const TrappedBaseline& baseline, std::string label = "trapped");

struct ComparisonRow {
  BoundSummary summary;
  double phononic_over_row = 1.0;  // phononic delta_rel / this row's delta_rel
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;  // phononic first
};

/// Throws kMixedGradient if any entry's eps differs from the phononic one,
/// kZeroGradient if the phononic bound has no relative error.
ComparisonTable compare(const BoundSummary& phononic, const std::vector<BoundSummary>& baselines);

}  // namespace phonograd
