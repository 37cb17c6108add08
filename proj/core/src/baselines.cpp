#include "phonograd/baselines.hpp"

#include <cmath>
#include <string>

#include "phonograd/constants.hpp"
#include "phonograd/error.hpp"

namespace phonograd {

std::string_view to_string(KickConvention c) {
  switch (c) {
    case KickConvention::kSinglePhoton: return "single_photon";
    case KickConvention::kTwoPhoton: return "two_photon";
  }
  return "unknown";
}

double matter_wave_qfi(double atom_number, double squeezed_number) {
  return 8.0 * squeezed_number * (atom_number + 2.0 * squeezed_number);
}

Time max_free_fall_time(Length setup_size) { return 2.0 * sqrt(2.0 * setup_size / kConstants.g_surface); }

double max_kick_order(Length setup_size, Wavenumber k, Time t_free, const AtomSpecies& species) {
  return species.mass * setup_size / (kConstants.hbar * k * t_free);
}

double tidal_phase(int n_kick, Wavenumber k, GravityGradient eps, Time t_free, const AtomSpecies& species) {
  const double n = n_kick;
  return kConstants.hbar * (n * n) * pow<2>(k) * eps * pow<3>(t_free) / (2.0 * species.mass);
}

double tidal_phase_ceiling(Length setup_size, GravityGradient eps, const AtomSpecies& species) {
  return std::sqrt(2.0) * species.mass * eps * sqrt(pow<5>(setup_size) / kConstants.g_surface) / kConstants.hbar;
}

namespace {

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0)) throw Error(ErrorCode::kInvalidInput, std::string(what) + " must be positive");
}

void check_particles(double atom_number, double squeezed_number, std::int64_t n_rep) {
  require_positive(atom_number, "atom number");
  require_positive(squeezed_number, "squeezed number");
  if (squeezed_number > atom_number) throw Error(ErrorCode::kInvalidInput, "squeezed number exceeds atom number");
  if (n_rep < 1) throw Error(ErrorCode::kInvalidInput, "N_rep must be >= 1");
}

void check_gradient(GravityGradient eps) {
  if (!isfinite(eps)) throw Error(ErrorCode::kInvalidInput, "gradient is not finite");
  if (eps.value() == 0.0) throw Error(ErrorCode::kZeroGradient, "relative error is undefined without a gradient");
}

int largest_even_at_most(double x) {
  if (!(x >= 2.0)) return 0;
  const auto n = static_cast<long long>(std::floor(x));
  return static_cast<int>(n - (n % 2));
}

}  // namespace

FreeFallBaseline free_fall_bound(const FreeFallSetup& setup, GravityGradient eps, const AtomSpecies& species,
                                 double atom_number, double squeezed_number, std::int64_t n_rep) {
  require_positive(setup.setup_size.value(), "setup size");
  require_positive(setup.laser_wavelength.value(), "laser wavelength");
  check_particles(atom_number, squeezed_number, n_rep);
  check_gradient(eps);

  FreeFallBaseline out;
  out.setup_size = setup.setup_size;
  out.laser_wavelength = setup.laser_wavelength;
  const double k_factor = setup.convention == KickConvention::kTwoPhoton ? 2.0 : 1.0;
  out.k_eff = k_factor * 2.0 * kPi / setup.laser_wavelength;

  const Time t_geom = max_free_fall_time(setup.setup_size);
  const Wavenumber k = out.k_eff;

  if (setup.n_kick_override) {
    const int n = *setup.n_kick_override;
    if (n < 2 || n % 2 != 0) throw Error(ErrorCode::kInvalidInput, "n_kick override must be an even integer >= 2");
    out.n_kick = n;
    out.t_free = setup.t_free_override.value_or(t_geom);
    const double bound = max_kick_order(setup.setup_size, k, out.t_free, species);
    if (n > bound) {
      out.kick_bound_violated = true;
      out.warnings.push_back("n_kick = " + std::to_string(n) + " exceeds the wave-packet separation bound " +
                             std::to_string(bound));
    }
  } else if (setup.t_free_override) {
    out.t_free = *setup.t_free_override;
    out.n_kick = largest_even_at_most(max_kick_order(setup.setup_size, k, out.t_free, species));
    if (out.n_kick < 2) throw Error(ErrorCode::kSetupTooSmall, "no even momentum kick >= 2 fits the setup");
  } else {
    // phi ~ n^2 t^3 grows with n while t = t_geom, then falls as 1/n once the
    // separation bound forces t = m s / (hbar k n); only the two even orders
    // bracketing the crossover can be optimal.
    const double crossover = max_kick_order(setup.setup_size, k, t_geom, species);
    const int n_lo = largest_even_at_most(crossover);
    int n_hi = largest_even_at_most(crossover) + 2;
    if (n_hi < 2) n_hi = 2;
    const Time t_hi = species.mass * setup.setup_size / (kConstants.hbar * k * static_cast<double>(n_hi));
    const Time t_hi_capped = t_hi < t_geom ? t_hi : t_geom;

    out.n_kick = n_hi;
    out.t_free = t_hi_capped;
    if (n_lo >= 2 && std::fabs(tidal_phase(n_lo, k, eps, t_geom, species)) >=
                         std::fabs(tidal_phase(n_hi, k, eps, t_hi_capped, species))) {
      out.n_kick = n_lo;
      out.t_free = t_geom;
    }
  }
  if (out.t_free > t_geom) {
    out.warnings.push_back("t_free exceeds the free-fall limit 2 sqrt(2 s / g)");
  }

  out.phi_tidal = tidal_phase(out.n_kick, k, eps, out.t_free, species);
  out.atom_number = atom_number;
  out.squeezed_number = squeezed_number;
  out.qfi = matter_wave_qfi(atom_number, squeezed_number);
  out.n_rep = n_rep;
  out.epsilon_grad = eps;
  out.delta_rel = 1.0 / (std::sqrt(static_cast<double>(n_rep) * out.qfi) * std::fabs(out.phi_tidal));
  out.delta_rel_per_shot = 1.0 / (std::sqrt(out.qfi) * std::fabs(out.phi_tidal));
  return out;
}

TrappedBaseline trapped_bound(Length baseline, Length split, Time t, GravityGradient eps, const AtomSpecies& species,
                              double atom_number, double squeezed_number, std::int64_t n_rep) {
  require_positive(baseline.value(), "trap baseline");
  require_positive(split.value(), "split");
  require_positive(t.value(), "interrogation time");
  check_particles(atom_number, squeezed_number, n_rep);
  // Relative slack so that exactly L/10 (e.g. 60 um on 600 um) is accepted despite rounding.
  if (split.value() > baseline.value() / 10.0 * (1.0 + 1e-12)) throw Error(ErrorCode::kSplitTooLarge, "split must not exceed a tenth of the baseline");
  check_gradient(eps);

  TrappedBaseline out;
  out.baseline = baseline;
  out.split = split;
  out.t = t;
  out.delta_phi_signal = species.mass * baseline * eps * split * t / kConstants.hbar;
  out.qfi = matter_wave_qfi(atom_number, squeezed_number);
  out.n_rep = n_rep;
  out.epsilon_grad = eps;
  out.delta_rel = 1.0 / (std::sqrt(static_cast<double>(n_rep) * out.qfi) * std::fabs(out.delta_phi_signal));
  out.delta_rel_per_shot = 1.0 / (std::sqrt(out.qfi) * std::fabs(out.delta_phi_signal));
  return out;
}

BoundSummary summarize(const ErrorBound& bound, std::string label) {
  if (!bound.delta_rel || !bound.delta_rel_per_shot)
    throw Error(ErrorCode::kZeroGradient, "phononic bound has no relative error");
  return BoundSummary{
      .label = std::move(label),
      .epsilon_grad = bound.epsilon_grad,
      .delta_rel = *bound.delta_rel,
      .delta_abs = bound.delta_abs,
      .delta_rel_per_shot = *bound.delta_rel_per_shot,
      .delta_abs_per_shot = bound.delta_abs_per_shot,
  };
}

namespace {

BoundSummary summary_from_relative(std::string label, GravityGradient eps, double rel, double rel_shot) {
  return BoundSummary{
      .label = std::move(label),
      .epsilon_grad = eps,
      .delta_rel = rel,
      .delta_abs = rel * abs(eps),
      .delta_rel_per_shot = rel_shot,
      .delta_abs_per_shot = rel_shot * abs(eps),
  };
}

}  // namespace

BoundSummary summarize(const FreeFallBaseline& b, std::string label) {
  return summary_from_relative(std::move(label), b.epsilon_grad, b.delta_rel, b.delta_rel_per_shot);
}

BoundSummary summarize(const TrappedBaseline& b, std::string label) {
  return summary_from_relative(std::move(label), b.epsilon_grad, b.delta_rel, b.delta_rel_per_shot);
}

ComparisonTable compare(const BoundSummary& phononic, const std::vector<BoundSummary>& baselines) {
  if (!std::isfinite(phononic.delta_rel) || !(phononic.delta_rel > 0.0))
    throw Error(ErrorCode::kZeroGradient, "phononic bound has no finite relative error");
  const double eps = phononic.epsilon_grad.value();

  ComparisonTable table;
  table.rows.push_back({phononic, 1.0});
  for (const auto& b : baselines) {
    if (std::fabs(b.epsilon_grad.value() - eps) > 1e-12 * std::fabs(eps)) {
      throw Error(ErrorCode::kMixedGradient, "entry '" + b.label + "' uses a different gradient");
    }
    table.rows.push_back({b, phononic.delta_rel / b.delta_rel});
  }
  return table;
}

}  // namespace phonograd
