#include "phonograd/metrology.hpp"

#include <cmath>
#include <string>

#include "phonograd/error.hpp"

namespace phonograd {

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kSingleModeSqueezed: return "single_mode_squeezed";
    case SchemeKind::kSU2: return "su2";
    case SchemeKind::kSU11: return "su11";
    case SchemeKind::kPumpedUpSU11: return "pumped_up_su11";
  }
  return "unknown";
}

MetrologyScheme MetrologyScheme::single_mode(double squeezed_number) {
  MetrologyScheme s;
  s.kind = SchemeKind::kSingleModeSqueezed;
  s.squeezed_number = squeezed_number;
  return s;
}

double MetrologyScheme::resolved_squeezed_number() const {
  if (squeezed_number) return *squeezed_number;
  if (squeezing) return std::pow(std::sinh(*squeezing), 2);
  throw Error(ErrorCode::kIncompleteScheme, "scheme needs squeezed_number or squeezing");
}

double MetrologyScheme::resolved_squeezing() const {
  if (squeezing) return *squeezing;
  if (squeezed_number) return std::asinh(std::sqrt(*squeezed_number));
  throw Error(ErrorCode::kIncompleteScheme, "scheme needs squeezing or squeezed_number");
}

namespace {

void require_non_negative(const std::optional<double>& v, const char* what) {
  if (v && (!std::isfinite(*v) || *v < 0.0))
    throw Error(ErrorCode::kInvalidInput, std::string(what) + " must be finite and >= 0");
}

}  // namespace

void validate(const MetrologyScheme& scheme) {
  require_non_negative(scheme.squeezed_number, "squeezed_number");
  require_non_negative(scheme.squeezing, "squeezing");
  require_non_negative(scheme.total_number, "total_number");
  require_non_negative(scheme.pump_number, "pump_number");
  if (!std::isfinite(scheme.chi)) throw Error(ErrorCode::kInvalidInput, "chi must be finite");
  if (scheme.squeezed_number && scheme.squeezing) {
    const double from_r = std::pow(std::sinh(*scheme.squeezing), 2);
    const double nr = *scheme.squeezed_number;
    const double scale = std::max(std::fabs(nr), std::fabs(from_r));
    if (scale > 0.0 && std::fabs(nr - from_r) > 1e-12 * scale) {
      throw Error(ErrorCode::kInconsistentScheme, "squeezed_number differs from sinh^2(squeezing)");
    }
  }
}

double qfi(const MetrologyScheme& scheme) {
  validate(scheme);
  switch (scheme.kind) {
    case SchemeKind::kSingleModeSqueezed: {
      const double nr = scheme.resolved_squeezed_number();
      return 8.0 * nr * (nr + 1.0);
    }
    case SchemeKind::kSU2:
    case SchemeKind::kSU11: {
      if (!scheme.total_number) throw Error(ErrorCode::kIncompleteScheme, "two-mode scheme needs total_number");
      const double nb = *scheme.total_number;
      const double prefactor = scheme.kind == SchemeKind::kSU2 ? 8.0 : 4.0;
      return prefactor * nb * (nb + 2.0) / 3.0;
    }
    case SchemeKind::kPumpedUpSU11: {
      if (!scheme.pump_number) throw Error(ErrorCode::kIncompleteScheme, "pumped-up scheme needs pump_number");
      const double r = scheme.resolved_squeezing();
      return *scheme.pump_number * std::exp(2.0 * r) / 4.0;
    }
  }
  throw Error(ErrorCode::kIncompleteScheme, "unknown scheme kind");
}

SchemeComparison scheme_comparison_factor(SchemeKind kind, double squeezed_number,
                                          std::optional<double> pump_number) {
  if (!(squeezed_number >= kAsymptoticMinSqueezed)) {
    throw Error(ErrorCode::kOutsideAsymptoticRegime, "comparison factors need N_r >= 100");
  }
  const double single = qfi(MetrologyScheme::single_mode(squeezed_number));

  MetrologyScheme scheme;
  scheme.kind = kind;
  double quoted = 1.0;
  switch (kind) {
    case SchemeKind::kSingleModeSqueezed:
      scheme.squeezed_number = squeezed_number;
      break;
    case SchemeKind::kSU2:
    case SchemeKind::kSU11:
      // Squeezed particles are 2/3 of the total.
      scheme.total_number = 1.5 * squeezed_number;
      quoted = kind == SchemeKind::kSU2 ? 3.0 / 4.0 : 3.0 / 8.0;
      break;
    case SchemeKind::kPumpedUpSU11:
      scheme.squeezed_number = squeezed_number;
      scheme.pump_number = pump_number.value_or(squeezed_number);
      quoted = 1.0 / 16.0;
      break;
  }

  SchemeComparison out{.kind = kind, .squeezed_number = squeezed_number};
  out.computed_ratio = qfi(scheme) / single;
  out.quoted_ratio = quoted;
  out.discrepancy_flagged = std::fabs(out.computed_ratio / quoted - 1.0) > 0.05;
  return out;
}

namespace {

void check_run(Time t, std::int64_t n_rep) {
  if (!isfinite(t) || !(t.value() > 0.0)) throw Error(ErrorCode::kInvalidInput, "interrogation time must be positive");
  if (n_rep < 1) throw Error(ErrorCode::kInvalidInput, "N_rep must be >= 1");
}

// Fills the QCRB quantities from the phase signal and its slope.
ErrorBound assemble(double h, std::int64_t n_rep, Time t, GravityGradient eps, double phase_signal,
                    PhasePerGradient phase_per_gradient) {
  ErrorBound b;
  b.qfi = h;
  b.n_rep = n_rep;
  b.t = t;
  b.epsilon_grad = eps;
  b.phase_signal = phase_signal;
  b.phase_per_gradient = abs(phase_per_gradient);

  const auto fill = [&](double dphi, std::optional<double>& rel, GravityGradient& abs_err) {
    if (eps.value() != 0.0) {
      rel = dphi / std::fabs(phase_signal);
      abs_err = *rel * abs(eps);
    } else {
      rel.reset();
      abs_err = dphi / b.phase_per_gradient;
    }
  };
  b.delta_phi = 1.0 / std::sqrt(static_cast<double>(n_rep) * h);
  b.delta_phi_per_shot = 1.0 / std::sqrt(h);
  fill(b.delta_phi, b.delta_rel, b.delta_abs);
  fill(b.delta_phi_per_shot, b.delta_rel_per_shot, b.delta_abs_per_shot);
  return b;
}

}  // namespace

ErrorBound gradient_error_bound(const PerturbedTrap& trap, const PhononMode& mode, const MetrologyScheme& scheme,
                                Time t, std::int64_t n_rep) {
  check_run(t, n_rep);
  if (mode.alpha == 0.0) {
    throw Error(ErrorCode::kGradientBlindMode,
                "mode l=" + std::to_string(mode.l) + " " + std::string(to_string(mode.branch)) +
                    " has no first-order gradient response");
  }
  const double h = qfi(scheme);
  const double phase = gradient_response(mode, trap) * t;
  return assemble(h, n_rep, t, trap.epsilon_grad, phase, mode.domega_deps * t);
}

ErrorBound gradient_error_bound(const PerturbedTrap& trap, const ModePair& pair, const MetrologyScheme& scheme, Time t,
                                std::int64_t n_rep) {
  check_run(t, n_rep);
  const double h = qfi(scheme);
  return assemble(h, n_rep, t, trap.epsilon_grad, pair.delta_phi(t), pair.ddelta_omega_deps * t);
}

ForceEquivalent differential_force_equivalent(const ErrorBound& bound, Length baseline_length) {
  if (!isfinite(baseline_length) || !(baseline_length.value() > 0.0))
    throw Error(ErrorCode::kInvalidInput, "baseline length must be positive");
  ForceEquivalent f;
  f.baseline_length = baseline_length;
  f.acceleration = bound.delta_abs * baseline_length;
  f.acceleration_per_shot = bound.delta_abs_per_shot * baseline_length;
  f.gal = to_gal(f.acceleration);
  f.standard_g = to_standard_g(f.acceleration);
  f.gal_per_shot = to_gal(f.acceleration_per_shot);
  f.standard_g_per_shot = to_standard_g(f.acceleration_per_shot);
  return f;
}

}  // namespace phonograd
