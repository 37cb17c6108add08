#include "phonograd/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "phonograd/error.hpp"

namespace phonograd {

namespace {

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (!e.stage().empty()) throw;
    throw e.with_stage(name);
  }
}

void add_warning(std::vector<Warning>& out, std::string code, std::string message) {
  Warning w{std::move(code), std::move(message)};
  if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
}

}  // namespace

SensitivityReport run_report(const Scenario& s) {
  SensitivityReport r;
  r.scenario = s;

  stage("source", [&] { validate(s.source); });
  if (auto w = proximity_warning(s.source)) add_warning(r.warnings, "sphere_proximity", *w);

  r.trap = stage("trap", [&] { return perturb_trap(s.trap, s.source); });
  r.constant_offset = constant_offset(r.trap, s.condensate.species);

  r.profile = stage("condensate", [&] { return solve_profile(s.condensate, r.trap); });
  r.validity = tf_validity(r.profile);
  if (r.validity == TfValidity::kMarginal) {
    add_warning(r.warnings, "tf_marginal",
                fmt::format("N_a a/a_ho = {:.3g} is below {}; Thomas-Fermi results are approximate",
                            r.profile.tf_parameter, kTfValidThreshold));
  } else if (r.validity == TfValidity::kInvalid) {
    add_warning(r.warnings, "tf_invalid",
                fmt::format("N_a a/a_ho = {:.3g} is below {}; the Thomas-Fermi profile does not apply",
                            r.profile.tf_parameter, kTfMarginalThreshold));
  }

  stage("modes", [&] {
    if (s.mode.selection == ModeSelection::kPair) {
      r.pair = mode_pair_difference(s.mode.l, r.trap);
      r.mode = r.pair->max_m;
    } else {
      r.mode = mode_frequency(s.mode.l, s.mode.branch, r.trap);
    }
  });
  if (r.mode.is_dipole) {
    add_warning(r.warnings, "dipole_mode",
                "l = 1 is the centre-of-mass dipole mode; its frequency is set by the trap alone");
  }
  const double approx_err = r.pair ? std::fabs((r.pair->delta_omega_exact - r.pair->delta_omega_approx) /
                                               r.pair->delta_omega_exact)
                                   : r.mode.approximation_error();
  if (std::isfinite(approx_err) && approx_err > 1e-3) {
    add_warning(r.warnings, "first_order_inaccurate",
                fmt::format("first-order frequency differs from the exact one by {:.2e} (relative)", approx_err));
  }

  r.budget = stage("budget", [&] {
    return time_budget(s.t_requested, r.profile, r.mode, r.trap, s.condensate.species, s.condensate.temperature,
                       s.budget);
  });
  if (r.budget.above_chemical_potential) {
    add_warning(r.warnings, "temperature_above_mu",
                "k_B T exceeds the chemical potential; the damping estimate is outside its range");
  }

  r.bound = stage("bound", [&] {
    return r.pair ? gradient_error_bound(r.trap, *r.pair, s.scheme, r.budget.t_granted, s.n_rep)
                  : gradient_error_bound(r.trap, r.mode, s.scheme, r.budget.t_granted, s.n_rep);
  });
  if (!r.bound.delta_rel) {
    add_warning(r.warnings, "zero_gradient",
                "eps_grad = 0: relative error undefined, delta_abs is the smallest resolvable gradient");
  }

  r.force = stage("force", [&] {
    const Length baseline = s.baseline_length.value_or(2.0 * r.profile.radius);
    return differential_force_equivalent(r.bound, baseline);
  });
  return r;
}

ScenarioComparison run_comparison(const Scenario& s) {
  ScenarioComparison c;
  c.report = run_report(s);
  const auto& species = s.condensate.species;
  const double n_a = s.condensate.atom_number;
  const GravityGradient eps = c.report.trap.epsilon_grad;
  const double n_r = stage("baselines", [&] {
    if (s.scheme.squeezed_number || s.scheme.squeezing) return s.scheme.resolved_squeezed_number();
    if (s.scheme.total_number) return *s.scheme.total_number * 2.0 / 3.0;
    throw Error(ErrorCode::kIncompleteScheme, "scheme has no squeezed number to share with the baselines");
  });

  c.free_fall = stage("free_fall",
                      [&] { return free_fall_bound(s.baselines.free_fall, eps, species, n_a, n_r, s.n_rep); });
  for (const auto& w : c.free_fall.warnings) add_warning(c.report.warnings, "free_fall", w);

  const auto& tr = s.baselines.trapped;
  c.trapped = stage("trapped", [&] {
    return trapped_bound(tr.baseline, tr.split, tr.interrogation_time.value_or(c.report.budget.t_granted), eps,
                         species, n_a, n_r, s.n_rep);
  });

  c.table = stage("compare", [&] {
    return compare(summarize(c.report.bound, "phononic"), {summarize(c.free_fall), summarize(c.trapped)});
  });
  return c;
}

}  // namespace phonograd
