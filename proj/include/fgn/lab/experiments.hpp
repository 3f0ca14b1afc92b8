#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgn/integrators/stepper.hpp"
#include "fgn/lab/three_body.hpp"

namespace fgn::lab {

/// Number of steps l with l * h = t_end; throws if t_end / h is not integral
/// to within 1e-9 relative.
inline std::int64_t step_count(double t_end, double h) {
  if (!(h > 0.0)) throw ConfigurationError("h must be positive");
  if (t_end < 0.0) throw ConfigurationError("t_end must be non-negative");
  const double ratio = t_end / h;
  const double l = std::round(ratio);
  if (std::abs(ratio - l) > 1e-9 * std::max(1.0, ratio))
    throw ConfigurationError("t_end / h = " + std::to_string(ratio) + " is not an integer");
  return static_cast<std::int64_t>(l);
}

/// |E(t) - E0| / |E0| at the sampled steps, with its running maximum.
struct EnergyErrorSeries {
  std::vector<std::int64_t> steps;
  std::vector<double> times;
  std::vector<double> energies;
  std::vector<double> rel_errors;
  std::vector<double> running_max;
  double initial_energy = 0.0;
  double max_error = 0.0;
  EvaluationCounts counts;
};

inline EnergyErrorSeries energy_error_series(const SplittingScheme& scheme, double h, double t_end,
                                             std::int64_t sample_every, const PhaseState& state,
                                             const SystemModel& model) {
  const Trajectory traj = integrate(scheme, state, model, h, step_count(t_end, h), sample_every);
  EnergyErrorSeries out;
  out.steps = traj.steps;
  out.times = traj.times;
  out.energies = traj.energies;
  out.initial_energy = traj.initial_energy;
  out.counts = traj.counts;
  const double e0 = std::abs(traj.initial_energy);
  for (double e : traj.energies) {
    const double err = std::abs(e - traj.initial_energy) / e0;
    out.max_error = std::max(out.max_error, err);
    out.rel_errors.push_back(err);
    out.running_max.push_back(out.max_error);
  }
  return out;
}

/// Sun-Earth-Moon run.
inline EnergyErrorSeries energy_error_series(const SplittingScheme& scheme, double h, double t_end,
                                             std::int64_t sample_every = 1) {
  const auto [state, model] = build_sun_earth_moon();
  return energy_error_series(scheme, h, t_end, sample_every, state, model);
}

/// Least-squares slope of log(error) against log(h) on a window of
/// consecutive step sizes.
struct ConvergenceReport {
  std::string scheme;
  std::vector<double> h;
  std::vector<double> max_errors;
  std::optional<double> slope;   // empty when flagged
  double intercept = 0.0;
  double residual_rms = 0.0;     // of the log-log fit
  std::size_t window_begin = 0;  // [begin, end) into h
  std::size_t window_end = 0;
  std::string note;
};

struct ConvergenceOptions {
  std::size_t min_window = 3;
  /// A window is consistent when every local slope lies within this
  /// distance of the window's fitted slope.
  double slope_tolerance = 0.25;
};

namespace detail {

struct LineFit {
  double slope, intercept, rms;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y, std::size_t b,
                        std::size_t e) {
  const double n = static_cast<double>(e - b);
  double sx = 0, sy = 0;
  for (std::size_t k = b; k < e; ++k) {
    sx += x[k];
    sy += y[k];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t k = b; k < e; ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0;
  for (std::size_t k = b; k < e; ++k) {
    const double r = y[k] - (intercept + slope * x[k]);
    ss += r * r;
  }
  return {slope, intercept, std::sqrt(ss / n)};
}

}  // namespace detail

/// Fits the order from (h, error) pairs: among windows of >= min_window
/// consecutive points with strictly decreasing error and consistent local
/// slopes, the steepest fit wins (longer window on ties).
inline ConvergenceReport fit_convergence(std::string scheme, std::vector<double> h,
                                         std::vector<double> errors,
                                         const ConvergenceOptions& opt = {}) {
  ConvergenceReport rep;
  rep.scheme = std::move(scheme);
  rep.h = std::move(h);
  rep.max_errors = std::move(errors);
  const auto& hs = rep.h;
  const auto& es = rep.max_errors;
  const std::size_t n = hs.size();
  if (n < 4 || es.size() != n) {
    rep.note = "need at least 4 (h, error) pairs";
    return rep;
  }
  for (std::size_t k = 1; k < n; ++k)
    if (!(hs[k] < hs[k - 1])) {
      rep.note = "h values must be strictly decreasing";
      return rep;
    }
  std::vector<double> lx(n), ly(n);
  for (std::size_t k = 0; k < n; ++k) {
    lx[k] = std::log(hs[k]);
    ly[k] = (es[k] > 0.0) ? std::log(es[k]) : -INFINITY;
  }
  std::optional<detail::LineFit> best;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t e = b + opt.min_window; e <= n; ++e) {
      bool ok = true;
      for (std::size_t k = b; k < e && ok; ++k) ok = std::isfinite(ly[k]);
      for (std::size_t k = b + 1; k < e && ok; ++k) ok = es[k] < es[k - 1];
      if (!ok) break;
      const detail::LineFit fit = detail::fit_line(lx, ly, b, e);
      for (std::size_t k = b + 1; k < e && ok; ++k) {
        const double local = (ly[k - 1] - ly[k]) / (lx[k - 1] - lx[k]);
        ok = std::abs(local - fit.slope) <= opt.slope_tolerance;
      }
      if (!ok) continue;
      const bool steeper = !best || fit.slope > best->slope + 1e-12;
      const bool tie_longer = best && std::abs(fit.slope - best->slope) <= 1e-12 &&
                              e - b > rep.window_end - rep.window_begin;
      if (steeper || tie_longer) {
        best = fit;
        rep.window_begin = b;
        rep.window_end = e;
      }
    }
  }
  if (!best) {
    rep.note = "no monotone, consistent window of " + std::to_string(opt.min_window) + " points";
    return rep;
  }
  rep.slope = best->slope;
  rep.intercept = best->intercept;
  rep.residual_rms = best->rms;
  return rep;
}

/// Max relative energy error on [0, t_end] for each h, then the fit.
inline ConvergenceReport convergence_order(const SplittingScheme& scheme, std::vector<double> h_list,
                                           double t_end, const PhaseState& state,
                                           const SystemModel& model,
                                           const ConvergenceOptions& opt = {}) {
  std::vector<double> errors;
  errors.reserve(h_list.size());
  for (double h : h_list)
    errors.push_back(energy_error_series(scheme, h, t_end, 1, state, model).max_error);
  return fit_convergence(scheme.name, std::move(h_list), std::move(errors), opt);
}

inline ConvergenceReport convergence_order(const SplittingScheme& scheme, std::vector<double> h_list,
                                           double t_end, const ConvergenceOptions& opt = {}) {
  const auto [state, model] = build_sun_earth_moon();
  return convergence_order(scheme, std::move(h_list), t_end, state, model, opt);
}

/// Cost units per logical evaluation. A FULL evaluation costs slow + fast.
struct CostWeights {
  double slow_force = 1.0;
  double fast_force = 0.001;
  double slow_force_gradient = 2.0;
  double fast_force_gradient = 0.002;
  double drift = 0.0;

  void validate() const {
    for (double w : {slow_force, fast_force, slow_force_gradient, fast_force_gradient, drift})
      if (!(w >= 0.0) || !std::isfinite(w))
        throw ConfigurationError("cost weights must be non-negative");
  }

  double cost(const EvaluationCounts& c) const {
    auto f = [&](Subset s) { return static_cast<double>(c.force_evals(s)); };
    auto g = [&](Subset s) { return static_cast<double>(c.gradient_evals(s)); };
    return f(Subset::Slow) * slow_force + f(Subset::Fast) * fast_force +
           f(Subset::Full) * (slow_force + fast_force) + g(Subset::Slow) * slow_force_gradient +
           g(Subset::Fast) * fast_force_gradient +
           g(Subset::Full) * (slow_force_gradient + fast_force_gradient) +
           static_cast<double>(c.drifts) * drift;
  }
};

struct CostRow {
  std::string scheme;
  double h = 0.0;
  double weighted_cost = 0.0;
  double max_rel_err = 0.0;
  EvaluationCounts counts;
};

/// One row per (scheme, h); h_lists[k] belongs to schemes[k].
inline std::vector<CostRow> cost_accuracy(const std::vector<SplittingScheme>& schemes,
                                          const std::vector<std::vector<double>>& h_lists,
                                          double t_end, const CostWeights& weights,
                                          const PhaseState& state, const SystemModel& model) {
  weights.validate();
  if (schemes.size() != h_lists.size())
    throw ConfigurationError("cost_accuracy: one h list per scheme required");
  std::vector<CostRow> rows;
  for (std::size_t k = 0; k < schemes.size(); ++k) {
    for (double h : h_lists[k]) {
      const EnergyErrorSeries s = energy_error_series(schemes[k], h, t_end, 1, state, model);
      rows.push_back({schemes[k].name, h, weights.cost(s.counts), s.max_error, s.counts});
    }
  }
  return rows;
}

inline std::vector<CostRow> cost_accuracy(const std::vector<SplittingScheme>& schemes,
                                          const std::vector<std::vector<double>>& h_lists,
                                          double t_end, const CostWeights& weights = {}) {
  const auto [state, model] = build_sun_earth_moon();
  return cost_accuracy(schemes, h_lists, t_end, weights, state, model);
}

/// Weighted cost at which `scheme` reaches `target` error, by log-log linear
/// interpolation between the two bracketing rows. Empty if not bracketed.
inline std::optional<double> cost_at_accuracy(const std::vector<CostRow>& rows,
                                              const std::string& scheme, double target) {
  std::vector<const CostRow*> mine;
  for (const auto& r : rows)
    if (r.scheme == scheme) mine.push_back(&r);
  std::sort(mine.begin(), mine.end(),
            [](const CostRow* a, const CostRow* b) { return a->weighted_cost < b->weighted_cost; });
  for (std::size_t k = 1; k < mine.size(); ++k) {
    const CostRow& lo = *mine[k - 1];  // cheaper, less accurate
    const CostRow& hi = *mine[k];
    if (lo.max_rel_err >= target && hi.max_rel_err <= target && lo.max_rel_err > hi.max_rel_err) {
      const double t = (std::log(target) - std::log(lo.max_rel_err)) /
                       (std::log(hi.max_rel_err) - std::log(lo.max_rel_err));
      return std::exp(std::log(lo.weighted_cost) +
                      t * (std::log(hi.weighted_cost) - std::log(lo.weighted_cost)));
    }
  }
  return std::nullopt;
}

}  // namespace fgn::lab
