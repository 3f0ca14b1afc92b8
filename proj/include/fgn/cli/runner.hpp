#pragma once

#include <ostream>
#include <string>

#include "fgn/cli/format.hpp"
#include "fgn/cli/run_config.hpp"
#include "fgn/shadow/claims.hpp"
#include "fgn/shadow/symbolic_scheme.hpp"

namespace fgn::cli {

/// step,time_mo,energy,rel_energy_error for one scheme and one h.
inline void run_simulate(const RunConfig& c, std::ostream& out) {
  const SplittingScheme scheme = make_scheme(c.schemes.front(), c);
  const lab::EnergyErrorSeries e = lab::energy_error_series(scheme, c.h.front(), c.t_end, c.sample_every);
  out << "step,time_mo,energy,rel_energy_error\n";
  for (std::size_t k = 0; k < e.steps.size(); ++k)
    out << e.steps[k] << ',' << format_double(e.times[k]) << ',' << format_double(e.energies[k])
        << ',' << format_double(e.rel_errors[k]) << '\n';
}

/// h,max_rel_err rows and a trailing slope= line ("slope=nan" when the data
/// admit no fit). Returns the report for callers that want the window.
inline lab::ConvergenceReport run_converge(const RunConfig& c, std::ostream& out) {
  const SplittingScheme scheme = make_scheme(c.schemes.front(), c);
  const lab::ConvergenceReport r = lab::convergence_order(scheme, c.h, c.t_end);
  out << "h,max_rel_err\n";
  for (std::size_t k = 0; k < r.h.size(); ++k)
    out << format_double(r.h[k]) << ',' << format_double(r.max_errors[k]) << '\n';
  out << "slope=" << format_double(r.slope.value_or(std::nan(""))) << '\n';
  return r;
}

/// scheme,h,weighted_cost,max_rel_err for every scheme at every h.
inline void run_benchmark(const RunConfig& c, std::ostream& out) {
  std::vector<SplittingScheme> list;
  for (const auto& name : c.schemes) list.push_back(make_scheme(name, c));
  const auto rows =
      lab::cost_accuracy(list, std::vector<std::vector<double>>(list.size(), c.h), c.t_end, c.weights);
  out << "scheme,h,weighted_cost,max_rel_err\n";
  for (const auto& r : rows)
    out << r.scheme << ',' << format_double(r.h) << ',' << format_double(r.weighted_cost) << ','
        << format_double(r.max_rel_err) << '\n';
}

/// Known shadow-Hamiltonian terms of the named schemes, keyed by grade.
inline shadow::Claims known_claims(const std::string& name, const RunConfig& c) {
  namespace cl = shadow::claims;
  const shadow::Rational lambda(c.lambda.num(), c.lambda.den());
  const int m = c.repetitions;
  if (name == "leapfrog") return {{3, cl::leapfrog_kick_outside()}};
  if (name == "leapfrog-drift") return {{3, cl::leapfrog_drift_outside()}};
  if (name == "omelyan5") return {{3, cl::omelyan5()}};
  if (name == "omelyan5-fg") return {};
  if (name == "nested-leapfrog") return {{3, cl::nested_leapfrog(m)}};
  if (name == "alike5") return {{3, cl::alike5_nested(lambda, m)}};
  if (name == "nested-fg") return {{3, cl::nested_force_gradient(m)}};
  return {};
}

/// Prints "gradeG: <claim>" for G = 2..degree and "residual: <series>".
/// Named schemes print their known commutator claims; a custom scheme
/// prints the computed log terms as word polynomials and claims nothing.
/// Returns false when a claimed scheme leaves a nonzero residual.
inline bool run_shadow_verify(const RunConfig& c, std::ostream& out) {
  const std::string& name = c.schemes.front();
  const SplittingScheme scheme = make_scheme(name, c);
  shadow::TranslationOptions opt;
  opt.max_degree = c.degree;
  opt.commuting_potentials = c.commuting;
  const shadow::SymbolicScheme sym = shadow::symbolic(scheme, opt);
  shadow::Claims claims;
  for (const auto& [g, expr] : known_claims(name, c))
    if (g <= c.degree) claims.emplace(g, expr);
  if (name == "custom") {
    const shadow::NcSeries log = shadow::shadow_log(sym);
    for (int g = 2; g <= c.degree; ++g) out << "grade" << g << ": " << log.grade(g).str(sym.names) << '\n';
  } else {
    for (int g = 2; g <= c.degree; ++g) {
      const auto it = claims.find(g);
      out << "grade" << g << ": " << (it == claims.end() ? std::string("0") : it->second.str(sym.names))
          << '\n';
    }
  }
  const shadow::NcSeries residual = shadow::verify_claim(sym, claims);
  out << "residual: " << residual.str(sym.names) << '\n';
  return name == "custom" || residual.is_zero();
}

/// Validates and dispatches. Returns the process exit status.
inline int run(const RunConfig& c, std::ostream& out) {
  validate(c);
  switch (c.experiment) {
    case Experiment::Simulate: run_simulate(c, out); return 0;
    case Experiment::Converge: run_converge(c, out); return 0;
    case Experiment::Benchmark: run_benchmark(c, out); return 0;
    case Experiment::ShadowVerify: return run_shadow_verify(c, out) ? 0 : 1;
  }
  return 1;
}

}  // namespace fgn::cli
