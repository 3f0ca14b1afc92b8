// fgnest-cli: energy-error runs, convergence fits, cost tables and exact
// shadow-Hamiltonian checks for the splitting integrators.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fgn/cli/runner.hpp"

namespace {

struct Flags {
  std::string config_file;
  std::string scheme;
  std::optional<int> m;
  std::string lambda;
  std::string scheme_text;
  std::string h;
  std::optional<double> t_end;
  std::optional<std::int64_t> sample_every;
  std::optional<double> slow_force, fast_force, slow_force_gradient, fast_force_gradient, drift;
  std::string output;
  std::optional<int> degree;
  bool commuting = false;
  bool print_config = false;
};

void add_flags(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config_file, "JSON config file; flags override its values");
  app->add_option("--scheme", f.scheme,
                  "scheme name (comma list for benchmark): leapfrog, leapfrog-drift, omelyan5, "
                  "omelyan5-fg, nested-leapfrog, alike5, nested-fg, custom");
  app->add_option("--M", f.m, "inner substeps of nested schemes");
  app->add_option("--lambda", f.lambda, "outer weight of alike5, as p/q");
  app->add_option("--scheme-text", f.scheme_text, "stage list for scheme 'custom'");
  app->add_option("--h", f.h, "step size, or comma list of step sizes (mo)");
  app->add_option("--t-end", f.t_end, "duration (mo)");
  app->add_option("--sample-every", f.sample_every, "simulate: sample every k steps");
  app->add_option("--slow-force", f.slow_force, "cost of a SLOW force evaluation");
  app->add_option("--fast-force", f.fast_force, "cost of a FAST force evaluation");
  app->add_option("--slow-force-gradient", f.slow_force_gradient, "cost of a SLOW force gradient");
  app->add_option("--fast-force-gradient", f.fast_force_gradient, "cost of a FAST force gradient");
  app->add_option("--drift-cost", f.drift, "cost of a drift");
  app->add_option("--output,-o", f.output, "output file (default: stdout)");
  app->add_option("--degree", f.degree, "shadow-verify: truncation degree (2..6)");
  app->add_flag("--commuting", f.commuting, "shadow-verify: impose [V1,V2] = 0");
  app->add_flag("--print-config", f.print_config, "print the effective config as JSON and exit");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fgn::ConfigurationError("field 'config': cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fgn::cli::RunConfig build_config(fgn::cli::Experiment experiment, const Flags& f) {
  using namespace fgn::cli;
  RunConfig c;
  if (!f.config_file.empty()) c = parse_config(read_file(f.config_file), c);
  c.experiment = experiment;
  if (!f.scheme.empty()) c.schemes = split_list(f.scheme);
  if (f.m) c.repetitions = *f.m;
  if (!f.lambda.empty()) {
    try {
      c.lambda = fgn::Fraction::parse(f.lambda);
    } catch (const std::invalid_argument& e) {
      throw fgn::ConfigurationError(std::string("field 'lambda': ") + e.what());
    }
  }
  if (!f.scheme_text.empty()) c.scheme_text = f.scheme_text;
  if (!f.h.empty()) c.h = parse_double_list(f.h, "h");
  if (f.t_end) c.t_end = *f.t_end;
  if (f.sample_every) c.sample_every = *f.sample_every;
  if (f.slow_force) c.weights.slow_force = *f.slow_force;
  if (f.fast_force) c.weights.fast_force = *f.fast_force;
  if (f.slow_force_gradient) c.weights.slow_force_gradient = *f.slow_force_gradient;
  if (f.fast_force_gradient) c.weights.fast_force_gradient = *f.fast_force_gradient;
  if (f.drift) c.weights.drift = *f.drift;
  if (!f.output.empty()) c.output = f.output;
  if (f.degree) c.degree = *f.degree;
  if (f.commuting) c.commuting = true;
  return c;
}

// Writes to a sibling temporary file and renames it into place.
int run_to_file(const fgn::cli::RunConfig& c) {
  const std::filesystem::path target(c.output);
  const std::filesystem::path tmp = target.string() + ".partial";
  int status = 0;
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw fgn::ConfigurationError("field 'output': cannot write '" + c.output + "'");
    status = fgn::cli::run(c, out);
    out.flush();
    if (!out) throw fgn::ConfigurationError("field 'output': write failed for '" + c.output + "'");
  }
  std::filesystem::rename(tmp, target);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  using fgn::cli::Experiment;
  CLI::App app{"Splitting-integrator laboratory: energy error, convergence, cost, shadow checks"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help and exit");  // -h would clash with --h
  Flags flags;
  const std::pair<const char*, Experiment> commands[] = {
      {"simulate", Experiment::Simulate},
      {"converge", Experiment::Converge},
      {"benchmark", Experiment::Benchmark},
      {"shadow-verify", Experiment::ShadowVerify}};
  const char* help[] = {"energy-error series of one scheme on Sun-Earth-Moon",
                        "max energy error over an h grid and the fitted order",
                        "weighted evaluation cost vs max energy error",
                        "exact BCH check of a scheme's shadow Hamiltonian"};
  for (std::size_t k = 0; k < 4; ++k) add_flags(app.add_subcommand(commands[k].first, help[k]), flags);
  CLI11_PARSE(app, argc, argv);

  Experiment experiment = Experiment::Simulate;
  for (const auto& [name, e] : commands)
    if (app.got_subcommand(name)) experiment = e;

  try {
    const fgn::cli::RunConfig config = build_config(experiment, flags);
    if (flags.print_config) {
      fgn::cli::validate(config);
      std::cout << fgn::cli::print_config(config);
      return 0;
    }
    if (config.output.empty()) return fgn::cli::run(config, std::cout);
    return run_to_file(config);
  } catch (const fgn::ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const fgn::IntegrationError& e) {
    std::cerr << "integration error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
