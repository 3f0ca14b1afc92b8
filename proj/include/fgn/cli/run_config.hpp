#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgn/cli/format.hpp"
#include "fgn/integrators/builders.hpp"
#include "fgn/lab/experiments.hpp"

namespace fgn::cli {

enum class Experiment { Simulate, Converge, Benchmark, ShadowVerify };

inline const char* to_string(Experiment e) {
  switch (e) {
    case Experiment::Simulate: return "simulate";
    case Experiment::Converge: return "converge";
    case Experiment::Benchmark: return "benchmark";
    case Experiment::ShadowVerify: return "shadow-verify";
  }
  return "?";
}

inline Experiment parse_experiment(const std::string& s) {
  if (s == "simulate") return Experiment::Simulate;
  if (s == "converge") return Experiment::Converge;
  if (s == "benchmark") return Experiment::Benchmark;
  if (s == "shadow-verify") return Experiment::ShadowVerify;
  throw ConfigurationError("field 'experiment': unknown experiment '" + s + "'");
}

inline const std::vector<std::string>& scheme_names() {
  static const std::vector<std::string> names{"leapfrog",        "leapfrog-drift", "omelyan5",
                                              "omelyan5-fg",     "nested-leapfrog", "alike5",
                                              "nested-fg",       "custom"};
  return names;
}

/// Everything one CLI invocation needs.
struct RunConfig {
  Experiment experiment = Experiment::Simulate;
  std::vector<std::string> schemes{"leapfrog"};
  int repetitions = 30;  // M
  Fraction lambda{1, 6};
  std::string scheme_text;  // for "custom"
  std::vector<double> h{0.04};
  double t_end = 12.0;
  std::int64_t sample_every = 1;
  lab::CostWeights weights;
  std::string output;  // empty: stdout
  int degree = 4;
  bool commuting = false;

  friend bool operator==(const RunConfig& a, const RunConfig& b) {
    auto w = [](const lab::CostWeights& c) {
      return std::tuple{c.slow_force, c.fast_force, c.slow_force_gradient, c.fast_force_gradient,
                        c.drift};
    };
    return a.experiment == b.experiment && a.schemes == b.schemes &&
           a.repetitions == b.repetitions && a.lambda == b.lambda &&
           a.scheme_text == b.scheme_text && a.h == b.h && a.t_end == b.t_end &&
           a.sample_every == b.sample_every && w(a.weights) == w(b.weights) &&
           a.output == b.output && a.degree == b.degree && a.commuting == b.commuting;
  }
};

/// Builds a named scheme with the config's M, lambda and scheme text.
inline SplittingScheme make_scheme(const std::string& name, const RunConfig& c) {
  if (name == "leapfrog") return schemes::leapfrog();
  if (name == "leapfrog-drift") return schemes::leapfrog_drift_outside();
  if (name == "omelyan5") return schemes::omelyan5();
  if (name == "omelyan5-fg") return schemes::omelyan5_fg();
  if (name == "nested-leapfrog") return schemes::nested_leapfrog(c.repetitions);
  if (name == "alike5") return schemes::alike5_nested(c.lambda, c.repetitions);
  if (name == "nested-fg") return schemes::nested_force_gradient(c.repetitions);
  if (name == "custom") {
    if (c.scheme_text.empty())
      throw ConfigurationError("field 'scheme_text': required for scheme 'custom'");
    return parse_scheme(c.scheme_text, "custom");
  }
  throw ConfigurationError("field 'scheme': unknown scheme '" + name + "'");
}

/// Throws ConfigurationError naming the first offending field.
inline void validate(const RunConfig& c) {
  auto fail = [](const std::string& field, const std::string& what) {
    throw ConfigurationError("field '" + field + "': " + what);
  };
  if (c.schemes.empty()) fail("scheme", "at least one scheme is required");
  if (c.experiment != Experiment::Benchmark && c.schemes.size() != 1)
    fail("scheme", std::string(to_string(c.experiment)) + " takes exactly one scheme");
  if (c.repetitions < 1) fail("M", "must be a positive integer");
  if (!(c.lambda > Fraction{0}) || !(c.lambda < Fraction{1, 2}))
    fail("lambda", "must lie in (0, 1/2)");
  if (c.sample_every < 1) fail("sample_every", "must be >= 1");
  if (c.degree < 2 || c.degree > 6) fail("degree", "must lie in [2, 6]");
  if (!(c.t_end >= 0.0) || !std::isfinite(c.t_end)) fail("t_end", "must be non-negative");
  for (const auto& [name, w] :
       {std::pair{"slow_force", c.weights.slow_force}, std::pair{"fast_force", c.weights.fast_force},
        std::pair{"slow_force_gradient", c.weights.slow_force_gradient},
        std::pair{"fast_force_gradient", c.weights.fast_force_gradient},
        std::pair{"drift", c.weights.drift}})
    if (!(w >= 0.0) || !std::isfinite(w)) fail(std::string("weights.") + name, "must be non-negative");
  if (c.experiment != Experiment::ShadowVerify) {
    if (c.h.empty()) fail("h", "at least one step size is required");
    for (double h : c.h) {
      if (!(h > 0.0) || !std::isfinite(h)) fail("h", "step sizes must be positive");
      try {
        lab::step_count(c.t_end, h);
      } catch (const ConfigurationError& e) {
        fail("h", std::string(e.what()) + " (t_end = " + format_double(c.t_end) + ")");
      }
    }
    if (c.experiment == Experiment::Simulate && c.h.size() != 1)
      fail("h", "simulate takes a single step size");
    if (c.experiment == Experiment::Converge) {
      if (c.h.size() < 4) fail("h", "converge needs at least 4 step sizes");
      for (std::size_t k = 1; k < c.h.size(); ++k)
        if (!(c.h[k] < c.h[k - 1])) fail("h", "step sizes must be strictly decreasing");
    }
  }
  for (const auto& name : c.schemes) {
    try {
      make_scheme(name, c);
    } catch (const ConfigurationError& e) {
      const std::string what = e.what();
      if (what.rfind("field '", 0) == 0) throw;
      fail(name == "custom" ? "scheme_text" : "scheme", what);
    }
  }
}

inline nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["experiment"] = to_string(c.experiment);
  j["schemes"] = c.schemes;
  j["M"] = c.repetitions;
  j["lambda"] = c.lambda.str();
  j["scheme_text"] = c.scheme_text;
  j["h"] = c.h;
  j["t_end"] = c.t_end;
  j["sample_every"] = c.sample_every;
  j["weights"] = {{"slow_force", c.weights.slow_force},
                  {"fast_force", c.weights.fast_force},
                  {"slow_force_gradient", c.weights.slow_force_gradient},
                  {"fast_force_gradient", c.weights.fast_force_gradient},
                  {"drift", c.weights.drift}};
  j["output"] = c.output;
  j["degree"] = c.degree;
  j["commuting"] = c.commuting;
  return j;
}

/// Reads the keys present in `j` over `base`; unknown keys are rejected.
inline RunConfig from_json(const nlohmann::json& j, RunConfig base = {}) {
  if (!j.is_object()) throw ConfigurationError("config: top level must be an object");
  auto get = [&](const nlohmann::json& obj, const std::string& key, auto& dst,
                 const std::string& field) {
    if (!obj.contains(key)) return;
    try {
      obj.at(key).get_to(dst);
    } catch (const nlohmann::json::exception&) {
      throw ConfigurationError("field '" + field + "': wrong type");
    }
  };
  for (const auto& [key, _] : j.items()) {
    static const std::vector<std::string> known{"experiment", "schemes",      "scheme", "M",
                                                "lambda",     "scheme_text",  "h",      "t_end",
                                                "sample_every", "weights",    "output", "degree",
                                                "commuting"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigurationError("field '" + key + "': unknown key");
  }
  RunConfig c = std::move(base);
  if (j.contains("experiment")) {
    std::string e;
    get(j, "experiment", e, "experiment");
    c.experiment = parse_experiment(e);
  }
  if (j.contains("scheme")) {
    std::string s;
    get(j, "scheme", s, "scheme");
    c.schemes = {s};
  }
  get(j, "schemes", c.schemes, "schemes");
  get(j, "M", c.repetitions, "M");
  if (j.contains("lambda")) {
    std::string l;
    get(j, "lambda", l, "lambda");
    try {
      c.lambda = Fraction::parse(l);
    } catch (const std::invalid_argument& e) {
      throw ConfigurationError(std::string("field 'lambda': ") + e.what());
    }
  }
  get(j, "scheme_text", c.scheme_text, "scheme_text");
  if (j.contains("h") && j.at("h").is_number()) {
    c.h = {j.at("h").get<double>()};
  } else {
    get(j, "h", c.h, "h");
  }
  get(j, "t_end", c.t_end, "t_end");
  get(j, "sample_every", c.sample_every, "sample_every");
  if (j.contains("weights")) {
    const auto& w = j.at("weights");
    if (!w.is_object()) throw ConfigurationError("field 'weights': must be an object");
    for (const auto& [key, _] : w.items())
      if (key != "slow_force" && key != "fast_force" && key != "slow_force_gradient" &&
          key != "fast_force_gradient" && key != "drift")
        throw ConfigurationError("field 'weights." + key + "': unknown key");
    get(w, "slow_force", c.weights.slow_force, "weights.slow_force");
    get(w, "fast_force", c.weights.fast_force, "weights.fast_force");
    get(w, "slow_force_gradient", c.weights.slow_force_gradient, "weights.slow_force_gradient");
    get(w, "fast_force_gradient", c.weights.fast_force_gradient, "weights.fast_force_gradient");
    get(w, "drift", c.weights.drift, "weights.drift");
  }
  get(j, "output", c.output, "output");
  get(j, "degree", c.degree, "degree");
  get(j, "commuting", c.commuting, "commuting");
  return c;
}

inline std::string print_config(const RunConfig& c) { return to_json(c).dump(2) + "\n"; }

inline RunConfig parse_config(const std::string& text, RunConfig base = {}) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigurationError(std::string("config: malformed JSON: ") + e.what());
  }
  return from_json(j, std::move(base));
}

}  // namespace fgn::cli
