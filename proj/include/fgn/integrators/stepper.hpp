#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fgn/dynamics/forces.hpp"
#include "fgn/integrators/scheme.hpp"

namespace fgn {

/// Raised when a step fails; names the scheme and the 0-based step index.
class IntegrationError : public DomainError {
 public:
  IntegrationError(const std::string& scheme, std::int64_t step_index, const std::string& what)
      : DomainError("scheme '" + scheme + "' failed at step " + std::to_string(step_index) +
                    ": " + what),
        scheme_(scheme),
        step_index_(step_index) {}

  const std::string& scheme() const { return scheme_; }
  std::int64_t step_index() const { return step_index_; }

 private:
  std::string scheme_;
  std::int64_t step_index_;
};

/// Logical force and force-gradient evaluations, per subset.
struct EvaluationCounts {
  std::array<std::int64_t, 3> forces{};
  std::array<std::int64_t, 3> gradients{};
  std::int64_t drifts = 0;

  static std::size_t slot(Subset s) { return static_cast<std::size_t>(s); }
  std::int64_t force_evals(Subset s) const { return forces[slot(s)]; }
  std::int64_t gradient_evals(Subset s) const { return gradients[slot(s)]; }

  friend bool operator==(const EvaluationCounts&, const EvaluationCounts&) = default;
};

/// Applies drifts, kicks and whole scheme steps to a state in place. Keeps
/// the last accelerations per subset and reuses them while positions are
/// unchanged, so adjacent kicks cost one evaluation.
class Stepper {
 public:
  explicit Stepper(const SystemModel& model, bool memoize = true)
      : model_(&model), memoize_(memoize) {}

  const SystemModel& model() const { return *model_; }
  const EvaluationCounts& counts() const { return counts_; }

  static void drift(PhaseState& state, double tau) {
    auto pos = state.positions().flat();
    auto vel = state.velocities().flat();
    for (std::size_t k = 0; k < pos.size(); ++k) pos[k] += tau * vel[k];
  }

  /// v += bh * a_S + ch3 * g_S / m.
  void kick(PhaseState& state, Subset subset, double bh, double ch3) {
    if (bh == 0.0 && ch3 == 0.0) return;
    const ParticleArray& acc = accelerations(state, subset);
    auto vel = state.velocities().flat();
    auto a = acc.flat();
    for (std::size_t k = 0; k < vel.size(); ++k) vel[k] += bh * a[k];
    if (ch3 == 0.0) return;
    ++counts_.gradients[EvaluationCounts::slot(subset)];
    const ParticleArray g = force_gradient_from(state, *model_, subset, acc);
    const std::size_t dim = state.dim();
    for (std::size_t i = 0; i < state.count(); ++i)
      for (std::size_t d = 0; d < dim; ++d)
        state.velocities()(i, d) += ch3 * g(i, d) / state.mass(i);
  }

  void apply(const FlatStage& stage, PhaseState& state, double h) {
    if (const auto* d = std::get_if<Drift>(&stage)) {
      ++counts_.drifts;
      drift(state, d->a.to_double() * h);
    } else {
      const auto& k = std::get<Kick>(stage);
      kick(state, k.subset, k.b.to_double() * h, k.c.to_double() * h * h * h);
    }
  }

  /// One step of size h: stages left to right; an inner loop runs its stages
  /// M times with step time_fraction * h / M.
  void step(const SplittingScheme& scheme, PhaseState& state, double h) {
    for (const auto& stage : scheme.stages) {
      if (const auto* loop = std::get_if<InnerLoop>(&stage)) {
        const double inner = loop->time_fraction.to_double() * h / loop->repetitions;
        for (int rep = 0; rep < loop->repetitions; ++rep)
          for (const auto& s : loop->stages) apply(s, state, inner);
      } else {
        apply(detail::flatten(stage), state, h);
      }
    }
  }

 private:
  struct CacheEntry {
    ParticleArray positions;
    ParticleArray accelerations;
  };

  const ParticleArray& accelerations(const PhaseState& state, Subset subset) {
    auto& entry = cache_[EvaluationCounts::slot(subset)];
    if (memoize_ && entry && entry->positions == state.positions()) return entry->accelerations;
    ++counts_.forces[EvaluationCounts::slot(subset)];
    entry = CacheEntry{state.positions(), forces(state, *model_, subset).accelerations(state)};
    return entry->accelerations;
  }

  const SystemModel* model_;
  bool memoize_;
  std::array<std::optional<CacheEntry>, 3> cache_;
  EvaluationCounts counts_;
};

inline PhaseState drift(PhaseState state, double tau) {
  Stepper::drift(state, tau);
  return state;
}

inline PhaseState kick(PhaseState state, const SystemModel& model, Subset subset, double bh,
                       double ch3) {
  Stepper(model, false).kick(state, subset, bh, ch3);
  return state;
}

inline PhaseState step(const SplittingScheme& scheme, PhaseState state, const SystemModel& model,
                       double h) {
  if (!(h > 0.0)) throw ConfigurationError("step size h must be positive");
  Stepper(model).step(scheme, state, h);
  return state;
}

/// Energy (and optionally state) samples of a run of `steps` steps.
struct Trajectory {
  std::vector<std::int64_t> steps;
  std::vector<double> times;
  std::vector<double> energies;
  std::vector<PhaseState> states;  // empty unless requested
  double initial_energy = 0.0;
  PhaseState final_state;
  EvaluationCounts counts;
};

/// Runs `steps` steps of size h, sampling every `sample_every` steps plus the
/// first (t = 0) and last (t = steps * h) states. Sample times are k * h.
inline Trajectory integrate(const SplittingScheme& scheme, PhaseState state,
                            const SystemModel& model, double h, std::int64_t steps,
                            std::int64_t sample_every = 1, bool keep_states = false) {
  if (!(h > 0.0)) throw ConfigurationError("step size h must be positive");
  if (steps < 0) throw ConfigurationError("step count must be non-negative");
  if (sample_every < 1) throw ConfigurationError("sample_every must be >= 1");
  Trajectory traj;
  auto record = [&](std::int64_t k, double energy) {
    traj.steps.push_back(k);
    traj.times.push_back(static_cast<double>(k) * h);
    traj.energies.push_back(energy);
    if (keep_states) traj.states.push_back(state);
  };
  Stepper stepper(model);
  std::int64_t k = 0;
  try {
    traj.initial_energy = total_energy(state, model);
    record(0, traj.initial_energy);
    for (k = 0; k < steps; ++k) {
      stepper.step(scheme, state, h);
      const std::int64_t done = k + 1;
      if (done % sample_every == 0 || done == steps) record(done, total_energy(state, model));
    }
  } catch (const DomainError& e) {
    throw IntegrationError(scheme.name, k, e.what());
  }
  traj.final_state = std::move(state);
  traj.counts = stepper.counts();
  return traj;
}

}  // namespace fgn
