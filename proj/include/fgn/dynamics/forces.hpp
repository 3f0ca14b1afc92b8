#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fgn/dynamics/phase_state.hpp"
#include "fgn/dynamics/system_model.hpp"

namespace fgn {

/// Forces f_i = -dV_S/dr_i for one potential subset (SU AU / mo^2).
struct ForceReport {
  ParticleArray forces;
  Subset which = Subset::Full;

  /// a_i = f_i / m_i
  ParticleArray accelerations(const PhaseState& state) const {
    ParticleArray a = forces;
    for (std::size_t i = 0; i < a.count(); ++i)
      for (std::size_t k = 0; k < a.dim(); ++k) a(i, k) /= state.mass(i);
    return a;
  }
};

namespace detail {

struct Separation {
  std::vector<double> d;  // r_i - r_j
  double r;
};

inline Separation separation(const PhaseState& state, const ActivePair& p) {
  const std::size_t dim = state.dim();
  Separation s{std::vector<double>(dim), 0.0};
  double r2 = 0.0;
  for (std::size_t a = 0; a < dim; ++a) {
    s.d[a] = state.positions()(p.i, a) - state.positions()(p.j, a);
    r2 += s.d[a] * s.d[a];
  }
  s.r = std::sqrt(r2);
  if (!(s.r > 0.0))
    throw DomainError("particles " + std::to_string(p.i) + " and " + std::to_string(p.j) +
                      " coincide on an active pair");
  return s;
}

inline void check_model(const PhaseState& state, const SystemModel& model) {
  if (state.count() != model.count())
    throw ConfigurationError("state has " + std::to_string(state.count()) +
                             " particles but model has " + std::to_string(model.count()));
}

// Accumulates the fast-pair and slow-pair (+ external) parts separately so
// that FULL is exactly FAST + SLOW.
inline void accumulate_forces(const PhaseState& state, const SystemModel& model, Subset which,
                              ParticleArray& fast, ParticleArray& slow) {
  const std::size_t dim = state.dim();
  for (const auto& p : model.pairs()) {
    if (!SystemModel::includes(which, p.split)) continue;
    const Separation s = separation(state, p);
    const double scale = p.potential.dphi(s.r) / s.r;
    ParticleArray& out = (p.split == Subset::Fast) ? fast : slow;
    for (std::size_t a = 0; a < dim; ++a) {
      const double f = scale * s.d[a];
      out(p.i, a) -= f;
      out(p.j, a) += f;
    }
  }
  if (which == Subset::Fast) return;
  std::vector<double> g(dim);
  for (std::size_t i = 0; i < state.count(); ++i) {
    const auto& field = model.external(i);
    if (!field) continue;
    field->grad(state.positions().row(i), g);
    for (std::size_t a = 0; a < dim; ++a) slow(i, a) -= g[a];
  }
}

}  // namespace detail

/// Potential energy of one subset: sum of pair energies plus (for FULL/SLOW)
/// the external-field energies.
inline double potential_energy(const PhaseState& state, const SystemModel& model,
                               Subset which = Subset::Full) {
  detail::check_model(state, model);
  double fast = 0.0;
  double slow = 0.0;
  for (const auto& p : model.pairs()) {
    if (!SystemModel::includes(which, p.split)) continue;
    const double e = p.potential.phi(detail::separation(state, p).r);
    (p.split == Subset::Fast ? fast : slow) += e;
  }
  if (which != Subset::Fast) {
    for (std::size_t i = 0; i < state.count(); ++i)
      if (const auto& field = model.external(i)) slow += field->u(state.positions().row(i));
  }
  return fast + slow;
}

inline double kinetic_energy(const PhaseState& state) {
  double t = 0.0;
  for (std::size_t i = 0; i < state.count(); ++i) {
    double v2 = 0.0;
    for (double v : state.velocities().row(i)) v2 += v * v;
    t += 0.5 * state.mass(i) * v2;
  }
  return t;
}

/// E = sum m_i |v_i|^2 / 2 + sum_pairs phi(r_ij) + sum_i u(r_i).
inline double total_energy(const PhaseState& state, const SystemModel& model) {
  return kinetic_energy(state) + potential_energy(state, model, Subset::Full);
}

inline ForceReport forces(const PhaseState& state, const SystemModel& model,
                          Subset which = Subset::Full) {
  detail::check_model(state, model);
  ParticleArray fast(state.count(), state.dim());
  ParticleArray slow(state.count(), state.dim());
  detail::accumulate_forces(state, model, which, fast, slow);
  switch (which) {
    case Subset::Fast: return {std::move(fast), which};
    case Subset::Slow: return {std::move(slow), which};
    case Subset::Full: break;
  }
  fast += slow;
  return {std::move(fast), which};
}

/// Force-gradient vectors from precomputed subset accelerations a = f_S / m.
///
/// Pair part: g_i = -2 sum_j [ (a_i - a_j) phi'/r + d (r phi'' - phi') (d . (a_i - a_j)) / r^3 ]
/// with d = r_i - r_j. External part: -2 Hess(u)(r_i) a_i, which reduces to
/// 2 Hess(u) grad(u) / m_i when no pair forces act on particle i.
inline ParticleArray force_gradient_from(const PhaseState& state, const SystemModel& model,
                                         Subset which, const ParticleArray& acc) {
  const std::size_t dim = state.dim();
  ParticleArray g(state.count(), dim);
  std::vector<double> da(dim);
  for (const auto& p : model.pairs()) {
    if (!SystemModel::includes(which, p.split)) continue;
    const detail::Separation s = detail::separation(state, p);
    const double d1 = p.potential.dphi(s.r);
    const double d2 = p.potential.d2phi(s.r);
    double dot = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
      da[a] = acc(p.i, a) - acc(p.j, a);
      dot += s.d[a] * da[a];
    }
    const double radial = (s.r * d2 - d1) * dot / (s.r * s.r * s.r);
    for (std::size_t a = 0; a < dim; ++a) {
      const double t = da[a] * d1 / s.r + s.d[a] * radial;
      g(p.i, a) -= 2.0 * t;
      g(p.j, a) += 2.0 * t;
    }
  }
  if (which == Subset::Fast) return g;
  std::vector<double> hess(dim * dim);
  for (std::size_t i = 0; i < state.count(); ++i) {
    const auto& field = model.external(i);
    if (!field) continue;
    field->hessian(state.positions().row(i), hess);
    for (std::size_t a = 0; a < dim; ++a) {
      double t = 0.0;
      for (std::size_t b = 0; b < dim; ++b) t += hess[a * dim + b] * acc(i, b);
      g(i, a) -= 2.0 * t;
    }
  }
  return g;
}

/// Force-gradient vectors g_i with g_ia = 2 sum_jb (f_jb / m_j) df_ia/dr_jb,
/// restricted to one subset: both the forces and the pairs come from it, so
/// the result realizes [V_S,[T,V_S]].
inline ParticleArray force_gradient(const PhaseState& state, const SystemModel& model,
                                    Subset which = Subset::Full) {
  return force_gradient_from(state, model, which,
                             forces(state, model, which).accelerations(state));
}

}  // namespace fgn
