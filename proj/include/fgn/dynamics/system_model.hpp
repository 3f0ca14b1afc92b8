#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fgn/dynamics/phase_state.hpp"

namespace fgn {

/// Which part of the potential an evaluation refers to. FULL = FAST + SLOW.
enum class Subset { Full, Fast, Slow };

inline const char* to_string(Subset s) {
  switch (s) {
    case Subset::Full: return "FULL";
    case Subset::Fast: return "FAST";
    case Subset::Slow: return "SLOW";
  }
  return "?";
}

/// Central pair potential phi(r) with its first two radial derivatives.
struct PairPotential {
  std::function<double(double)> phi;
  std::function<double(double)> dphi;
  std::function<double(double)> d2phi;

  /// phi(r) = -coupling / r; coupling = G m_i m_j for gravity.
  static PairPotential inverse_distance(double coupling) {
    return {[coupling](double r) { return -coupling / r; },
            [coupling](double r) { return coupling / (r * r); },
            [coupling](double r) { return -2.0 * coupling / (r * r * r); }};
  }

  /// phi(r) = k (r - rest)^2 / 2.
  static PairPotential spring(double k, double rest) {
    return {[k, rest](double r) { return 0.5 * k * (r - rest) * (r - rest); },
            [k, rest](double r) { return k * (r - rest); },
            [k](double) { return k; }};
  }
};

/// Time-independent one-body potential u(r) with gradient and Hessian.
/// `grad` writes D values, `hessian` writes D*D values (row-major).
struct ExternalField {
  std::function<double(std::span<const double>)> u;
  std::function<void(std::span<const double>, std::span<double>)> grad;
  std::function<void(std::span<const double>, std::span<double>)> hessian;

  /// u(r) = k |r - center|^2 / 2.
  static ExternalField harmonic(double k, std::vector<double> center = {}) {
    auto offset = [center](std::span<const double> r, std::size_t a) {
      return r[a] - (a < center.size() ? center[a] : 0.0);
    };
    ExternalField f;
    f.u = [k, offset](std::span<const double> r) {
      double s = 0.0;
      for (std::size_t a = 0; a < r.size(); ++a) s += offset(r, a) * offset(r, a);
      return 0.5 * k * s;
    };
    f.grad = [k, offset](std::span<const double> r, std::span<double> out) {
      for (std::size_t a = 0; a < r.size(); ++a) out[a] = k * offset(r, a);
    };
    f.hessian = [k](std::span<const double> r, std::span<double> out) {
      const std::size_t d = r.size();
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) out[a * d + b] = (a == b) ? k : 0.0;
    };
    return f;
  }
};

/// Interacting pair (i < j) with its potential and multirate label.
struct ActivePair {
  std::size_t i;
  std::size_t j;
  PairPotential potential;
  Subset split;  // Fast (V1) or Slow (V2)
};

/// Pair potentials, optional external fields and the fast/slow split
/// H = T + V1 + V2. External fields always belong to V2.
class SystemModel {
 public:
  explicit SystemModel(std::size_t particle_count)
      : count_(particle_count), external_(particle_count) {}

  std::size_t count() const { return count_; }

  SystemModel& add_pair(std::size_t i, std::size_t j, PairPotential potential,
                        Subset split = Subset::Slow) {
    if (i == j) throw ConfigurationError("SystemModel: self-pair " + std::to_string(i));
    if (i >= count_ || j >= count_)
      throw ConfigurationError("SystemModel: pair index out of range");
    if (split == Subset::Full)
      throw ConfigurationError("SystemModel: pair split must be FAST or SLOW");
    if (i > j) std::swap(i, j);
    for (const auto& p : pairs_)
      if (p.i == i && p.j == j)
        throw ConfigurationError("SystemModel: pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") assigned twice");
    pairs_.push_back({i, j, std::move(potential), split});
    return *this;
  }

  SystemModel& set_external(std::size_t i, ExternalField field) {
    if (i >= count_) throw ConfigurationError("SystemModel: external index out of range");
    external_[i] = std::move(field);
    return *this;
  }

  /// Relabels every pair; used to erase or redraw the multirate split.
  SystemModel& relabel_all(Subset split) {
    if (split == Subset::Full)
      throw ConfigurationError("SystemModel: pair split must be FAST or SLOW");
    for (auto& p : pairs_) p.split = split;
    return *this;
  }

  const std::vector<ActivePair>& pairs() const { return pairs_; }
  const std::optional<ExternalField>& external(std::size_t i) const { return external_[i]; }
  bool has_external() const {
    for (const auto& e : external_)
      if (e) return true;
    return false;
  }

  static bool includes(Subset which, Subset label) {
    return which == Subset::Full || which == label;
  }

 private:
  std::size_t count_;
  std::vector<ActivePair> pairs_;
  std::vector<std::optional<ExternalField>> external_;
};

}  // namespace fgn
