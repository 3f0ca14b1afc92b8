#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fgn {

/// Thrown when a state or model violates a structural precondition.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a physical evaluation hits a singular configuration
/// (e.g. two interacting particles at the same position).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense N x D array of per-particle vectors, row-major.
class ParticleArray {
 public:
  ParticleArray() = default;
  ParticleArray(std::size_t count, std::size_t dim)
      : count_(count), dim_(dim), data_(count * dim, 0.0) {}

  std::size_t count() const { return count_; }
  std::size_t dim() const { return dim_; }

  double& operator()(std::size_t i, std::size_t a) { return data_[i * dim_ + a]; }
  double operator()(std::size_t i, std::size_t a) const { return data_[i * dim_ + a]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }

  std::span<double> flat() { return data_; }
  std::span<const double> flat() const { return data_; }

  double max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
  }

  ParticleArray& operator+=(const ParticleArray& other) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }

  friend bool operator==(const ParticleArray&, const ParticleArray&) = default;

 private:
  std::size_t count_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Positions (AU), velocities (AU/mo) and masses (SU) of N particles in
/// two or three dimensions.
class PhaseState {
 public:
  PhaseState() = default;
  PhaseState(ParticleArray positions, ParticleArray velocities, std::vector<double> masses)
      : positions_(std::move(positions)),
        velocities_(std::move(velocities)),
        masses_(std::move(masses)) {
    validate();
  }

  /// Zero positions and velocities for the given masses.
  static PhaseState at_rest(std::vector<double> masses, std::size_t dim) {
    const std::size_t n = masses.size();
    return PhaseState(ParticleArray(n, dim), ParticleArray(n, dim), std::move(masses));
  }

  std::size_t count() const { return masses_.size(); }
  std::size_t dim() const { return positions_.dim(); }

  const ParticleArray& positions() const { return positions_; }
  const ParticleArray& velocities() const { return velocities_; }
  ParticleArray& positions() { return positions_; }
  ParticleArray& velocities() { return velocities_; }
  const std::vector<double>& masses() const { return masses_; }
  double mass(std::size_t i) const { return masses_[i]; }

  void validate() const {
    const std::size_t n = masses_.size();
    if (positions_.count() != n || velocities_.count() != n)
      throw ConfigurationError("PhaseState: positions, velocities and masses disagree on N");
    if (positions_.dim() != velocities_.dim())
      throw ConfigurationError("PhaseState: positions and velocities disagree on dimension");
    if (n > 0 && positions_.dim() != 2 && positions_.dim() != 3)
      throw ConfigurationError("PhaseState: dimension must be 2 or 3");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(masses_[i] > 0.0) || !std::isfinite(masses_[i]))
        throw ConfigurationError("PhaseState: mass of particle " + std::to_string(i) +
                                 " must be positive and finite");
    }
    for (double x : positions_.flat())
      if (!std::isfinite(x)) throw ConfigurationError("PhaseState: non-finite position");
    for (double x : velocities_.flat())
      if (!std::isfinite(x)) throw ConfigurationError("PhaseState: non-finite velocity");
  }

  /// Total linear momentum, one component per dimension.
  std::vector<double> momentum() const {
    std::vector<double> p(dim(), 0.0);
    for (std::size_t i = 0; i < count(); ++i)
      for (std::size_t a = 0; a < dim(); ++a) p[a] += masses_[i] * velocities_(i, a);
    return p;
  }

  friend bool operator==(const PhaseState&, const PhaseState&) = default;

 private:
  ParticleArray positions_;
  ParticleArray velocities_;
  std::vector<double> masses_;
};

}  // namespace fgn
