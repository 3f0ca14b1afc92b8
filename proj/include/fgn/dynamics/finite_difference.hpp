#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fgn/dynamics/forces.hpp"

namespace fgn {

/// Square row-major matrix.
struct DenseMatrix {
  std::size_t size = 0;
  std::vector<double> data;

  explicit DenseMatrix(std::size_t n = 0) : size(n), data(n * n, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return data[r * size + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * size + c]; }
};

/// Central-difference Jacobian df_ia / dr_jb of the subset forces, indexed
/// (i*D + a, j*D + b). Step is 1e-6 * max(1, max |r|). Test oracle only.
inline DenseMatrix force_jacobian_fd(const PhaseState& state, const SystemModel& model,
                                     Subset which = Subset::Full) {
  const std::size_t n = state.count() * state.dim();
  const double step = 1e-6 * std::max(1.0, state.positions().max_abs());
  DenseMatrix jac(n);
  PhaseState probe = state;
  for (std::size_t col = 0; col < n; ++col) {
    double& x = probe.positions().flat()[col];
    const double x0 = x;
    x = x0 + step;
    const ParticleArray plus = forces(probe, model, which).forces;
    x = x0 - step;
    const ParticleArray minus = forces(probe, model, which).forces;
    x = x0;
    for (std::size_t row = 0; row < n; ++row)
      jac(row, col) = (plus.flat()[row] - minus.flat()[row]) / (2.0 * step);
  }
  return jac;
}

}  // namespace fgn
