#pragma once

#include <array>
#include <utility>

#include "fgn/dynamics/forces.hpp"

namespace fgn::lab {

/// Sun-Earth-Moon data in AU / SU / month units. Initial velocities are
/// tangential (+x) with the tabulated speeds; positions lie on the +y axis.
struct ThreeBodySetup {
  double gravitational_constant = 0.2662;  // AU^3 / (SU mo^2)
  std::array<double, 3> masses{1.0, 3e-6, 0.0369e-6};
  std::array<std::array<double, 2>, 3> positions{{{0.0, 0.0}, {0.0, 1.0167138}, {0.0, 1.0191138}}};
  std::array<std::array<double, 2>, 3> velocities{{{0.0, 0.0}, {0.5160, 0.0}, {0.5337, 0.0}}};
};

enum Body : std::size_t { kSun = 0, kEarth = 1, kMoon = 2 };

/// Planar three-body system with phi(r) = -G m_i m_j / r on every pair.
/// Earth-Moon is the fast pair (V1); Sun-Earth and Sun-Moon are slow (V2).
inline std::pair<PhaseState, SystemModel> build_sun_earth_moon(const ThreeBodySetup& setup = {}) {
  ParticleArray r(3, 2), v(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < 2; ++a) {
      r(i, a) = setup.positions[i][a];
      v(i, a) = setup.velocities[i][a];
    }
  PhaseState state(std::move(r), std::move(v), {setup.masses.begin(), setup.masses.end()});
  const double g = setup.gravitational_constant;
  const auto& m = setup.masses;
  SystemModel model(3);
  model.add_pair(kSun, kEarth, PairPotential::inverse_distance(g * m[kSun] * m[kEarth]), Subset::Slow);
  model.add_pair(kSun, kMoon, PairPotential::inverse_distance(g * m[kSun] * m[kMoon]), Subset::Slow);
  model.add_pair(kEarth, kMoon, PairPotential::inverse_distance(g * m[kEarth] * m[kMoon]),
                 Subset::Fast);
  return {std::move(state), std::move(model)};
}

}  // namespace fgn::lab
