#pragma once

#include <string>

#include "fgn/integrators/scheme.hpp"

namespace fgn::schemes {

namespace detail {

inline void require_repetitions(int m) {
  if (m < 1) throw ConfigurationError("M must be a positive integer, got " + std::to_string(m));
}

inline InnerLoop fast_leapfrog_loop(int m, Fraction time_fraction) {
  return InnerLoop{{Kick{Subset::Fast, {1, 2}, 0}, Drift{1}, Kick{Subset::Fast, {1, 2}, 0}},
                   m,
                   time_fraction};
}

inline SplittingScheme finish(SplittingScheme s) {
  validate(s);
  return s;
}

}  // namespace detail

/// Kick-drift-kick: e^{hV/2} e^{hT} e^{hV/2}.
inline SplittingScheme leapfrog() {
  return detail::finish(
      {"leapfrog", {Kick{Subset::Full, {1, 2}, 0}, Drift{1}, Kick{Subset::Full, {1, 2}, 0}}, 2});
}

/// Drift-kick-drift: e^{hT/2} e^{hV} e^{hT/2}.
inline SplittingScheme leapfrog_drift_outside() {
  return detail::finish(
      {"leapfrog-drift", {Drift{{1, 2}}, Kick{Subset::Full, 1, 0}, Drift{{1, 2}}}, 2});
}

/// Five-stage scheme with kick weights 1/6, 2/3, 1/6.
inline SplittingScheme omelyan5() {
  return detail::finish({"omelyan5",
                         {Kick{Subset::Full, {1, 6}, 0}, Drift{{1, 2}},
                          Kick{Subset::Full, {2, 3}, 0}, Drift{{1, 2}},
                          Kick{Subset::Full, {1, 6}, 0}},
                         2});
}

/// omelyan5 with a force-gradient term of weight 1/72 in the middle kick.
inline SplittingScheme omelyan5_fg() {
  return detail::finish({"omelyan5-fg",
                         {Kick{Subset::Full, {1, 6}, 0}, Drift{{1, 2}},
                          Kick{Subset::Full, {2, 3}, {1, 72}}, Drift{{1, 2}},
                          Kick{Subset::Full, {1, 6}, 0}},
                         4});
}

/// Slow half kicks around M fast leapfrog substeps of size h/M.
inline SplittingScheme nested_leapfrog(int m) {
  detail::require_repetitions(m);
  return detail::finish({"nested-leapfrog",
                         {Kick{Subset::Slow, {1, 2}, 0}, detail::fast_leapfrog_loop(m, 1),
                          Kick{Subset::Slow, {1, 2}, 0}},
                         2});
}

/// Five-stage outer scheme on V2 with weights lambda, 1 - 2 lambda, lambda
/// and two fast inner loops of M substeps each covering h/2.
inline SplittingScheme alike5_nested(Fraction lambda, int m) {
  detail::require_repetitions(m);
  if (!(lambda > Fraction{0}) || !(lambda < Fraction{1, 2}))
    throw ConfigurationError("lambda must lie in (0, 1/2), got " + lambda.str());
  const InnerLoop half = detail::fast_leapfrog_loop(m, {1, 2});
  return detail::finish({"alike5",
                         {Kick{Subset::Slow, lambda, 0}, half,
                          Kick{Subset::Slow, Fraction{1} - 2 * lambda, 0}, half,
                          Kick{Subset::Slow, lambda, 0}},
                         2});
}

/// alike5_nested(1/6, M) with the slow force-gradient term (1/72) h^3
/// [V2,[T,V2]] added to the middle kick.
inline SplittingScheme nested_force_gradient(int m) {
  SplittingScheme s = alike5_nested({1, 6}, m);
  std::get<Kick>(s.stages[2]).c = {1, 72};
  s.name = "nested-fg";
  s.declared_order = 4;
  return detail::finish(std::move(s));
}

}  // namespace fgn::schemes
