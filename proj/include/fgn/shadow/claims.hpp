#pragma once

#include "fgn/shadow/commutator.hpp"
#include "fgn/shadow/symbolic_scheme.hpp"

// Known h^3 shadow terms of the named schemes, as commutator expressions.
// Single-rate schemes use V1 for the whole potential (displayed as V).

namespace fgn::shadow::claims {

inline const Bracket T{Symbol::T};
inline const Bracket V1{Symbol::V1};
inline const Bracket V2{Symbol::V2};
inline const Bracket& V = V1;

/// e^{hT/2} e^{hV} e^{hT/2}: -(1/24) (2 [V,[T,V]] + [T,[T,V]]).
inline CommutatorExpr leapfrog_drift_outside() {
  return Rational(-1, 24) *
         CommutatorExpr{{2, br(V, br(T, V))}, {1, br(T, br(T, V))}};
}

/// e^{hV/2} e^{hT} e^{hV/2}: (1/24) [V,[T,V]] + (1/12) [T,[T,V]].
inline CommutatorExpr leapfrog_kick_outside() {
  return {{Rational(1, 24), br(V, br(T, V))}, {Rational(1, 12), br(T, br(T, V))}};
}

inline CommutatorExpr omelyan5() { return {{Rational(-1, 72), br(V, br(T, V))}}; }

/// h^3 term of the M -> infinity alike five-stage nested scheme with
/// outer weight lambda (no commutation relation assumed).
inline CommutatorExpr alike5_limit(const Rational& lambda) {
  const Rational a = (-1 + 6 * lambda - 6 * lambda * lambda) / 12;
  const Rational b = (-1 + 6 * lambda) / 24;
  CommutatorExpr e;
  e.add(a, br(V2, br(V1, V2)));
  e.add(b, br(V1, br(T, V2)));
  e.add(a, br(V2, br(T, V2)));
  e.add(b, br(V1, br(V1, V2)));
  e.add(b, br(T, br(V1, V2)));
  e.add(b, br(T, br(T, V2)));
  return e;
}

/// Same, after imposing [V1,V2] = 0.
inline CommutatorExpr alike5_limit_commuting(const Rational& lambda) {
  const Rational a = (-1 + 6 * lambda - 6 * lambda * lambda) / 12;
  const Rational b = (-1 + 6 * lambda) / 24;
  CommutatorExpr e;
  e.add(a, br(V2, br(T, V2)));
  e.add(b, br(V1, br(T, V2)));
  e.add(b, br(T, br(T, V2)));
  return e;
}

/// h^3 excess of M fast kick-drift-kick substeps covering h over the exact
/// flow of T + V1, times M^2.
inline CommutatorExpr fast_substep_excess() {
  return {{Rational(1, 24), br(V1, br(T, V1))}, {Rational(1, 12), br(T, br(T, V1))}};
}

/// Nested leapfrog with M substeps: the lambda = 1/2 limit plus the
/// 1/M^2 substep error.
inline CommutatorExpr nested_leapfrog(int m) {
  return alike5_limit(Rational(1, 2)) + Rational(1, m * m) * fast_substep_excess();
}

/// Nested leapfrog shadow term exactly as it is usually printed:
///   -1/24 [V2,[V2,T]] + 1/12 [V1,[V2,T]] + 1/12 [T,[V2,T]]
///   + (1/M^2) (-1/24 [V1,[V1,T]] + 1/12 [T,[V1,T]])
/// It differs from nested_leapfrog(M) in the sign of every term with two
/// T's or with V1 outside [V2,T]; kept to document the discrepancy.
inline CommutatorExpr nested_leapfrog_as_printed(int m) {
  CommutatorExpr e{{Rational(-1, 24), br(V2, br(V2, T))},
                   {Rational(1, 12), br(V1, br(V2, T))},
                   {Rational(1, 12), br(T, br(V2, T))}};
  e += Rational(1, m * m) * CommutatorExpr{{Rational(-1, 24), br(V1, br(V1, T))},
                                           {Rational(1, 12), br(T, br(V1, T))}};
  return e;
}

/// Alike five-stage nested scheme with two loops of M substeps over h/2.
inline CommutatorExpr alike5_nested(const Rational& lambda, int m) {
  return alike5_limit(lambda) + Rational(1, 4 * m * m) * fast_substep_excess();
}

/// Nested force-gradient scheme: the lambda = 1/6 limit with its
/// [V2,[T,V2]] term removed, plus the substep error.
inline CommutatorExpr nested_force_gradient(int m) {
  CommutatorExpr e{{Rational(-1, 72), br(V2, br(V1, V2))}};
  return e + Rational(1, 4 * m * m) * fast_substep_excess();
}

}  // namespace fgn::shadow::claims
