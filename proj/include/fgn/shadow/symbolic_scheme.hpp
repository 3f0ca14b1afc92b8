#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fgn/integrators/scheme.hpp"
#include "fgn/shadow/commutator.hpp"
#include "fgn/shadow/nc_series.hpp"

namespace fgn::shadow {

class SchemeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Product of exponentials exp(X_1) exp(X_2) ... with each X_k given as an
/// h-graded series. Under `commuting_potentials` everything is reduced
/// modulo [V1,V2] = 0.
struct SymbolicScheme {
  std::string name;
  std::vector<NcSeries> exponents;
  NcSeries hamiltonian{4};  // expected grade-1 part of the log
  bool commuting_potentials = false;
  SymbolNames names;

  int max_degree() const { return hamiltonian.max_degree(); }
};

/// How FULL kicks map onto generators: a single symbol V (printed "V", stored
/// as V1) or the sum V1 + V2.
enum class FullKickMapping { Auto, SingleSymbol, Split };

struct TranslationOptions {
  int max_degree = 4;
  bool commuting_potentials = false;
  FullKickMapping full_kick = FullKickMapping::Auto;
};

inline Rational to_rational(Fraction f) { return Rational(f.num(), f.den()); }

namespace detail {

inline NcSeries potential(Subset s, bool single, int n) {
  switch (s) {
    case Subset::Fast: return NcSeries::symbol(Symbol::V1, n);
    case Subset::Slow: return NcSeries::symbol(Symbol::V2, n);
    case Subset::Full: break;
  }
  if (single) return NcSeries::symbol(Symbol::V1, n);
  return NcSeries::symbol(Symbol::V1, n) + NcSeries::symbol(Symbol::V2, n);
}

// [V_S,[T,V_S]]
inline NcSeries force_gradient_term(Subset s, bool single, int n) {
  const NcSeries v = potential(s, single, n);
  const NcSeries t = NcSeries::symbol(Symbol::T, n);
  const NcSeries tv = t * v - v * t;
  return v * tv - tv * v;
}

// Exponent of one flat stage with step `scale` (in units of h).
inline NcSeries flat_exponent(const FlatStage& stage, const Rational& scale, bool single, int n) {
  if (const auto* d = std::get_if<Drift>(&stage))
    return NcSeries::symbol(Symbol::T, n, to_rational(d->a) * scale);
  const auto& k = std::get<Kick>(stage);
  NcSeries x = potential(k.subset, single, n) * (to_rational(k.b) * scale);
  if (k.c != Fraction{0})
    x += force_gradient_term(k.subset, single, n) * (to_rational(k.c) * scale * scale * scale);
  return x;
}

inline NcSeries reduce(const NcSeries& x, bool commuting) {
  return commuting ? x.normal_ordered() : x;
}

}  // namespace detail

/// Exact translation of a numerical scheme; inner loops are unrolled for
/// their concrete M.
inline SymbolicScheme symbolic(const SplittingScheme& scheme, const TranslationOptions& opt = {}) {
  const int n = opt.max_degree;
  const bool single = opt.full_kick == FullKickMapping::SingleSymbol ||
                      (opt.full_kick == FullKickMapping::Auto && is_single_rate(scheme));
  SymbolicScheme out{scheme.name, {}, NcSeries(n), opt.commuting_potentials,
                     single ? SymbolNames::single_rate() : SymbolNames::split()};
  out.hamiltonian = NcSeries::symbol(Symbol::T, n) + NcSeries::symbol(Symbol::V1, n);
  if (!single) out.hamiltonian += NcSeries::symbol(Symbol::V2, n);
  for (const auto& stage : scheme.stages) {
    if (const auto* loop = std::get_if<InnerLoop>(&stage)) {
      const Rational scale = to_rational(loop->time_fraction) / loop->repetitions;
      for (int rep = 0; rep < loop->repetitions; ++rep)
        for (const auto& s : loop->stages)
          out.exponents.push_back(detail::flat_exponent(s, scale, single, n));
    } else {
      out.exponents.push_back(detail::flat_exponent(fgn::detail::flatten(stage), 1, single, n));
    }
  }
  return out;
}

/// M -> infinity limit of the alike five-stage nested scheme:
///   e^{lambda V2} e^{(V1+T)/2} e^{(1-2 lambda) V2 + c [V2,[T,V2]]} e^{(V1+T)/2} e^{lambda V2}
/// with c = 1/72 when `with_force_gradient`, else 0.
inline SymbolicScheme alike5_limit(const Rational& lambda, bool with_force_gradient,
                                   int max_degree = 4, bool commuting_potentials = false) {
  const int n = max_degree;
  const NcSeries v2 = NcSeries::symbol(Symbol::V2, n);
  const NcSeries inner =
      (NcSeries::symbol(Symbol::V1, n) + NcSeries::symbol(Symbol::T, n)) * Rational(1, 2);
  NcSeries middle = v2 * (1 - 2 * lambda);
  if (with_force_gradient)
    middle += detail::force_gradient_term(Subset::Slow, false, n) * Rational(1, 72);
  SymbolicScheme out{with_force_gradient ? "nested-fg-limit" : "alike5-limit",
                     {v2 * lambda, inner, middle, inner, v2 * lambda},
                     NcSeries(n),
                     commuting_potentials,
                     SymbolNames::split()};
  out.hamiltonian = NcSeries::symbol(Symbol::T, n) + NcSeries::symbol(Symbol::V1, n) + v2;
  return out;
}

/// log of the ordered product of exp(exponent), reduced modulo [V1,V2] when
/// requested. Throws SchemeError if the grade-1 part is not the Hamiltonian.
inline NcSeries shadow_log(const SymbolicScheme& scheme) {
  const int n = scheme.max_degree();
  const bool comm = scheme.commuting_potentials;
  NcSeries product = NcSeries::one(n);
  for (const auto& x : scheme.exponents) {
    if (x.coefficient(Word{}) != 0)
      throw SchemeError("scheme '" + scheme.name + "': exponent has a grade-0 part");
    product = detail::reduce(product * detail::reduce(exp_truncated(x), comm), comm);
  }
  NcSeries log = detail::reduce(log_truncated(product), comm);
  if (log.grade(1) != detail::reduce(scheme.hamiltonian, comm))
    throw SchemeError("scheme '" + scheme.name + "' is inconsistent: grade-1 part is " +
                      log.grade(1).str(scheme.names) + ", expected " +
                      scheme.hamiltonian.str(scheme.names));
  return log;
}

/// Claimed shadow-log terms beyond H, keyed by grade (power of h).
using Claims = std::map<int, CommutatorExpr>;

/// shadow_log - H - sum_g expand(claim_g); empty iff every claim holds
/// exactly through max_degree (unclaimed grades are claimed to vanish).
inline NcSeries verify_claim(const SymbolicScheme& scheme, const Claims& claims) {
  const int n = scheme.max_degree();
  NcSeries residual = shadow_log(scheme) - scheme.hamiltonian;
  for (const auto& [g, expr] : claims) {
    if (g < 2 || g > n)
      throw SchemeError("claim for grade " + std::to_string(g) + " outside [2, " +
                        std::to_string(n) + "]");
    for (const auto& t : expr.terms())
      if (t.bracket.degree() != g)
        throw SchemeError("claim term " + t.bracket.str(scheme.names) + " is not of grade " +
                          std::to_string(g));
    residual -= expr.expand(n);
  }
  return detail::reduce(residual, scheme.commuting_potentials);
}

}  // namespace fgn::shadow
