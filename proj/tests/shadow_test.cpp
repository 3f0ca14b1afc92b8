#include "fgn/integrators/builders.hpp"
#include "fgn/shadow/claims.hpp"
#include "fgn/shadow/symbolic_scheme.hpp"

#include "gtest/gtest.h"

namespace fgn::shadow {
namespace {

using claims::T;
using claims::V;
using claims::V1;
using claims::V2;

TEST(Symbolic, OmelyanExponentsAreExact) {
  const SymbolicScheme s = symbolic(schemes::omelyan5());
  ASSERT_EQ(s.exponents.size(), 5u);
  EXPECT_EQ(s.exponents[0], NcSeries::symbol(Symbol::V1, 4, Rational(1, 6)));
  EXPECT_EQ(s.exponents[1], NcSeries::symbol(Symbol::T, 4, Rational(1, 2)));
  EXPECT_EQ(s.exponents[2], NcSeries::symbol(Symbol::V1, 4, Rational(2, 3)));
}

TEST(Symbolic, ForceGradientStageCarriesGradeThree) {
  const SymbolicScheme s = symbolic(schemes::omelyan5_fg());
  const NcSeries expected = NcSeries::symbol(Symbol::V1, 4, Rational(2, 3)) +
                            br(V, br(T, V)).expand(4) * Rational(1, 72);
  EXPECT_EQ(s.exponents[2], expected);
}

TEST(Symbolic, InnerLoopIsUnrolled) {
  const SymbolicScheme s = symbolic(schemes::nested_leapfrog(3));
  EXPECT_EQ(s.exponents.size(), 2u + 3u * 3u);
  EXPECT_EQ(s.exponents[1], NcSeries::symbol(Symbol::V1, 4, Rational(1, 6)));
  EXPECT_EQ(s.exponents[2], NcSeries::symbol(Symbol::T, 4, Rational(1, 3)));
}

TEST(ShadowLog, DriftOutsideLeapfrog) {
  const NcSeries log = shadow_log(symbolic(schemes::leapfrog_drift_outside()));
  EXPECT_TRUE(log.grade(2).is_zero());
  EXPECT_EQ(log.grade(3), claims::leapfrog_drift_outside().expand(4));
}

TEST(ShadowLog, KickOutsideLeapfrog) {
  const NcSeries log = shadow_log(symbolic(schemes::leapfrog()));
  EXPECT_EQ(log.grade(3), claims::leapfrog_kick_outside().expand(4));
}

TEST(ShadowLog, OmelyanFiveStage) {
  const NcSeries log = shadow_log(symbolic(schemes::omelyan5()));
  EXPECT_EQ(log.grade(3), claims::omelyan5().expand(4));
}

TEST(ShadowLog, PalindromicBuildersHaveNoEvenGrades) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& scheme :
         {schemes::leapfrog(), schemes::leapfrog_drift_outside(), schemes::omelyan5(),
          schemes::omelyan5_fg(), schemes::nested_leapfrog(m),
          schemes::alike5_nested(Fraction{1, 6}, m), schemes::alike5_nested(Fraction{1, 4}, m),
          schemes::nested_force_gradient(m)}) {
      const NcSeries log = shadow_log(symbolic(scheme));
      EXPECT_TRUE(log.grade(2).is_zero()) << scheme.name << " M=" << m;
      EXPECT_TRUE(log.grade(4).is_zero()) << scheme.name << " M=" << m;
    }
  }
}

TEST(ShadowLog, NonPalindromicSchemeHasGradeTwo) {
  const SplittingScheme lie{"lie", {Drift{1}, Kick{Subset::Full, 1, 0}}, 1};
  const NcSeries log = shadow_log(symbolic(lie));
  EXPECT_EQ(log.grade(2), br(T, V).expand(4) * Rational(1, 2));
}

TEST(ShadowLog, InconsistentSchemeIsRejected) {
  SymbolicScheme s = symbolic(schemes::leapfrog());
  s.exponents.pop_back();
  EXPECT_THROW(shadow_log(s), SchemeError);
}

TEST(VerifyClaim, OmelyanForceGradientIsFourthOrder) {
  const NcSeries r = verify_claim(symbolic(schemes::omelyan5_fg()), {});
  EXPECT_TRUE(r.is_zero()) << r.str();
}

TEST(VerifyClaim, WrongClaimLeavesResidual) {
  const Claims wrong{{3, CommutatorExpr{{Rational(-1, 71), br(V, br(T, V))}}}};
  EXPECT_FALSE(verify_claim(symbolic(schemes::omelyan5()), wrong).is_zero());
}

TEST(VerifyClaim, RejectsMisgradedClaim) {
  const Claims bad{{2, CommutatorExpr{{Rational(1), br(V, br(T, V))}}}};
  EXPECT_THROW(verify_claim(symbolic(schemes::omelyan5()), bad), SchemeError);
}

class LimitTheorem : public testing::TestWithParam<std::pair<int, int>> {};

TEST_P(LimitTheorem, FreeAlgebra) {
  const Rational lambda(GetParam().first, GetParam().second);
  const NcSeries r = verify_claim(alike5_limit(lambda, false), {{3, claims::alike5_limit(lambda)}});
  EXPECT_TRUE(r.is_zero()) << r.str();
}

TEST_P(LimitTheorem, CommutingPotentials) {
  const Rational lambda(GetParam().first, GetParam().second);
  const NcSeries r = verify_claim(alike5_limit(lambda, false, 4, true),
                                  {{3, claims::alike5_limit_commuting(lambda)}});
  EXPECT_TRUE(r.is_zero()) << r.str();
}

INSTANTIATE_TEST_SUITE_P(Lambdas, LimitTheorem,
                         testing::Values(std::pair{1, 6}, std::pair{1, 4}, std::pair{1, 3},
                                         std::pair{1, 2}));

TEST(VerifyClaim, LimitAtOneSixthCommuting) {
  const NcSeries r = verify_claim(alike5_limit(Rational(1, 6), false, 4, true),
                                  {{3, CommutatorExpr{{Rational(-1, 72), br(V2, br(T, V2))}}}});
  EXPECT_TRUE(r.is_zero()) << r.str();
}

TEST(VerifyClaim, NestedForceGradientLimitIsFourthOrder) {
  const NcSeries r = verify_claim(alike5_limit(Rational(1, 6), true, 4, true), {});
  EXPECT_TRUE(r.is_zero()) << r.str();
  // Without [V1,V2] = 0 only the pure potential commutator survives.
  const NcSeries free = verify_claim(alike5_limit(Rational(1, 6), true), {});
  EXPECT_EQ(free, br(V2, br(V1, V2)).expand(4) * Rational(-1, 72));
}

TEST(VerifyClaim, NestedLeapfrogFiniteM) {
  for (int m = 1; m <= 3; ++m) {
    const NcSeries r =
        verify_claim(symbolic(schemes::nested_leapfrog(m)), {{3, claims::nested_leapfrog(m)}});
    EXPECT_TRUE(r.is_zero()) << "M=" << m << ": " << r.str();
  }
}

TEST(VerifyClaim, AlikeAndNestedForceGradientFiniteM) {
  for (int m = 1; m <= 3; ++m) {
    for (const Rational& lambda : {Rational(1, 6), Rational(1, 4)}) {
      const Fraction f{static_cast<std::int64_t>(numerator(lambda)),
                       static_cast<std::int64_t>(denominator(lambda))};
      const NcSeries r = verify_claim(symbolic(schemes::alike5_nested(f, m)),
                                      {{3, claims::alike5_nested(lambda, m)}});
      EXPECT_TRUE(r.is_zero()) << "M=" << m << ": " << r.str();
    }
    const NcSeries r = verify_claim(symbolic(schemes::nested_force_gradient(m)),
                                    {{3, claims::nested_force_gradient(m)}});
    EXPECT_TRUE(r.is_zero()) << "M=" << m << ": " << r.str();
  }
}

TEST(VerifyClaim, FiniteMExcessScalesAsInverseSquare) {
  const NcSeries limit = shadow_log(alike5_limit(Rational(1, 6), false)).grade(3);
  std::vector<NcSeries> excess;
  for (int m = 1; m <= 3; ++m)
    excess.push_back(shadow_log(symbolic(schemes::alike5_nested(Fraction{1, 6}, m))).grade(3) -
                     limit);
  EXPECT_FALSE(excess[0].is_zero());
  EXPECT_EQ(excess[0], excess[1] * Rational(4));
  EXPECT_EQ(excess[0], excess[2] * Rational(9));
}

}  // namespace
}  // namespace fgn::shadow
