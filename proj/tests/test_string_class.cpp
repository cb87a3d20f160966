#include "liegeo/string_class.hpp"

#include "liegeo/lie_algebra.hpp"
#include "liegeo/metric.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace liegeo {
namespace {

using testing::Uniform;

TEST(StringClassParsing, RoundTripsAndAnchorsArePreserved) {
  const char* good[] = {"L", "dD4", "R", "L+3", "dD4-1", "R+17", "L-100"};
  for (const char* text : good) {
    const StringClass cls = StringClass::parse(text);
    EXPECT_EQ(cls.to_string(), std::string(text)) << text;
  }
  // "+0" is omitted when printing but accepted when parsing.
  EXPECT_EQ(StringClass::parse("R+0").to_string(), "R");
  // Printing keeps the anchor even though equality works on normal forms.
  const StringClass as_left = StringClass(StringClass::Anchor::left_framing, 2);
  EXPECT_EQ(as_left.to_string(), "L+2");
  EXPECT_EQ(as_left, StringClass::right_framing());
}

TEST(StringClassParsing, RejectsMalformedText) {
  const char* bad[] = {"",   "X",    "l",   " L",  "L ",  "L3",  "L+",
                       "R-", "dD4+", "L++1", "dD", "dD41", "R+2x"};
  for (const char* text : bad) {
    EXPECT_THROW(StringClass::parse(text), std::invalid_argument) << "'" << text << "'";
  }
}

TEST(StringClassTorsor, AnchorsOffsetsAndDifferences) {
  const StringClass L = StringClass::left_framing();
  const StringClass D = StringClass::disk_bounding();
  const StringClass R = StringClass::right_framing();
  EXPECT_EQ(L.left_offset(), 0);
  EXPECT_EQ(D.left_offset(), 1);
  EXPECT_EQ(R.left_offset(), 2);
  EXPECT_EQ(R.right_offset(), 0);
  EXPECT_EQ(L.right_offset(), -2);
  EXPECT_EQ(L.shifted(2), R);
  EXPECT_EQ(D, L.shifted(1));
  EXPECT_EQ(difference(R, L), 2);
  EXPECT_EQ(difference(L, R), -2);
  EXPECT_NE(L, R);
  EXPECT_EQ(StringClass(StringClass::Anchor::disk_bounding, 1), R);
}

TEST(Chirality, NamesParseAndReject) {
  EXPECT_EQ(chirality_name(Chirality::left), "left");
  EXPECT_EQ(chirality_name(Chirality::right), "right");
  EXPECT_EQ(parse_chirality("left"), Chirality::left);
  EXPECT_EQ(parse_chirality("right"), Chirality::right);
  EXPECT_THROW(parse_chirality("Left"), std::invalid_argument);
  EXPECT_THROW(parse_chirality(""), std::invalid_argument);
}

TEST(StringClassIntegral, RoundMetricAnchorsAreMinusOneZeroOne) {
  const Rational one(1);
  EXPECT_EQ(string_class_integral(StringClass::left_framing(), one, one), Rational(-1));
  EXPECT_EQ(string_class_integral(StringClass::disk_bounding(), one, one), Rational(0));
  EXPECT_EQ(string_class_integral(StringClass::right_framing(), one, one), Rational(1));
  // Same values through the general-Gram frame-trace overload.
  const auto g = InnerProductOnAlgebra<Rational>::identity(3);
  const LieAlgebraFrame L = LieAlgebraFrame::su2();
  EXPECT_EQ(string_class_integral(StringClass::left_framing(), L, g), Rational(-1));
  EXPECT_EQ(string_class_integral(StringClass::disk_bounding(), L, g), Rational(0));
  EXPECT_EQ(string_class_integral(StringClass::right_framing(), L, g), Rational(1));
}

TEST(StringClassIntegral, ShiftEquivarianceIsExact) {
  Uniform u(701);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational a1 = testing::random_positive_rational(u, 5);
    const Rational a2 = testing::random_positive_rational(u, 5);
    const StringClass base(StringClass::Anchor::disk_bounding, u.integer(-3, 3));
    const int j = u.integer(-5, 5);
    const Chirality ch = (trial % 2 == 0) ? Chirality::left : Chirality::right;
    const Rational lhs = string_class_integral(base.shifted(j), a1, a2, ch);
    const Rational rhs = string_class_integral(base, a1, a2, ch) + Rational(j);
    EXPECT_EQ(lhs, rhs) << "trial " << trial;
  }
}

TEST(StringClassIntegral, MatchesTwoParameterClosedForm) {
  const Rational grid[5] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                            Rational(5, 2)};
  for (const Rational& a1 : grid) {
    for (const Rational& a2 : grid) {
      const Rational want = testing::oracle::left_framing_integral<Rational>(a1, a2);
      EXPECT_EQ(string_class_integral(StringClass::left_framing(), a1, a2), want)
          << "a1=" << a1 << " a2=" << a2;
      EXPECT_EQ(string_class_integral(StringClass::right_framing(), a1, a2), want + Rational(2))
          << "a1=" << a1 << " a2=" << a2;
    }
  }
}

TEST(StringClassIntegral, BergerFamilyClosedFormsBothChiralities) {
  Uniform u(702);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational a1 = testing::random_positive_rational(u, 6);
    const Rational x = testing::oracle::berger_profile<Rational>(a1);
    const Rational one(1);
    using C = Chirality;
    EXPECT_EQ(string_class_integral(StringClass::left_framing(), a1, one, C::left), x - 2);
    EXPECT_EQ(string_class_integral(StringClass::disk_bounding(), a1, one, C::left), x - 1);
    EXPECT_EQ(string_class_integral(StringClass::right_framing(), a1, one, C::left), x);
    EXPECT_EQ(string_class_integral(StringClass::left_framing(), a1, one, C::right), -x);
    EXPECT_EQ(string_class_integral(StringClass::disk_bounding(), a1, one, C::right), one - x);
    EXPECT_EQ(string_class_integral(StringClass::right_framing(), a1, one, C::right),
              Rational(2) - x);
  }
}

TEST(StringClassIntegral, MirrorIdentityOnRandomGramMatrices) {
  // For any inner product, evaluating a class right-invariantly equals minus
  // the left-invariant integral of the mirror class (left_offset -> 2 - it).
  Uniform u(703);
  const LieAlgebraFrame L = LieAlgebraFrame::su2();
  for (int trial = 0; trial < 50; ++trial) {
    const InnerProductOnAlgebra<Rational> g(testing::random_rational_spd(u, 3));
    const StringClass cls(StringClass::Anchor::left_framing, u.integer(-4, 4));
    const StringClass mirror(StringClass::Anchor::left_framing, 2 - cls.left_offset());
    const Rational right = string_class_integral(cls, L, g, Chirality::right);
    const Rational left = string_class_integral(mirror, L, g, Chirality::left);
    EXPECT_EQ(right, -left) << "trial " << trial << " class " << cls.to_string();
  }
}

TEST(StringClassIntegral, NormalFormRouteAgreesWithFrameTraceRoute) {
  Uniform u(704);
  const LieAlgebraFrame L = LieAlgebraFrame::su2();
  for (int trial = 0; trial < 50; ++trial) {
    const InnerProductOnAlgebra<double> g(testing::random_double_spd(u, 3));
    const StringClass cls(StringClass::Anchor::disk_bounding, u.integer(-2, 2));
    const Chirality ch = (trial % 2 == 0) ? Chirality::left : Chirality::right;
    const double via_nf = string_class_integral_via_normal_form(cls, L, g, ch);
    const double via_trace = string_class_integral(cls, L, g, ch);
    EXPECT_NEAR(via_nf, via_trace, 1e-10) << "trial " << trial;
  }
}

TEST(StringClassIntegral, ScaleInvarianceThroughGeneralGramOverload) {
  Uniform u(705);
  const LieAlgebraFrame L = LieAlgebraFrame::su2();
  for (int trial = 0; trial < 50; ++trial) {
    const InnerProductOnAlgebra<Rational> g(testing::random_rational_spd(u, 3));
    // Any positive rational scale, square or not: the frame-trace route never
    // needs the square root of the determinant.
    const Rational eps = testing::random_positive_rational(u, 7);
    Matrix<Rational> scaled = g.gram();
    scaled *= eps;
    const StringClass cls(StringClass::Anchor::right_framing, u.integer(-3, 3));
    const Rational a = string_class_integral(cls, L, g);
    const Rational b = string_class_integral(cls, L, InnerProductOnAlgebra<Rational>(scaled));
    EXPECT_EQ(a, b) << "trial " << trial << " eps=" << eps;
  }
}

TEST(EInvariant, AnchorValuesAndTorsorStructure) {
  EXPECT_EQ(e_invariant(StringClass::left_framing()).to_string(), "23/24");
  EXPECT_EQ(e_invariant(StringClass::disk_bounding()).to_string(), "0");
  EXPECT_EQ(e_invariant(StringClass::right_framing()).to_string(), "1/24");

  // Shifting by 24 is invisible in Q/Z; 24 consecutive classes hit 24
  // distinct residues (the e-invariant is a torsor bijection onto (1/24)Z/Z).
  std::set<std::string> seen;
  for (int j = 0; j < 24; ++j) {
    const StringClass cls(StringClass::Anchor::left_framing, j);
    EXPECT_EQ(e_invariant(cls), e_invariant(cls.shifted(24))) << j;
    EXPECT_EQ(e_invariant(cls), e_invariant(cls.shifted(-24))) << j;
    seen.insert(e_invariant(cls).to_string());
  }
  EXPECT_EQ(seen.size(), 24u);
}

TEST(EInvariant, RationalModZReducesIntoUnitInterval) {
  EXPECT_EQ(RationalModZ(Rational(-1, 24)).to_string(), "23/24");
  EXPECT_EQ(RationalModZ(Rational(25, 24)), RationalModZ(Rational(1, 24)));
  EXPECT_EQ(RationalModZ(Rational(-7)).to_string(), "0");
  EXPECT_EQ(RationalModZ(Rational(3, 2)).representative(), Rational(1, 2));
}

TEST(CanonicalThreeForm, CoefficientAndHarmonicity) {
  const Rational a1(2);
  const Rational a2(1);
  const StringClass cls = StringClass::disk_bounding();
  const auto form = canonical_three_form(cls, a1, a2);
  const Rational integral = string_class_integral(cls, a1, a2);
  EXPECT_DOUBLE_EQ(form.coefficient({0, 1, 2}),
                   scalar_traits<Rational>::to_double(integral) / standard_frame_volume);

  // Invariant top-degree forms are harmonic; the canonical form must be.
  const LieAlgebraFrame L = LieAlgebraFrame::su2();
  const InnerProductOnAlgebra<double> g = squashed_metric<double>(2.0, 1.0);
  EXPECT_EQ(laplacian(L, g, form).max_abs_component(), 0.0);

  // At the round metric the disk-bounding form vanishes identically.
  const auto round_form = canonical_three_form(cls, Rational(1), Rational(1));
  EXPECT_EQ(round_form.max_abs_component(), 0.0);
}

}  // namespace
}  // namespace liegeo
