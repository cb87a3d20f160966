#include "liegeo/forms.hpp"

#include "liegeo/lie_algebra.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

namespace liegeo {
namespace {

using testing::Uniform;

TEST(InvariantForm, ComponentCountsMatchBinomials) {
  EXPECT_EQ(InvariantForm<double>(3, 0).component_count(), 1u);
  EXPECT_EQ(InvariantForm<double>(3, 1).component_count(), 3u);
  EXPECT_EQ(InvariantForm<double>(3, 2).component_count(), 3u);
  EXPECT_EQ(InvariantForm<double>(3, 3).component_count(), 1u);
  EXPECT_EQ(InvariantForm<double>(4, 2).component_count(), 6u);
  EXPECT_EQ(InvariantForm<double>(5, 3).component_count(), 10u);
}

TEST(InvariantForm, RejectsBadShapes) {
  EXPECT_THROW(InvariantForm<double>(0, 0), std::invalid_argument);
  EXPECT_THROW(InvariantForm<double>(3, -1), std::invalid_argument);
  EXPECT_THROW(InvariantForm<double>(3, 4), std::invalid_argument);
  EXPECT_THROW(InvariantForm<double>::basis(3, {1, 1}), std::invalid_argument);
  EXPECT_THROW(InvariantForm<double>::basis(3, {2, 1}), std::invalid_argument);
  EXPECT_THROW(InvariantForm<double>::basis(3, {0, 3}), std::invalid_argument);
}

TEST(InvariantForm, AntisymmetricEvaluation) {
  const auto w = InvariantForm<Rational>::basis(4, {0, 2, 3});
  EXPECT_EQ(w(std::vector<int>{0, 2, 3}), Rational(1));
  EXPECT_EQ(w(std::vector<int>{2, 0, 3}), Rational(-1));
  EXPECT_EQ(w(std::vector<int>{3, 0, 2}), Rational(1));
  EXPECT_EQ(w(std::vector<int>{0, 2, 2}), Rational(0));
  EXPECT_EQ(w(std::vector<int>{0, 1, 3}), Rational(0));
  EXPECT_THROW(w(std::vector<int>{0, 1}), std::invalid_argument);
}

TEST(InvariantForm, CoefficientAccessRoundTrips) {
  InvariantForm<Rational> w(4, 2);
  w.coefficient({1, 3}) = Rational(5, 7);
  EXPECT_EQ(w.coefficient({1, 3}), Rational(5, 7));
  EXPECT_EQ(w(std::vector<int>{3, 1}), Rational(-5, 7));
  EXPECT_FALSE(w.is_zero());
  w.coefficient({1, 3}) = Rational(0);
  EXPECT_TRUE(w.is_zero());
}

TEST(InvariantForm, ToStringRendersSparseSums) {
  InvariantForm<Rational> w(3, 2);
  w.coefficient({0, 1}) = Rational(-2);
  EXPECT_EQ(w.to_string(), "-2 e1^e2");
  w.coefficient({1, 2}) = Rational(1, 3);
  EXPECT_EQ(w.to_string(), "-2 e1^e2 + 1/3 e2^e3");
  EXPECT_EQ(InvariantForm<Rational>(3, 1).to_string(), "0");
}

TEST(Wedge, MatchesHandComputedProducts) {
  const auto e0 = InvariantForm<Rational>::basis(3, {0});
  const auto e1 = InvariantForm<Rational>::basis(3, {1});
  const auto e01 = wedge(e0, e1);
  EXPECT_EQ(e01.coefficient({0, 1}), Rational(1));
  const auto e10 = wedge(e1, e0);
  EXPECT_EQ(e10.coefficient({0, 1}), Rational(-1));
  EXPECT_TRUE(wedge(e0, e0).is_zero());
}

TEST(Wedge, DegreeOverflowThrows) {
  const auto a = InvariantForm<double>::basis(3, {0, 1});
  const auto b = InvariantForm<double>::basis(3, {1, 2});
  EXPECT_THROW(wedge(a, b), std::invalid_argument);
}

TEST(Wedge, GradedCommutativityOnRandomForms) {
  Uniform u(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4;
    const int p = u.integer(0, 2);
    const int q = u.integer(0, n - p > 2 ? 2 : n - p);
    const auto a = testing::random_rational_form(u, n, p);
    const auto b = testing::random_rational_form(u, n, q);
    InvariantForm<Rational> ab = wedge(a, b);
    InvariantForm<Rational> ba = wedge(b, a);
    if ((p * q) % 2 != 0) ba *= Rational(-1);
    EXPECT_TRUE((ab - ba).is_zero()) << "trial " << trial;
  }
}

TEST(Wedge, AssociativityOnRandomForms) {
  Uniform u(102);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4;
    const auto a = testing::random_rational_form(u, n, 1);
    const auto b = testing::random_rational_form(u, n, 1);
    const auto c = testing::random_rational_form(u, n, u.integer(1, 2));
    const auto left = wedge(wedge(a, b), c);
    const auto right = wedge(a, wedge(b, c));
    EXPECT_TRUE((left - right).is_zero()) << "trial " << trial;
  }
}

TEST(Wedge, BilinearityOnRandomForms) {
  Uniform u(103);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4;
    const auto a = testing::random_rational_form(u, n, 1);
    const auto b = testing::random_rational_form(u, n, 2);
    const auto c = testing::random_rational_form(u, n, 2);
    const Rational s = testing::random_rational(u);
    const auto lhs = wedge(a, s * b + c);
    const auto rhs = s * wedge(a, b) + wedge(a, c);
    EXPECT_TRUE((lhs - rhs).is_zero()) << "trial " << trial;
  }
}

TEST(Differential, StandardFrameCoframeEquations) {
  // d e^k = -2 e^i ^ e^j for (i, j, k) cyclic on [e1,e2] = 2 e3 (cyclic).
  const LieAlgebraFrame L = LieAlgebraFrame::su2();
  const auto de2 = ce_differential(L, InvariantForm<Rational>::basis(3, {2}));
  EXPECT_EQ(de2.coefficient({0, 1}), Rational(-2));
  EXPECT_EQ(de2.coefficient({0, 2}), Rational(0));
  EXPECT_EQ(de2.coefficient({1, 2}), Rational(0));
  const auto de0 = ce_differential(L, InvariantForm<Rational>::basis(3, {0}));
  EXPECT_EQ(de0.coefficient({1, 2}), Rational(-2));
  const auto de1 = ce_differential(L, InvariantForm<Rational>::basis(3, {1}));
  EXPECT_EQ(de1.coefficient({0, 2}), Rational(2));  // -(-2) from index ordering
}

TEST(Differential, ConstantsAreClosed) {
  const LieAlgebraFrame L = testing::su2_plus_line();
  const auto d_one = ce_differential(L, InvariantForm<Rational>::one(4));
  EXPECT_TRUE(d_one.is_zero());
}

TEST(Differential, TopDegreeThrows) {
  const LieAlgebraFrame L = LieAlgebraFrame::su2();
  const auto vol = InvariantForm<Rational>::basis(3, {0, 1, 2});
  EXPECT_THROW(ce_differential(L, vol), std::invalid_argument);
}

TEST(Differential, SquaresToZeroOnRandomForms) {
  Uniform u(104);
  const LieAlgebraFrame frames[2] = {LieAlgebraFrame::su2(), testing::su2_plus_line()};
  for (int trial = 0; trial < 60; ++trial) {
    const LieAlgebraFrame& L = frames[trial % 2];
    const int n = L.dim();
    const int p = u.integer(0, n - 2);
    const auto w = testing::random_rational_form(u, n, p);
    const auto ddw = ce_differential(L, ce_differential(L, w));
    EXPECT_TRUE(ddw.is_zero()) << "trial " << trial << " degree " << p;
  }
}

TEST(Differential, LeibnizRuleOnRandomForms) {
  // d(a ^ b) = da ^ b + (-1)^deg(a) a ^ db.
  Uniform u(105);
  const LieAlgebraFrame L = testing::su2_plus_line();
  for (int trial = 0; trial < 50; ++trial) {
    const int p = u.integer(0, 1);
    const int q = u.integer(0, 1);
    const auto a = testing::random_rational_form(u, 4, p);
    const auto b = testing::random_rational_form(u, 4, q);
    const auto lhs = ce_differential(L, wedge(a, b));
    InvariantForm<Rational> rhs = wedge(ce_differential(L, a), b);
    InvariantForm<Rational> cross = wedge(a, ce_differential(L, b));
    if (p % 2 != 0) cross *= Rational(-1);
    rhs += cross;
    EXPECT_TRUE((lhs - rhs).is_zero()) << "trial " << trial;
  }
}

TEST(LieAlgebraFrame, StructureValidationAndTransport) {
  const LieAlgebraFrame L = LieAlgebraFrame::su2();
  EXPECT_TRUE(L.check_structure().ok());
  EXPECT_TRUE(L.opposite().check_structure().ok());
  EXPECT_TRUE(testing::su2_plus_line().check_structure().ok());

  // Transport through a generic invertible map keeps Jacobi (same algebra in
  // a different basis).
  const std::vector<std::vector<double>> basis = {
      {1.0, 0.25, 0.0}, {-0.5, 1.0, 0.125}, {0.0, 0.3, 1.0}};
  EXPECT_TRUE(L.transported(basis).check_structure(1e-10).ok());
}

TEST(LieAlgebraFrame, BracketMatchesStructureConstants) {
  const LieAlgebraFrame L = LieAlgebraFrame::su2();
  const std::vector<double> x = {1.0, 0.0, 0.0};
  const std::vector<double> y = {0.0, 1.0, 0.0};
  const std::vector<double> b = L.bracket(x, y);
  EXPECT_DOUBLE_EQ(b[0], 0.0);
  EXPECT_DOUBLE_EQ(b[1], 0.0);
  EXPECT_DOUBLE_EQ(b[2], 2.0);
}

TEST(LieAlgebraFrame, FromJsonRoundTripAndValidation) {
  // 1-based indices in the interchange document; this is the standard frame.
  const std::string good = R"({
    "dim": 3,
    "brackets": [
      [1, 2, [0, 0, 2]],
      [2, 3, [2, 0, 0]],
      [3, 1, [0, 2, 0]]
    ]
  })";
  const LieAlgebraFrame L = LieAlgebraFrame::from_json(good);
  EXPECT_EQ(L.dim(), 3);
  EXPECT_DOUBLE_EQ(L.c(2, 0, 1), 2.0);
  EXPECT_DOUBLE_EQ(L.c(2, 1, 0), -2.0);

  // [e3,e1] = 2 e1 breaks Jacobi: [[e3,e1],e2] contributes 4 e3 with nothing
  // to cancel it.
  const std::string jacobi_breaker = R"({
    "dim": 3,
    "brackets": [
      [1, 2, [0, 0, 2]],
      [2, 3, [2, 0, 0]],
      [3, 1, [2, 0, 0]]
    ]
  })";
  EXPECT_THROW(LieAlgebraFrame::from_json(jacobi_breaker), std::invalid_argument);
  EXPECT_THROW(LieAlgebraFrame::from_json("not json"), std::invalid_argument);
  EXPECT_THROW(LieAlgebraFrame::from_json(R"({"dim": 0, "brackets": []})"),
               std::invalid_argument);
}

}  // namespace
}  // namespace liegeo
