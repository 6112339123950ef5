#include <gtest/gtest.h>

#include "dq/expr.hpp"
#include "dq/super_poly.hpp"
#include "support/random_inputs.hpp"

namespace dq {
namespace {

class SuperPolyTest : public ::testing::Test {
 protected:
  LayoutPtr l2 = Layout::phase_space(2);
  SuperPoly p(const char* s) const { return parse_super(s, l2); }
};

TEST_F(SuperPolyTest, OddSquareVanishes) { EXPECT_TRUE((p("eta1") * p("eta1")).is_zero()); }

TEST_F(SuperPolyTest, OddGeneratorsAnticommute) {
  EXPECT_TRUE((p("eta1") * p("eta2") + p("eta2") * p("eta1")).is_zero());
}

TEST_F(SuperPolyTest, CanonicalOrderAfterMovingPastEvenFactor) {
  SuperPoly prod = p("xi1*eta1") * p("xi2*eta2");
  ASSERT_EQ(prod.terms().size(), 1u);
  const auto& [key, coeff] = *prod.terms().begin();
  EXPECT_EQ(key.even, (Exponents{1, 1}));
  EXPECT_EQ(key.odd, 0b11u);
  EXPECT_EQ(coeff[0], Scalar(1));
}

TEST_F(SuperPolyTest, EvenDerivative) {
  EXPECT_EQ(deriv_even(p("xi1^2"), 0), p("2*xi1"));
  EXPECT_TRUE(deriv_even(p("eta1"), 0).is_zero());
  EXPECT_EQ(deriv_even(p("xi1*xi2*eta1"), 1), p("xi1*eta1"));
}

TEST_F(SuperPolyTest, LeftOddDerivative) {
  EXPECT_EQ(deriv_odd_left(p("eta1*eta2"), 0), p("eta2"));
  EXPECT_EQ(deriv_odd_left(p("eta1*eta2"), 1), p("-eta1"));
  EXPECT_TRUE(deriv_odd_left(p("xi1"), 0).is_zero());
}

TEST_F(SuperPolyTest, RightOddDerivative) {
  EXPECT_EQ(deriv_odd_right(p("eta1*eta2"), 0), p("-eta2"));
  EXPECT_EQ(deriv_odd_right(p("eta1*eta2"), 1), p("eta1"));
}

TEST_F(SuperPolyTest, IndexOutOfRange) {
  EXPECT_THROW(deriv_even(p("xi1"), 2), InputError);
  EXPECT_THROW(deriv_odd_left(p("xi1"), -1), InputError);
}

TEST_F(SuperPolyTest, MismatchedOperandsAreRejected) {
  SuperPoly a = p("xi1");
  SuperPoly b = parse_super("xi1", Layout::phase_space(3));
  EXPECT_THROW(a * b, InputError);
  SuperPoly c = parse_super("xi1", l2, 2);
  EXPECT_THROW(a + c, InputError);
}

TEST(TaylorShift, Examples) {
  auto l1 = Layout::phase_space(1);
  EXPECT_EQ(taylor_shift(Polynomial::variable(1, 0), {Scalar(0)}), parse_super("xi1", l1));
  EXPECT_EQ(taylor_shift(parse_polynomial("x1^2", 1), {Scalar(1)}),
            parse_super("1 + 2*xi1 + xi1^2", l1));
  EXPECT_EQ(taylor_shift(parse_polynomial("x1*x2", 2), {Scalar(1), Scalar(2)}),
            parse_super("2 + 2*xi1 + xi2 + xi1*xi2", Layout::phase_space(2)));
}

TEST(TaylorShift, AtOriginRenamesVariables) {
  testing::RandomInputs rnd(21);
  for (int t = 0; t < 20; ++t) {
    Polynomial f = rnd.polynomial(3, 3);
    SuperPoly s = taylor_shift(f, std::vector<Scalar>(3));
    Polynomial back(3);
    for (const auto& [k, c] : s.terms()) back.add_term(k.even, c[0]);
    EXPECT_EQ(back, f);
  }
}

class SuperPolyProperties : public ::testing::TestWithParam<int> {};

TEST_P(SuperPolyProperties, GradedCommutativityAssociativityLeibniz) {
  const int d = GetParam();
  auto layout = Layout::phase_space(d);
  testing::RandomInputs rnd(100 + d);
  for (int t = 0; t < 40; ++t) {
    Parity pa = rnd.uniform(0, 1) ? Parity::odd : Parity::even;
    Parity pb = rnd.uniform(0, 1) ? Parity::odd : Parity::even;
    SuperPoly a = rnd.homogeneous(layout, pa, 3, 2, 3, true);
    SuperPoly b = rnd.homogeneous(layout, pb, 3, 2, 3, true);
    SuperPoly c = rnd.homogeneous(layout, Parity::even, 3, 2, 3, true);
    const Scalar sign(pa == Parity::odd && pb == Parity::odd ? -1 : 1);
    EXPECT_EQ(a * b, sign * (b * a));
    EXPECT_EQ((a * b) * c, a * (b * c));
    for (int i = 0; i < d; ++i) {
      EXPECT_EQ(deriv_even(a * b, i), deriv_even(a, i) * b + a * deriv_even(b, i));
      const Scalar sa(pa == Parity::odd ? -1 : 1);
      EXPECT_EQ(deriv_odd_left(a * b, i), deriv_odd_left(a, i) * b + sa * (a * deriv_odd_left(b, i)));
      EXPECT_TRUE(deriv_odd_left(deriv_odd_left(a, i), i).is_zero());
      const Scalar sr(pa == Parity::odd ? 1 : -1);
      EXPECT_EQ(deriv_odd_right(a, i), sr * deriv_odd_left(a, i));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, SuperPolyProperties, ::testing::Values(1, 2, 3));

TEST(Layout, RejectsTooManyOddGenerators) {
  std::vector<Variable> vars;
  for (int k = 0; k < 65; ++k) vars.push_back({"e" + std::to_string(k), Parity::odd});
  EXPECT_THROW(Layout{vars}, InputError);
}

}  // namespace
}  // namespace dq
