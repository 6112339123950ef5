#include <gtest/gtest.h>

#include "dq/expr.hpp"
#include "support/random_inputs.hpp"

namespace dq {
namespace {

TEST(Expr, SumOfProductAndRational) {
  ExprPtr e = parse_expr("x1*x2 + 3/2");
  ASSERT_EQ(e->kind, Expr::Kind::add);
  EXPECT_EQ(e->args[0]->kind, Expr::Kind::mul);
  EXPECT_EQ(e->args[1]->kind, Expr::Kind::div);
  Polynomial p = parse_polynomial("x1*x2 + 3/2", 2);
  EXPECT_EQ(p.evaluate({Scalar(2), Scalar(5)}), Scalar(Rational(23, 2)));
}

TEST(Expr, ImaginaryUnitSquared) {
  EXPECT_TRUE(parse_super("I^2 + 1", Layout::phase_space(1)).is_zero());
}

TEST(Expr, OddSquareNormalizesToZero) {
  EXPECT_TRUE(parse_super("eta1*eta1", Layout::phase_space(1)).is_zero());
}

TEST(Expr, PrecedenceAndUnaryMinus) {
  auto l = Layout::phase_space(1);
  EXPECT_EQ(parse_super("-xi1^2", l), Scalar(-1) * parse_super("xi1*xi1", l));
  EXPECT_EQ(parse_super("2*(xi1 + 1)^2 - 4*xi1", l), parse_super("2*xi1^2 + 2", l));
  EXPECT_EQ(parse_super("hbar*hbar*hbar*hbar", l, 3), SuperPoly(l, 3));
}

TEST(Expr, ErrorsCarryPositions) {
  try {
    parse_polynomial("x1 + * x2", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  try {
    parse_polynomial("x1 + y", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_polynomial("(x1", 2), ParseError);
  EXPECT_THROW(parse_polynomial("x1/x2", 2), ParseError);
  EXPECT_THROW(parse_polynomial("x1/0", 2), InputError);
  EXPECT_THROW(parse_polynomial("x3", 2), ParseError);
  EXPECT_THROW(parse_polynomial("x1^", 2), ParseError);
  EXPECT_THROW(parse_polynomial("", 2), ParseError);
}

TEST(Expr, PrinterIsIdempotentOnCanonicalForms) {
  testing::RandomInputs rnd(31);
  for (int d = 1; d <= 3; ++d) {
    auto layout = Layout::phase_space(d);
    for (int t = 0; t < 30; ++t) {
      SuperPoly a = rnd.homogeneous(layout, t % 2 ? Parity::odd : Parity::even, 4, 3, 4, true);
      std::string once = to_expr(a);
      SuperPoly back = parse_super(once, layout, 3);
      EXPECT_EQ(back, a) << once;
      EXPECT_EQ(to_expr(back), once);
    }
  }
}

TEST(Expr, PrintsComplexCoefficients) {
  auto l = Layout::phase_space(1);
  EXPECT_EQ(to_expr(parse_super("(1 - 2*I)*xi1 - I*hbar", l)), "-I*hbar + (1-2*I)*xi1");
  EXPECT_EQ(to_expr(SuperPoly(l)), "0");
}

}  // namespace
}  // namespace dq
