#include <gtest/gtest.h>

#include "dq/expr.hpp"
#include "dq/multivector.hpp"
#include "support/random_inputs.hpp"

namespace dq {
namespace {

TEST(Alternating, AntisymmetricAccess) {
  Multivector a(3, 2);
  a.add({2, 0}, parse_polynomial("x2", 3));
  EXPECT_EQ(a({0, 2}), -parse_polynomial("x2", 3));
  EXPECT_EQ(a({2, 0}), parse_polynomial("x2", 3));
  EXPECT_TRUE(a({1, 1}).is_zero());
  EXPECT_THROW(a({0}), InputError);
  EXPECT_THROW(a({0, 3}), InputError);
}

TEST(Alternating, ZeroComponentsAreDropped) {
  Multivector a(2, 1);
  a.add({0}, parse_polynomial("x1", 2));
  a.add({0}, parse_polynomial("-x1", 2));
  EXPECT_TRUE(a.is_zero());
}

TEST(ExteriorCalculus, DSquaredVanishes) {
  testing::RandomInputs rnd(41);
  for (int t = 0; t < 20; ++t) {
    int d = rnd.uniform(1, 4);
    int q = rnd.uniform(0, d);
    DifferentialForm w = rnd.form(d, q, 3);
    EXPECT_TRUE(exterior_derivative(exterior_derivative(w)).is_zero());
  }
}

TEST(ExteriorCalculus, LieDerivativeOfFunctionIsDirectionalDerivative) {
  testing::RandomInputs rnd(42);
  for (int t = 0; t < 20; ++t) {
    Multivector x = rnd.multivector(3, 1, 2);
    Polynomial f = rnd.polynomial(3, 3);
    Polynomial expected(3);
    for (int i = 0; i < 3; ++i) expected += x({i}) * f.derivative(i);
    EXPECT_EQ(as_function(lie_derivative(x, DifferentialForm::function(f))), expected);
  }
}

TEST(ExteriorCalculus, LieDerivativeOfOneFormInCoordinates) {
  testing::RandomInputs rnd(43);
  for (int t = 0; t < 20; ++t) {
    Multivector x = rnd.multivector(3, 1, 2);
    DifferentialForm w = rnd.form(3, 1, 2);
    DifferentialForm got = lie_derivative(x, w);
    for (int k = 0; k < 3; ++k) {
      Polynomial expected(3);
      for (int j = 0; j < 3; ++j)
        expected += x({j}) * w({k}).derivative(j) + w({j}) * x({j}).derivative(k);
      EXPECT_EQ(got({k}), expected);
    }
  }
}

TEST(ExteriorCalculus, LieDerivativeCommutesWithD) {
  testing::RandomInputs rnd(44);
  for (int t = 0; t < 20; ++t) {
    Multivector x = rnd.multivector(3, 1, 2);
    DifferentialForm w = rnd.form(3, rnd.uniform(0, 2), 2);
    EXPECT_EQ(exterior_derivative(lie_derivative(x, w)), lie_derivative(x, exterior_derivative(w)));
  }
}

TEST(ExteriorCalculus, InteriorProductOnTwoForm) {
  DifferentialForm w(2, 2);
  w.add({0, 1}, Polynomial(2, Scalar(1)));
  Multivector x(2, 1);
  x.add({0}, Polynomial(2, Scalar(1)));
  DifferentialForm r = interior(x, w);
  EXPECT_EQ(r({1}), Polynomial(2, Scalar(1)));
  EXPECT_TRUE(r({0}).is_zero());
}

TEST(Bivector, SharpAndPairing) {
  Multivector a(2, 2);
  a.add({0, 1}, Polynomial(2, Scalar(1)));
  DifferentialForm dx1 = differential(parse_polynomial("x1", 2));
  DifferentialForm dx2 = differential(parse_polynomial("x2", 2));
  EXPECT_EQ(sharp(a, dx1)({1}), Polynomial(2, Scalar(1)));
  EXPECT_EQ(bivector_pairing(a, dx1, dx2), Polynomial(2, Scalar(1)));
  EXPECT_EQ(bivector_pairing(a, dx2, dx1), Polynomial(2, Scalar(-1)));
}

}  // namespace
}  // namespace dq
