#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weildesc/error.hpp"
#include "weildesc/random.hpp"

using namespace weildesc;
using namespace fixtures;

namespace {

void expect_error(ErrorKind kind, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), kind) << err.what();
  }
}

}  // namespace

TEST(BaseArith, Examples) {
  EXPECT_EQ(base_arith(t(), t(), ArithOp::Mul), BaseElem(BasePoly::monomial({2}, 1)));
  const BaseElem inv = base_arith(q(1), t(), ArithOp::Div);
  EXPECT_TRUE(inv.num().is_constant());
  EXPECT_EQ(inv.den(), BasePoly::variable(0));
  // (t^2 - 1)/(t + 1) reduces to t - 1.
  const BaseElem frac(BasePoly::monomial({2}, 1) - BasePoly(Rational(1)), BasePoly::variable(0) + BasePoly(Rational(1)));
  const BaseElem r = base_arith(frac, q(1), ArithOp::Mul);
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r, t() - q(1));
  EXPECT_EQ(r.num(), BasePoly::variable(0) - BasePoly(Rational(1)));
}

TEST(BaseArith, DivisionByZero) {
  expect_error(ErrorKind::DivisionByZero, [] { base_arith(t(), q(0), ArithOp::Div); });
  expect_error(ErrorKind::DivisionByZero, [] { BaseElem(BasePoly(Rational(1)), BasePoly()); });
  expect_error(ErrorKind::DivisionByZero, [] { (void)q(0).inverse(); });
}

TEST(BaseArith, CanonicalForm) {
  // 2/(4t) and -1/(-2t) are the same element with the same representation.
  const BaseElem a(BasePoly(Rational(2)), BasePoly::monomial({1}, 4));
  const BaseElem b(BasePoly(Rational(-1)), BasePoly::monomial({1}, -2));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.num(), b.num());
  EXPECT_EQ(a.den(), b.den());
  EXPECT_GT(a.den().leading_coefficient(), 0);
  // Rational scalars never leak into the denominator's content.
  const BaseElem c = q(3, 7) / (t() + q(1));
  EXPECT_EQ(c * (t() + q(1)), q(3, 7));
}

TEST(BaseArith, MultivariateGcd) {
  // (t - s)(t + s) / ((t - s) s) = (t + s)/s.
  const BaseElem a = (t() - s()) * (t() + s());
  const BaseElem b = (t() - s()) * s();
  const BaseElem r = a / b;
  EXPECT_EQ(r.num(), (BasePoly::variable(0) + BasePoly::variable(1)));
  EXPECT_EQ(r.den(), BasePoly::variable(1));
}

TEST(BaseArith, Render) {
  const BaseField f = field_t();
  EXPECT_EQ(f.render(q(1) / (q(2) * t())), "1/(2*t)");
  EXPECT_EQ(f.render(t() * t() - q(1)), "t^2 - 1");
  EXPECT_EQ(f.render(q(-3, 2)), "-3/2");
  EXPECT_EQ(f.render((t() + q(1)) / (t() - q(1))), "(t + 1)/(t - 1)");
  EXPECT_EQ(f.render(q(0)), "0");
}

TEST(BaseDerive, Examples) {
  const BaseField f = field_t();
  EXPECT_EQ(base_derive(f, t(), "d"), q(1));
  EXPECT_EQ(base_derive(f, q(7, 3), "d"), q(0));
  // d(1/(2t)) = -1/(2t^2), computed by hand.
  const BaseElem expected(BasePoly(Rational(-1)), BasePoly::monomial({2}, 2));
  EXPECT_EQ(base_derive(f, q(1) / (q(2) * t()), "d"), expected);
  expect_error(ErrorKind::UnknownDerivation, [&] { base_derive(f, t(), "e"); });
}

TEST(BaseDerive, TwoVariables) {
  const BaseField f = field_ts();
  const BaseElem a = t() * t() * s();
  EXPECT_EQ(f.derive(a, "d1"), q(2) * t() * s());
  EXPECT_EQ(f.derive(a, "d2"), t() * t());
  // Non-standard images: d(t) = t^2 on Q(t).
  const BaseField g({"t"}, {BaseDerivation{"d", {t() * t()}}});
  EXPECT_EQ(g.derive(t().inverse(), 0), q(-1));
}

TEST(BaseField, Validation) {
  expect_error(ErrorKind::InvalidInput, [] { BaseField({"t", "t"}, {}); });
  expect_error(ErrorKind::InvalidInput, [] { BaseField({"t"}, {BaseDerivation{"d", {}}}); });
  expect_error(ErrorKind::InvalidInput,
               [] { BaseField({"t"}, {BaseDerivation{"d", {q(1)}}, BaseDerivation{"d", {q(1)}}}); });
}

TEST(BaseProperties, Leibniz) {
  const BaseField f = field_ts();
  Sampler rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    const BaseElem a = rng.base_elem(2), b = rng.base_elem(2);
    for (std::size_t k = 0; k < 2; ++k)
      ASSERT_EQ(f.derive(a * b, k), f.derive(a, k) * b + a * f.derive(b, k)) << "trial " << trial;
  }
}

TEST(BaseProperties, Canonicity) {
  Sampler rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const BaseElem a = rng.base_elem(2);
    BaseElem b = rng.base_elem(2);
    if (b.is_zero()) continue;
    const BaseElem r = a * b / b;
    ASSERT_EQ(r.num(), a.num()) << "trial " << trial;
    ASSERT_EQ(r.den(), a.den()) << "trial " << trial;
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(BaseProperties, AdditiveAndRationalLinear) {
  const BaseField f = field_ts();
  Sampler rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const BaseElem a = rng.base_elem(2), b = rng.base_elem(2);
    const Rational c = rat(rng.integer(-9, 9), rng.integer(1, 9));
    for (std::size_t k = 0; k < 2; ++k) {
      ASSERT_EQ(f.derive(a + b, k), f.derive(a, k) + f.derive(b, k));
      ASSERT_EQ(f.derive(a.scaled(c), k), f.derive(a, k).scaled(c));
    }
  }
}

TEST(BaseProperties, FieldAxioms) {
  Sampler rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const BaseElem a = rng.base_elem(2), b = rng.base_elem(2), c = rng.base_elem(2);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) {
      ASSERT_TRUE((a * a.inverse()).is_one());
    }
  }
}
