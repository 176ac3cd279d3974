#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weildesc/error.hpp"
#include "weildesc/random.hpp"

using namespace weildesc;
using namespace fixtures;

namespace {

ExtElem coords(std::vector<BaseElem> c) { return ExtElem(std::move(c)); }

const PolyBounds kSmall{2, 2, 3, ElemBounds{2, 1, 9}};

}  // namespace

TEST(DerivIndex, Enumeration) {
  const auto all = indices_up_to(2, 2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), DerivIndex::zero(2));
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(all[i - 1] < all[i]);
  EXPECT_EQ(all[1], DerivIndex({0, 1}));
  EXPECT_EQ(all[2], DerivIndex({1, 0}));
  EXPECT_EQ(indices_up_to(1, 3).size(), 4u);
  EXPECT_EQ(indices_up_to(0, 3).size(), 1u);
}

TEST(DerivIndex, Arithmetic) {
  const DerivIndex a({1, 2});
  EXPECT_EQ(a.order(), 3u);
  EXPECT_EQ(a.incremented(0), DerivIndex({2, 2}));
  EXPECT_EQ(a.decremented(1), DerivIndex({1, 1}));
  EXPECT_THROW((void)a.incremented(2), Error);
  EXPECT_THROW((void)DerivIndex({0, 0}).decremented(0), Error);
}

TEST(NaturalDerive, Examples) {
  const Extension e = sqrt_t();
  const DPolyB x = xB(e);
  EXPECT_EQ(natural_derive_B(x, e, "d"), xB(e, "x", {1}));
  // d(b x) = (b/(2t)) x + b x'
  const ExtElem b = e.basis(1);
  const DPolyB bx = scale(x, b, e);
  const DPolyB expected = scale(x, coords({q(0), q(1) / (q(2) * t())}), e) + scale(xB(e, "x", {1}), b, e);
  EXPECT_EQ(natural_derive_B(bx, e, 0), expected);
  EXPECT_EQ(natural_derive_B(mul(x, x, e), e, 0), scale(mul(x, xB(e, "x", {1}), e), q(2) * e.one(), e));
  EXPECT_THROW(natural_derive_B(x, e, "e"), Error);
  EXPECT_THROW(natural_derive_B(x, e, 1), Error);
}

TEST(DPolyArith, Examples) {
  const Extension e = sqrt_t();
  const DPolyB x = xB(e);
  EXPECT_EQ(x + DPolyB(), x);
  EXPECT_EQ(mul(x, x, e), DPolyB::term(Monomial<VarRefB>(vb("x", {0}), 2), e.one()));
  const DPolyB bx = scale(x, e.basis(1), e);
  EXPECT_EQ(mul(bx, bx, e), scale(mul(x, x, e), t() * e.one(), e));
  EXPECT_TRUE((bx - bx).is_zero());
  EXPECT_EQ(pow(x + dpoly_constant(e.one()), 2, e),
            mul(x, x, e) + scale(x, q(2) * e.one(), e) + dpoly_constant(e.one()));
}

TEST(EvalB, Examples) {
  const Extension e = sqrt_t();
  const DPolyB x = xB(e);
  const VarRefB v = vb("x", {0});
  EXPECT_EQ(eval_B(x, {{v, e.one()}}, e), e.one());
  const DPolyB f = mul(x, x, e) - dpoly_constant(t() * e.one());
  EXPECT_TRUE(eval_B(f, {{v, e.basis(1)}}, e).is_zero());
  EXPECT_EQ(eval_B(scale(x, e.basis(1), e), {{v, e.one() + e.basis(1)}}, e), coords({t(), q(1)}));
  try {
    eval_B(xB(e, "x", {1}), {{v, e.one()}}, e);
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::UnassignedVariable);
  }
}

TEST(EvalA, Examples) {
  const DPolyA g = xA("x", {0}, 1) * xA("x", {0}, 2) + constA(t());
  EXPECT_EQ(eval_A(g, {{va("x", {0}, 1), q(2)}, {va("x", {0}, 2), q(3)}}), q(6) + t());
  EXPECT_THROW(eval_A(g, {{va("x", {0}, 1), q(2)}}), Error);
}

TEST(Render, Variables) {
  const BaseField f = field_ts();
  EXPECT_EQ(render_var(vb("x", {2, 1}), f), "d1(d1(d2(x)))");
  EXPECT_EQ(render_var(va("x", {1}, 2)), "x.2@[1]");
  EXPECT_EQ(render_var(va("y", {1, 0}, 1)), "y.1@[1,0]");
  EXPECT_EQ(render_var(GeoVar{"x", DerivIndex({0, 1}), 2}, f), "d2(x_2)");
}

TEST(Render, Polynomials) {
  const Extension e = sqrt_t();
  const DPolyB x = xB(e), x1 = xB(e, "x", {1});
  EXPECT_EQ(render(x1, e), "d(x)");
  EXPECT_EQ(render(scale(x, e.basis(1), e), e), "b*x");
  EXPECT_EQ(render(mul(x, x, e) - dpoly_constant(t() * e.one()), e), "x^2 - t");
  EXPECT_EQ(render(scale(x, e.one() + e.basis(1), e), e), "(1 + b)*x");
  const DPolyA g = xA("x", {1}, 2) - scale(xA("x", {0}, 2), q(1) / (q(2) * t()));
  EXPECT_EQ(render(g, e.base()), "x.2@[1] - (1/(2*t))*x.2@[0]");
}

TEST(DiffPolyProperties, NaturalDeriveAdditiveAndLeibniz) {
  const Extension e = sqrt_t();
  Sampler rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const DPolyB f = rng.dpoly_B(e, {"x", "y"}, kSmall), g = rng.dpoly_B(e, {"x", "y"}, kSmall);
    ASSERT_EQ(natural_derive_B(f + g, e, 0), natural_derive_B(f, e, 0) + natural_derive_B(g, e, 0));
    ASSERT_EQ(natural_derive_B(mul(f, g, e), e, 0),
              mul(natural_derive_B(f, e, 0), g, e) + mul(f, natural_derive_B(g, e, 0), e))
        << "trial " << trial;
  }
}

TEST(DiffPolyProperties, CommutingDerivations) {
  const Extension e = sqrt_t(field_ts());
  ASSERT_FALSE(e.commutation_witness().has_value());
  Sampler rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const DPolyB f = rng.dpoly_B(e, {"x"}, PolyBounds{2, 1, 3, ElemBounds{1, 1, 5}});
    ASSERT_EQ(natural_derive_B(natural_derive_B(f, e, 0), e, 1), natural_derive_B(natural_derive_B(f, e, 1), e, 0));
  }
}

TEST(DiffPolyProperties, EvalIsRingHomomorphism) {
  const Extension e = cbrt_t();
  Sampler rng(102);
  for (int trial = 0; trial < 50; ++trial) {
    const DPolyB f = rng.dpoly_B(e, {"x", "y"}, kSmall), g = rng.dpoly_B(e, {"x", "y"}, kSmall);
    PointB p;
    for (const auto& v : (f + g).variables()) p.emplace(v, rng.ext_elem(e, {1, 1, 5}));
    for (const auto& v : f.variables()) p.emplace(v, rng.ext_elem(e, {1, 1, 5}));
    for (const auto& v : g.variables()) p.emplace(v, rng.ext_elem(e, {1, 1, 5}));
    ASSERT_EQ(eval_B(mul(f, g, e), p, e), e.mul(eval_B(f, p, e), eval_B(g, p, e)));
    ASSERT_EQ(eval_B(f + g, p, e), eval_B(f, p, e) + eval_B(g, p, e));
  }
}
