#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weildesc/error.hpp"
#include "weildesc/points.hpp"
#include "weildesc/random.hpp"

using namespace weildesc;
using namespace fixtures;

namespace {

ExtElem coords(std::vector<BaseElem> c) { return ExtElem(std::move(c)); }

std::pair<std::vector<DPolyB>, std::vector<GeoPoly>> first_order_system(const Extension& e) {
  std::vector<DPolyB> fs = {xB(e, "x", {1})};
  return {fs, to_geometric_form(descend_system(fs, e, {"x"}), e)};
}

}  // namespace

TEST(SplitPoint, Examples) {
  const Extension e = sqrt_t();
  APoint a = split_point({{"x", e.basis(1)}}, e);
  EXPECT_EQ(a.at({"x", 1}), q(0));
  EXPECT_EQ(a.at({"x", 2}), q(1));
  a = split_point({{"x", q(3) * e.one()}}, e);
  EXPECT_EQ(a.at({"x", 1}), q(3));
  EXPECT_EQ(a.at({"x", 2}), q(0));
  a = split_point({{"x", t() * (e.one() + e.basis(1))}}, e);
  EXPECT_EQ(a.at({"x", 1}), t());
  EXPECT_EQ(a.at({"x", 2}), t());
}

TEST(SplitPoint, JoinInverts) {
  const Extension e = cbrt_t();
  Sampler rng(800);
  for (int trial = 0; trial < 30; ++trial) {
    const BPoint p = {{"x", rng.ext_elem(e)}, {"y", rng.ext_elem(e)}};
    ASSERT_EQ(join_point(split_point(p, e), e), p);
  }
}

TEST(Correspondence, Examples) {
  const Extension e = sqrt_t();
  const DPolyB x = xB(e);
  auto r = check_correspondence({mul(x, x, e) - dpoly_constant(t() * e.one())}, {{"x", e.basis(1)}}, e);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.entries[0].vanishes_over_B);
  EXPECT_TRUE(r.entries[0].vanishes_over_A);

  r = check_correspondence({x}, {{"x", e.one()}}, e);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.entries[0].value, e.one());
  EXPECT_EQ(r.entries[0].components, (std::vector<BaseElem>{q(1), q(0)}));
  EXPECT_FALSE(r.entries[0].vanishes_over_B);
  EXPECT_FALSE(r.entries[0].vanishes_over_A);

  r = check_correspondence({scale(x, e.basis(1), e)}, {{"x", e.basis(1)}}, e);
  EXPECT_EQ(r.entries[0].value, t() * e.one());
  EXPECT_EQ(r.entries[0].components, (std::vector<BaseElem>{t(), q(0)}));
}

TEST(Correspondence, Errors) {
  const Extension e = sqrt_t();
  EXPECT_THROW(check_correspondence({xB(e, "x", {1})}, {{"x", e.one()}}, e), Error);
  try {
    check_correspondence({xB(e, "y")}, {{"x", e.one()}}, e);
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::UnassignedVariable);
  }
}

TEST(Correspondence, RandomSystems) {
  const Extension e = cbrt_t();
  Sampler rng(801);
  for (int trial = 0; trial < 100; ++trial) {
    const DPolyB f = rng.dpoly_B(e, {"x", "y"}, PolyBounds{3, 0, 4, ElemBounds{1, 1, 9}});
    const BPoint p = {{"x", rng.ext_elem(e, {1, 1, 9})}, {"y", rng.ext_elem(e, {1, 1, 9})}};
    const auto r = check_correspondence({f}, p, e);
    ASSERT_TRUE(r.entries[0].identity_holds) << "trial " << trial;
    ASSERT_TRUE(r.ok());
  }
}

TEST(Correspondence, VanishingAtARoot) {
  // x^2 - t vanishes at b and -b only; check both verdicts agree either way.
  const Extension e = sqrt_t();
  const DPolyB x = xB(e);
  const DPolyB f = mul(x, x, e) - dpoly_constant(t() * e.one());
  for (const ExtElem& v : {e.basis(1), -e.basis(1), e.one(), e.zero()}) {
    const auto r = check_correspondence({f}, {{"x", v}}, e);
    EXPECT_TRUE(r.ok());
  }
}

TEST(DifferentialPoint, Examples) {
  const Extension e = sqrt_t();
  const auto [fs, geo] = first_order_system(e);

  auto r = check_differential_point(fs, geo, {{"x", q(5) * e.one()}}, e);
  EXPECT_EQ(r.residuals, (std::vector<BaseElem>{q(0), q(0)}));
  EXPECT_TRUE(r.original_vanishes);
  EXPECT_TRUE(r.ok());

  r = check_differential_point(fs, geo, {{"x", e.basis(1)}}, e);
  EXPECT_FALSE(r.original_vanishes);
  EXPECT_FALSE(r.descended_vanishes);
  EXPECT_EQ(r.original[0], coords({q(0), q(1) / (q(2) * t())}));
  EXPECT_EQ(r.residuals[1], q(1) / (q(2) * t()));
  EXPECT_TRUE(r.ok());

  r = check_differential_point(fs, geo, {{"x", e.zero()}}, e);
  EXPECT_TRUE(r.descended_vanishes);
  EXPECT_TRUE(r.ok());
}

TEST(DifferentialPoint, RandomPointsAgree) {
  const Extension e = sqrt_t();
  const auto [fs, geo] = first_order_system(e);
  Sampler rng(802);
  for (int trial = 0; trial < 50; ++trial) {
    // Mix in constants so both verdicts occur.
    const ExtElem v = trial % 5 == 0 ? BaseElem(static_cast<long>(rng.integer(-9, 9))) * e.one() : rng.ext_elem(e);
    const auto r = check_differential_point(fs, geo, {{"x", v}}, e);
    ASSERT_TRUE(r.ok()) << "trial " << trial;
  }
}

TEST(DifferentialPoint, HigherOrderSystem) {
  const Extension e = cbrt_t();
  const DPolyB x = xB(e), x1 = xB(e, "x", {1}), x2 = xB(e, "x", {2});
  const std::vector<DPolyB> fs = {mul(x2, x, e) - scale(mul(x1, x1, e), e.basis(2), e)};
  const auto geo = to_geometric_form(descend_system(fs, e, {"x"}), e);
  Sampler rng(803);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = check_differential_point(fs, geo, {{"x", rng.ext_elem(e, {2, 1, 9})}}, e);
    ASSERT_TRUE(r.ok()) << "trial " << trial;
  }
}
