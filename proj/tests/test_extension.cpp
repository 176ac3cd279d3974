#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weildesc/error.hpp"
#include "weildesc/random.hpp"

using namespace weildesc;
using namespace fixtures;

namespace {

ErrorKind error_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

ExtElem coords(std::vector<BaseElem> c) { return ExtElem(std::move(c)); }

// Differentiating p(x) = 0 gives p'(x) delta(x) + p^d(x) = 0, an identity
// independent of how delta(x) was produced.
void expect_minpoly_identity(const Extension& e, const BaseUPoly& p) {
  const ExtElem x = *e.generator_element();
  for (std::size_t k = 0; k < e.base().num_derivations(); ++k) {
    ExtElem dp = e.zero(), pd = e.zero();
    for (std::size_t n = 0; n < p.size(); ++n) {
      pd += e.base().derive(p[n], k) * e.pow(x, static_cast<unsigned>(n));
      if (n > 0) dp += (p[n] * BaseElem(static_cast<long>(n))) * e.pow(x, static_cast<unsigned>(n - 1));
    }
    EXPECT_TRUE((e.mul(dp, e.delta(x, k)) + pd).is_zero());
  }
}

}  // namespace

TEST(ExtFromMinpoly, SquareRoot) {
  const Extension e = sqrt_t();
  ASSERT_EQ(e.dim(), 2u);
  EXPECT_EQ(e.basis_names(), (std::vector<std::string>{"1", "b"}));
  const ExtElem b = e.basis(1);
  EXPECT_EQ(e.mul(b, b), coords({t(), q(0)}));
  EXPECT_EQ(e.delta(b, "d"), coords({q(0), q(1) / (q(2) * t())}));
  EXPECT_EQ(e.unit_coords(), (std::vector<BaseElem>{q(1), q(0)}));
  expect_minpoly_identity(e, {-t(), q(0), q(1)});
}

TEST(ExtFromMinpoly, DegreeOne) {
  const Extension e = trivial();
  ASSERT_EQ(e.dim(), 1u);
  EXPECT_EQ(*e.generator_element(), coords({t()}));
  EXPECT_EQ(e.delta(*e.generator_element(), 0), coords({q(1)}));
  EXPECT_TRUE(validate_extension(e).ok());
}

TEST(ExtFromMinpoly, CubeRoot) {
  const Extension e = cbrt_t();
  ASSERT_EQ(e.dim(), 3u);
  // Hand inversion: (3b^2)(b/(3t)) = b^3/t = 1.
  EXPECT_EQ(e.delta(e.basis(1), 0), coords({q(0), q(1) / (q(3) * t()), q(0)}));
  expect_minpoly_identity(e, {-t(), q(0), q(0), q(1)});
}

TEST(ExtFromMinpoly, RandomCoefficientsSatisfyIdentity) {
  Sampler rng(11);
  const BaseField f = field_ts();
  for (int trial = 0; trial < 10; ++trial) {
    BaseUPoly p = {rng.base_elem(2, {1, 1, 5}), rng.base_elem(2, {1, 1, 5}), q(1)};
    Extension e = [&] {
      try {
        return ext_from_minpoly(f, "b", p);
      } catch (const Error&) {
        return trivial(f);
      }
    }();
    if (e.dim() != 2) continue;
    EXPECT_TRUE(validate_extension(e).ok());
    expect_minpoly_identity(e, p);
  }
}

TEST(ExtFromMinpoly, Errors) {
  const BaseField f = field_t();
  EXPECT_EQ(error_kind([&] { ext_from_minpoly(f, "b", {q(0), q(0), q(1)}); }), ErrorKind::NotSeparable);
  EXPECT_EQ(error_kind([&] { ext_from_minpoly(f, "b", {-t(), q(0), q(2)}); }), ErrorKind::NotMonic);
  EXPECT_EQ(error_kind([&] { ext_from_minpoly(f, "b", {q(1)}); }), ErrorKind::NotMonic);
  // (b - t)^2 is inseparable too.
  EXPECT_EQ(error_kind([&] { ext_from_minpoly(f, "b", {t() * t(), q(-2) * t(), q(1)}); }), ErrorKind::NotSeparable);
}

TEST(ExtFromTable, ManualSquareRootTable) {
  const Extension m = sqrt_t();
  StructureConstants c(2, std::vector<std::vector<BaseElem>>(2, std::vector<BaseElem>(2, q(0))));
  c[0][0][0] = q(1);
  c[0][1][1] = q(1);
  c[1][0][1] = q(1);
  c[1][1][0] = t();
  BaseMatrix d = {{q(0), q(0)}, {q(0), q(1) / (q(2) * t())}};
  const Extension e = ext_from_table(field_t(), {"1", "b"}, c, {q(1), q(0)}, {d});
  EXPECT_EQ(e.structure_constants(), m.structure_constants());
  EXPECT_EQ(e.unit_coords(), m.unit_coords());
  EXPECT_EQ(e.derivation_matrices(), m.derivation_matrices());
}

TEST(ExtFromTable, RejectsNonCommutative) {
  StructureConstants c = split_table();
  c[0][1][0] = q(1);
  try {
    ext_from_table(field_t(), {"e1", "e2"}, c, {q(1), q(1)}, {BaseMatrix(2, std::vector<BaseElem>(2, q(0)))});
    ADD_FAILURE() << "accepted";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::InvalidAlgebra);
    EXPECT_NE(std::string(err.what()).find("commutativity"), std::string::npos) << err.what();
  }
}

TEST(ExtFromTable, RejectsBadDimensions) {
  EXPECT_EQ(error_kind([] { ext_from_table(field_t(), {"e1", "e2"}, split_table(), {q(1)}, {}); }),
            ErrorKind::InvalidAlgebra);
}

TEST(ExtFromTable, SplitAlgebras) {
  EXPECT_TRUE(validate_extension(split_plain()).ok());
  EXPECT_TRUE(validate_extension(split_twisted()).ok());
}

TEST(ValidateExtension, PerturbedLeibniz) {
  const Extension m = sqrt_t();
  auto delta = m.derivation_matrices();
  delta[0][1][1] = delta[0][1][1] + q(1);
  const Extension bad(m.base(), m.basis_names(), m.structure_constants(), m.unit_coords(), delta);
  const ValidationReport r = validate_extension(bad);
  ASSERT_FALSE(r.ok());
  const InvariantResult* fail = r.first_failure();
  ASSERT_NE(fail, nullptr);
  EXPECT_EQ(fail->name, "leibniz");
  EXPECT_EQ(fail->witness, (std::vector<std::size_t>{2, 2}));
  for (const auto& inv : r.invariants)
    if (inv.name != "leibniz") {
      EXPECT_TRUE(inv.passed) << inv.name;
    }
}

TEST(ValidateExtension, ReportsEachInvariant) {
  const ValidationReport r = validate_extension(sqrt_t());
  std::vector<std::string> names;
  for (const auto& inv : r.invariants) names.push_back(inv.name);
  EXPECT_EQ(names, (std::vector<std::string>{"commutativity", "associativity", "unit", "leibniz", "delta_unit"}));
  EXPECT_TRUE(r.ok());
}

TEST(ValidateExtension, BrokenUnitAndAssociativity) {
  const Extension m = split_plain();
  const Extension bad_unit(m.base(), m.basis_names(), m.structure_constants(), {q(1), q(0)}, m.derivation_matrices());
  const ValidationReport r = validate_extension(bad_unit);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->name, "unit");

  StructureConstants c = split_table();
  c[0][0][1] = q(1);  // e1*e1 = e1 + e2
  const Extension bad_assoc(m.base(), m.basis_names(), c, m.unit_coords(), m.derivation_matrices());
  const ValidationReport r2 = validate_extension(bad_assoc);
  ASSERT_FALSE(r2.ok());
  EXPECT_EQ(r2.first_failure()->name, "associativity");
}

TEST(ExtArith, Examples) {
  const Extension e = sqrt_t();
  const ExtElem one = e.one(), b = e.basis(1);
  EXPECT_EQ(e.mul(one, b), b);
  EXPECT_EQ(e.mul(one + b, one - b), coords({q(1) - t(), q(0)}));
  EXPECT_EQ(e.lambda(e.mul(one + b, one - b), 1), q(1) - t());
  EXPECT_EQ(t() * (one + b), coords({t(), t()}));
}

TEST(ExtInverse, Examples) {
  const Extension e = sqrt_t();
  EXPECT_EQ(e.inverse(e.basis(1)), coords({q(0), t().inverse()}));
  EXPECT_EQ(e.inverse(e.one()), e.one());
  const Extension sp = split_plain();
  EXPECT_EQ(error_kind([&] { sp.inverse(sp.basis(0)); }), ErrorKind::NotInvertible);
  EXPECT_EQ(error_kind([&] { e.inverse(e.zero()); }), ErrorKind::NotInvertible);
}

TEST(ExtDelta, Examples) {
  const Extension e = sqrt_t();
  EXPECT_TRUE(e.delta(e.one(), 0).is_zero());
  EXPECT_EQ(e.delta(t() * e.basis(1), "d"), coords({q(0), q(3, 2)}));
  EXPECT_EQ(e.lambda(e.delta(e.basis(1), 0), 2), q(1) / (q(2) * t()));
  EXPECT_EQ(error_kind([&] { e.delta(e.one(), "e"); }), ErrorKind::UnknownDerivation);
}

TEST(ExtLambda, DualBasis) {
  const Extension e = cbrt_t();
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(e.lambda(e.basis(j), i), q(i == j + 1 ? 1 : 0));
  EXPECT_EQ(error_kind([&] { e.lambda(e.one(), 0); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(error_kind([&] { e.lambda(e.one(), 4); }), ErrorKind::IndexOutOfRange);
}

class ExtProperties : public ::testing::TestWithParam<int> {
 protected:
  Extension ext() const {
    switch (GetParam()) {
      case 0: return sqrt_t();
      case 1: return cbrt_t();
      case 2: return split_twisted();
      default: return sqrt_t(field_ts());
    }
  }
};

TEST_P(ExtProperties, DeltaIsLeibniz) {
  const Extension e = ext();
  Sampler rng(20 + GetParam());
  const ElemBounds small{2, 1, 9};
  for (int trial = 0; trial < 100; ++trial) {
    const ExtElem u = rng.ext_elem(e, small), v = rng.ext_elem(e, small);
    for (std::size_t k = 0; k < e.base().num_derivations(); ++k)
      ASSERT_EQ(e.delta(e.mul(u, v), k), e.mul(e.delta(u, k), v) + e.mul(u, e.delta(v, k))) << "trial " << trial;
  }
}

TEST_P(ExtProperties, StructureMapIsDifferential) {
  const Extension e = ext();
  Sampler rng(30 + GetParam());
  for (int trial = 0; trial < 50; ++trial) {
    const BaseElem a = rng.base_elem(e.base().num_vars());
    for (std::size_t k = 0; k < e.base().num_derivations(); ++k)
      ASSERT_EQ(e.delta(e.from_base(a), k), e.from_base(e.base().derive(a, k)));
  }
}

TEST_P(ExtProperties, Reconstruction) {
  const Extension e = ext();
  Sampler rng(40 + GetParam());
  for (int trial = 0; trial < 50; ++trial) {
    const ExtElem u = rng.ext_elem(e);
    ExtElem r = e.zero();
    for (std::size_t i = 1; i <= e.dim(); ++i) r += e.lambda(u, i) * e.basis(i - 1);
    ASSERT_EQ(r, u);
  }
}

TEST_P(ExtProperties, RingLaws) {
  const Extension e = ext();
  Sampler rng(50 + GetParam());
  const ElemBounds small{1, 1, 5};
  for (int trial = 0; trial < 30; ++trial) {
    const ExtElem u = rng.ext_elem(e, small), v = rng.ext_elem(e, small), w = rng.ext_elem(e, small);
    ASSERT_EQ(e.mul(u, v), e.mul(v, u));
    ASSERT_EQ(e.mul(e.mul(u, v), w), e.mul(u, e.mul(v, w)));
    ASSERT_EQ(e.mul(e.one(), u), u);
    ASSERT_EQ(e.mul(u + v, w), e.mul(u, w) + e.mul(v, w));
  }
}

TEST_P(ExtProperties, InverseOfUnits) {
  const Extension e = ext();
  Sampler rng(60 + GetParam());
  const ElemBounds small{1, 0, 5};
  for (int trial = 0; trial < 20; ++trial) {
    const ExtElem u = rng.ext_elem(e, small);
    try {
      ASSERT_EQ(e.mul(u, e.inverse(u)), e.one());
    } catch (const Error& err) {
      ASSERT_EQ(err.kind(), ErrorKind::NotInvertible);
      // A non-unit has a singular multiplication matrix.
      ASSERT_FALSE(solve_linear(e.multiplication_matrix(u), e.one().coords).has_value());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Extensions, ExtProperties, ::testing::Values(0, 1, 2, 3));

TEST(ExtFromMinpoly, AlwaysValid) {
  for (const auto& e : {sqrt_t(), cbrt_t(), sqrt_m1(), trivial(), sqrt_t(field_ts())})
    EXPECT_TRUE(validate_extension(e).ok());
}

TEST(Extension, CommutationWitness) {
  EXPECT_FALSE(sqrt_t(field_ts()).commutation_witness().has_value());
  // d1 = d/dt, d2 = t d/ds do not commute on Q(t, s): [d1, d2](s) = 1.
  const BaseField f({"t", "s"}, {BaseDerivation{"d1", {q(1), q(0)}}, BaseDerivation{"d2", {q(0), t()}}});
  EXPECT_TRUE(trivial(f).commutation_witness().has_value());
}
