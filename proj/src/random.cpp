#include "weildesc/random.hpp"

#include <cstdlib>

namespace weildesc {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("WEILDESC_SEED");
  if (s == nullptr || *s == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  return *end == '\0' ? v : fallback;
}

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

namespace {

void monomials(std::size_t m, std::uint32_t max_degree, Exponents& cur, std::vector<Exponents>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  const std::uint32_t used = total_degree(cur);
  for (std::uint32_t d = 0; used + d <= max_degree; ++d) {
    cur.push_back(d);
    monomials(m, max_degree, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BasePoly Sampler::base_poly(std::size_t m, std::uint32_t max_degree, int coeff) {
  std::vector<Exponents> all;
  Exponents cur;
  monomials(m, max_degree, cur, all);
  BasePoly p;
  for (const auto& e : all) {
    if (!coin()) continue;
    p += BasePoly::monomial(e, Rational(static_cast<long>(integer(-coeff, coeff))));
  }
  return p;
}

BaseElem Sampler::base_elem(std::size_t m, const ElemBounds& b) {
  BasePoly num = base_poly(m, b.num_degree, b.coeff);
  BasePoly den;
  while (den.is_zero()) den = base_poly(m, b.den_degree, b.coeff);
  return BaseElem(std::move(num), std::move(den));
}

ExtElem Sampler::ext_elem(const Extension& e, const ElemBounds& b) {
  std::vector<BaseElem> c;
  for (std::size_t i = 0; i < e.dim(); ++i) c.push_back(base_elem(e.base().num_vars(), b));
  return ExtElem(std::move(c));
}

namespace {

template <class Var, class MakeVar>
Monomial<Var> random_monomial(Sampler& s, const std::vector<std::string>& vars, const std::vector<DerivIndex>& thetas,
                              std::uint32_t degree, MakeVar&& make) {
  Monomial<Var> mono;
  const auto deg = static_cast<std::uint32_t>(s.integer(0, degree));
  for (std::uint32_t d = 0; d < deg; ++d) {
    const auto& name = vars[static_cast<std::size_t>(s.integer(0, static_cast<std::int64_t>(vars.size()) - 1))];
    const auto& theta = thetas[static_cast<std::size_t>(s.integer(0, static_cast<std::int64_t>(thetas.size()) - 1))];
    mono = mono * Monomial<Var>(make(name, theta));
  }
  return mono;
}

}  // namespace

DPolyB Sampler::dpoly_B(const Extension& e, const std::vector<std::string>& vars, const PolyBounds& b) {
  const auto thetas = indices_up_to(e.base().num_derivations(), b.order);
  DPolyB f;
  const auto terms = integer(1, static_cast<std::int64_t>(b.max_terms));
  for (std::int64_t n = 0; n < terms; ++n) {
    auto mono = random_monomial<VarRefB>(*this, vars, thetas, b.degree,
                                         [](const std::string& x, const DerivIndex& th) { return VarRefB{x, th}; });
    f.add_term(mono, ext_elem(e, b.coeff));
  }
  return f;
}

DPolyA Sampler::dpoly_A(const Extension& e, const std::vector<std::string>& vars, const PolyBounds& b) {
  const auto thetas = indices_up_to(e.base().num_derivations(), b.order);
  DPolyA g;
  const auto terms = integer(1, static_cast<std::int64_t>(b.max_terms));
  for (std::int64_t n = 0; n < terms; ++n) {
    auto mono = random_monomial<VarRefA>(*this, vars, thetas, b.degree, [&](const std::string& x, const DerivIndex& th) {
      return VarRefA{x, th, static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(e.dim())))};
    });
    g.add_term(mono, base_elem(e.base().num_vars(), b.coeff));
  }
  return g;
}

}  // namespace weildesc
