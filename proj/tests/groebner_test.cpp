#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "evohopf/error.hpp"
#include "evohopf/groebner.hpp"
#include "test_util.hpp"

namespace evohopf {
namespace {

RingPtr ring_of(std::vector<std::string> names, FieldSpec f = FieldSpec::rationals()) {
  return Ring::make(VariableSet(std::move(names)), f);
}

std::vector<Polynomial> parse_all(const RingPtr& r, std::vector<std::string> src) {
  std::vector<Polynomial> out;
  for (const auto& s : src) out.push_back(Polynomial::parse(r, s));
  return out;
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

TEST(Buchberger, AlreadyReduced) {
  auto r = ring_of({"x", "y"});
  auto gens = parse_all(r, {"x^2 - x", "y^2 - y", "x*y"});
  auto gb = buchberger(gens);
  auto got = strings(gb.elements());
  std::sort(got.begin(), got.end());
  std::vector<std::string> want = {"x*y", "x^2 - x", "y^2 - y"};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(gb.normal_form(Polynomial::parse(r, "x^3")), Polynomial::parse(r, "x"));
  EXPECT_FALSE(gb.contains(Polynomial::parse(r, "1 - x - y")));
}

TEST(Buchberger, Duplicates) {
  auto r = ring_of({"x", "y"});
  auto gb = buchberger(parse_all(r, {"x - y", "y - x"}));
  EXPECT_EQ(strings(gb.elements()), std::vector<std::string>{"x - y"});
}

TEST(Buchberger, UnitAndZero) {
  auto r = ring_of({"x", "y"});
  EXPECT_TRUE(buchberger(parse_all(r, {"x", "x - 1"})).is_unit());
  auto zero = buchberger(r, {Polynomial(r)});
  EXPECT_EQ(zero.size(), 0u);
  EXPECT_EQ(zero.normal_form(Polynomial::parse(r, "x + 1")), Polynomial::parse(r, "x + 1"));
}

TEST(Eliminate, Examples) {
  auto r = ring_of({"x", "y"});
  StarIdeal a(r, parse_all(r, {"x - y^2"}), false);
  EXPECT_TRUE(eliminate(a, {0}).empty());
  StarIdeal b(r, parse_all(r, {"x - y", "y^2 - y"}), false);
  EXPECT_EQ(strings(eliminate(b, {0})), std::vector<std::string>{"y^2 - y"});
}

TEST(Quotient, Examples) {
  auto r = ring_of({"x", "y"});
  QuotientAlgebra q1(StarIdeal(r, parse_all(r, {"x^4 - x", "y^4 - y", "x*y"}), false));
  ASSERT_TRUE(q1.dimension());
  EXPECT_EQ(*q1.dimension(), 7u);
  std::vector<std::string> want = {"1", "y", "x", "y^2", "x^2", "y^3", "x^3"};
  std::vector<std::string> got;
  for (const auto& m : q1.basis().monomials) got.push_back(monomial_to_string(m, r->vars()));
  EXPECT_EQ(got, want);

  auto ab = ring_of({"a", "b"});
  QuotientAlgebra q2(StarIdeal(ab, parse_all(ab, {"a*b", "a^3 + b^3 - 1"}), false));
  EXPECT_EQ(q2.dimension(), std::optional<std::size_t>(6));
  auto a = Polynomial::parse(ab, "a"), b = Polynomial::parse(ab, "b");
  EXPECT_TRUE(quotient_multiply(a, b, q2).is_zero());
  EXPECT_EQ(q2.reduce(a.pow(3) + b.pow(3)), Polynomial::parse(ab, "1"));

  auto yu = ring_of({"y", "u"});
  QuotientAlgebra q3(StarIdeal(yu, parse_all(yu, {"y*u - 1"}), false));
  EXPECT_FALSE(q3.finite());
  EXPECT_FALSE(q3.dimension());
}

TEST(Quotient, LinearDependence) {
  auto r = ring_of({"u", "v"});
  StarIdeal i(r, parse_all(r, {"u^2 - u - v", "u*v", "v^2"}), false);
  EXPECT_FALSE(linear_dependence_over_field(parse_all(r, {"u", "v"}), i.groebner()));
  auto f = Polynomial::parse(r, "u + 2*v");
  auto rel = linear_dependence_over_field({f, f}, i.groebner());
  ASSERT_TRUE(rel);
  EXPECT_EQ(*rel, (Vec{r->one(), -r->one()}));
}

TEST(StarIdeal, AdjoinsInvolutes) {
  auto r = Ring::make(VariableSet::with_stars({"x"}), FieldSpec::rationals());
  StarIdeal i(r, parse_all(r, {"x^2 - x*"}));
  EXPECT_EQ(i.generators().size(), 2u);
  EXPECT_TRUE(member(Polynomial::parse(r, "x*^2 - x"), i));
  StarIdeal plain(r, parse_all(r, {"x^2 - x*"}), false);
  EXPECT_FALSE(member(Polynomial::parse(r, "x*^2 - x"), plain));
}

// Ten fixed ideals used by the shuffle and normal-form suites.
std::vector<std::pair<FieldSpec, std::vector<std::string>>> sample_ideals() {
  FieldSpec q = FieldSpec::rationals();
  return {
      {q, {"x^2 - x*y", "y^2 - z", "x*z - 1"}},
      {q, {"x^2 + y^2 + z^2 - 1", "x - y", "z^2 - x"}},
      {q, {"x*y - z", "y*z - x", "z*x - y"}},
      {q, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}},
      {q, {"x*y", "y*z", "x*z", "x^2 + y^2 + z^2 - 1"}},
      {FieldSpec::prime(2), {"x^2 + y", "y^2 + z + x", "z^2 + x*y"}},
      {FieldSpec::prime(3), {"x^3 - x", "y^3 - y", "x*y + z", "z^2 - 1"}},
      {FieldSpec::prime(5), {"x^2 + 2*y", "y^2 + 3*z", "z^2 + 4*x"}},
      {FieldSpec::prime(7), {"x*y*z - 1", "x + y + z", "x*y + y*z + z*x"}},
      {q, {"1/2*x^2 - y", "3*y^2 - 1/3*x", "x*y*z - 2"}},
  };
}

TEST(GroebnerProperties, UniqueUnderShuffles) {
  std::mt19937 rng(17);
  for (const auto& [field, src] : sample_ideals()) {
    auto r = ring_of({"x", "y", "z"}, field);
    auto gens = parse_all(r, src);
    auto reference = buchberger(gens);
    EXPECT_TRUE(is_groebner_basis(reference.elements()));
    for (int s = 0; s < 100; ++s) {
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      // Also perturb by adding a multiple of another generator.
      if (shuffled.size() > 1 && s % 2)
        shuffled[0] = shuffled[0] + shuffled[1] * testing::random_scalar(rng, field);
      auto gb = buchberger(shuffled);
      ASSERT_EQ(strings(gb.elements()), strings(reference.elements())) << s;
    }
  }
}

TEST(GroebnerProperties, NormalForm) {
  std::mt19937 rng(23);
  auto ideals = sample_ideals();
  int count = 0;
  for (const auto& [field, src] : ideals) {
    auto r = ring_of({"x", "y", "z"}, field);
    StarIdeal ideal(r, parse_all(r, src), false);
    const auto& gb = ideal.groebner();
    for (int k = 0; k < 100; ++k, ++count) {
      auto f = testing::random_poly(rng, r, 6, 5), g = testing::random_poly(rng, r, 6, 5);
      auto nf = gb.normal_form(f);
      EXPECT_EQ(gb.normal_form(nf), nf);
      EXPECT_TRUE(gb.contains(f - nf));
      EXPECT_EQ(gb.normal_form(f + g), nf + gb.normal_form(g));
      for (const auto& t : nf.terms())
        for (const auto& e : gb.elements()) EXPECT_FALSE(e.lm().divides(t.mono));
      // Multiples of generators vanish.
      EXPECT_TRUE(gb.normal_form(ideal.generators()[k % ideal.generators().size()] * g).is_zero());
    }
  }
  EXPECT_EQ(count, 1000);
}

TEST(GroebnerProperties, StarStability) {
  std::mt19937 rng(29);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
    auto r = Ring::make(VariableSet::with_stars({"x", "y"}), f);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Polynomial> gens = {testing::random_poly(rng, r, 3, 2), testing::random_poly(rng, r, 3, 2)};
      StarIdeal ideal(r, gens);
      const auto& gb = ideal.groebner();
      for (const auto& g : gb.elements()) EXPECT_TRUE(gb.contains(g.apply_involution()));
      for (int k = 0; k < 10; ++k) {
        auto p = testing::random_poly(rng, r, 5, 3);
        EXPECT_EQ(gb.normal_form(p.apply_involution()),
                  gb.normal_form(gb.normal_form(p).apply_involution()));
      }
    }
  }
}

// Over GF(p) with the field equations x^p - x adjoined the ideal is radical and
// its quotient dimension equals the number of rational zeros.
TEST(GroebnerOracle, FieldEquationPointCount) {
  std::mt19937 rng(31);
  for (std::uint64_t p : {2ull, 3ull}) {
    FieldSpec f = FieldSpec::prime(p);
    auto r = ring_of({"x", "y", "z"}, f);
    auto elems = enumerate(f);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Polynomial> gens;
      for (const char* v : {"x", "y", "z"}) {
        auto x = Polynomial::parse(r, v);
        gens.push_back(x.pow(static_cast<unsigned>(p)) - x);
      }
      std::vector<Polynomial> extra = {testing::random_poly(rng, r, 3, 2),
                                       testing::random_poly(rng, r, 3, 2)};
      gens.insert(gens.end(), extra.begin(), extra.end());
      std::size_t zeros = 0;
      for (const auto& a : elems)
        for (const auto& b : elems)
          for (const auto& c : elems) {
            bool ok = true;
            for (const auto& e : extra) ok = ok && e.evaluate({a, b, c}).is_zero();
            zeros += ok;
          }
      QuotientAlgebra q(StarIdeal(r, gens, false));
      ASSERT_TRUE(q.dimension());
      EXPECT_EQ(*q.dimension(), zeros);
      // Membership agrees with vanishing on the zero set.
      auto probe = testing::random_poly(rng, r, 3, 2);
      bool vanishes = true;
      for (const auto& a : elems)
        for (const auto& b : elems)
          for (const auto& c : elems) {
            bool zero = true;
            for (const auto& e : extra) zero = zero && e.evaluate({a, b, c}).is_zero();
            if (zero && !probe.evaluate({a, b, c}).is_zero()) vanishes = false;
          }
      EXPECT_EQ(q.gb().contains(probe), vanishes);
    }
  }
}

TEST(Groebner, BlockAndLexAgreeOnElimination) {
  auto r = ring_of({"t", "x", "y"});
  auto gens = parse_all(r, {"x - t^2", "y - t^3"});
  StarIdeal ideal(r, gens, false);
  auto elim = eliminate(ideal, {0});
  ASSERT_EQ(elim.size(), 1u);
  EXPECT_TRUE(member(Polynomial::parse(r, "x^3 - y^2"), ideal));
  auto block = buchberger(r->with_order(MonomialOrder::block({0, 1, 2}, 1)), gens);
  std::vector<Polynomial> free;
  for (const auto& g : block.elements())
    if (!g.uses_variable(0)) free.push_back(g.in_ring(r));
  ASSERT_EQ(free.size(), 1u);
  EXPECT_EQ(free[0].monic(), elim[0].monic());
}

}  // namespace
}  // namespace evohopf
