#include <gtest/gtest.h>

#include <random>

#include "evohopf/error.hpp"
#include "evohopf/evolution.hpp"
#include "evohopf/groebner.hpp"

namespace evohopf {
namespace {

FieldSpec gf(std::uint64_t p) { return FieldSpec::prime(p); }
FieldElement el(const FieldSpec& f, const char* s) { return FieldElement::parse(f, s); }
FamilyParams alpha(const FieldSpec& f, const char* a) { return {el(f, a), std::nullopt}; }

// Oracle: enumerate every matrix with generic field arithmetic.
std::size_t brute_force_order(const EvolutionAlgebra& a) {
  auto elems = enumerate(a.field());
  std::size_t count = 0;
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems)
        for (const auto& w : elems) count += is_isomorphism(a, a, Matrix{{x, y}, {z, w}});
  return count;
}

TEST(Evolution, FamilyStructureMatrix) {
  auto a = family("A2", gf(7), alpha(gf(7), "1"));
  EXPECT_EQ(matrix_to_string(a.omega()), "[[0, 1], [1, 0]]");
  EXPECT_EQ(a.name(), "A2(1)");
  auto f = FieldSpec::rationals();
  EXPECT_THROW(family("A5ab", f, {el(f, "2"), el(f, "1/2")}), DomainError);
  EXPECT_THROW(family("A2", f), DomainError);
  EXPECT_THROW(family("A9", f), DomainError);
  EXPECT_THROW(family("A2", f, alpha(f, "0")), DomainError);
}

TEST(Evolution, AutomorphismCounts) {
  struct Case {
    const char* fam;
    const char* a;
    std::uint64_t p;
    std::size_t order;
  };
  for (const auto& c : std::vector<Case>{{"A2", "1", 7, 6},
                                          {"A8", "1", 2, 1},
                                          {"A6", nullptr, 5, 20},
                                          {"A1", nullptr, 3, 2},
                                          {"A3", "1", 5, 1},
                                          {"A5", nullptr, 7, 6}}) {
    FieldSpec f = gf(c.p);
    auto alg = family(c.fam, f, c.a ? alpha(f, c.a) : FamilyParams{});
    EXPECT_EQ(group_order(alg), c.order) << alg.name();
    EXPECT_EQ(brute_force_order(alg), c.order) << alg.name();
  }
}

TEST(Evolution, PerfectAndAssociative) {
  auto f = FieldSpec::rationals();
  auto a3 = family("A3", f, alpha(f, "1"));
  EXPECT_TRUE(is_perfect(a3));
  EXPECT_FALSE(is_associative(a3));
  auto a6 = family("A6", f);
  EXPECT_FALSE(is_perfect(a6));
  EXPECT_TRUE(is_associative(a6));
  EXPECT_TRUE(is_associative(family("A1", f)));
  EXPECT_TRUE(is_associative(family("A7", f)));
}

TEST(Evolution, A2PointsAndProduct) {
  for (std::uint64_t p : {7ull, 13ull}) {
    FieldSpec f = gf(p);
    for (const char* as : {"1", "3"}) {
      auto alg = family("A2", f, alpha(f, as));
      auto al = el(f, as);
      auto pts = aut_points(alg);
      for (const auto& m : pts) {
        EXPECT_EQ(m[1][0], al * m[0][1] * m[0][1]);
        EXPECT_EQ(m[1][1], m[0][0] * m[0][0]);
      }
      for (const auto& m : pts)
        for (const auto& n : pts) {
          Matrix prod = matmul(m, n);
          const auto &a = m[0][0], &b = m[0][1], &c = n[0][0], &d = n[0][1];
          EXPECT_EQ(prod[0][0], a * c + al * b * d * d);
          EXPECT_EQ(prod[0][1], a * d + b * c * c);
        }
    }
  }
}

TEST(Evolution, A2SystemEliminatesToTwoRelations) {
  auto f = FieldSpec::rationals();
  for (const char* as : {"1", "2"}) {
    auto sys = aut_system(family("A2", f, alpha(f, as)));
    const auto& r = sys.ring;
    bool has_c = false, has_d = false;
    std::string alpha_str(as);
    for (const auto& e : sys.equations) {
      has_c |= e == Polynomial::parse(r, "c - " + alpha_str + "*b^2") ||
               e == Polynomial::parse(r, alpha_str + "*b^2 - c");
      has_d |= e == Polynomial::parse(r, "d - a^2") || e == Polynomial::parse(r, "a^2 - d");
    }
    EXPECT_TRUE(has_c && has_d);
    StarIdeal ideal(r, sys.equations, false);
    auto elim = eliminate(ideal, {r->vars().require("u"), r->vars().require("c"), r->vars().require("d")});
    auto target = buchberger(r->with_order(MonomialOrder::lex({4, 2, 3, 0, 1})),
                             {Polynomial::parse(r, "a*b"), Polynomial::parse(r, "a^3 + " + alpha_str + "*b^3 - 1")});
    std::vector<std::string> got, want;
    for (const auto& g : elim) got.push_back(g.in_ring(target.ring()).to_string());
    for (const auto& g : target.elements()) want.push_back(g.to_string());
    EXPECT_EQ(got, want);
  }
}

// The raw system's rational zeros (with u) are exactly the automorphisms.
TEST(EvolutionProperties, SystemZerosMatchPoints) {
  std::mt19937 rng(41);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    FieldSpec f = gf(p);
    auto elems = enumerate(f);
    std::uniform_int_distribution<long long> d(0, static_cast<long long>(p) - 1);
    for (int trial = 0; trial < 15; ++trial) {
      Matrix w(2);
      for (auto& row : w)
        for (int j = 0; j < 2; ++j) row.push_back(FieldElement::from_int(f, d(rng)));
      EvolutionAlgebra alg(f, w);
      auto sys = aut_system(alg);
      std::size_t zeros = 0;
      for (const auto& a : elems)
        for (const auto& b : elems)
          for (const auto& c : elems)
            for (const auto& dd : elems)
              for (const auto& u : elems) {
                bool ok = true;
                for (const auto& e : sys.equations) ok = ok && e.evaluate({a, b, c, dd, u}).is_zero();
                zeros += ok;
              }
      auto pts = aut_points(alg);
      EXPECT_EQ(zeros, pts.size());
      EXPECT_EQ(brute_force_order(alg), pts.size());
      EXPECT_TRUE(closed_under_composition(pts));
    }
  }
}

TEST(EvolutionProperties, VanishingSecondSquareClassification) {
  FieldSpec f = gf(3);
  auto z = FieldElement::zero(f);
  auto elems = enumerate(f);
  int seen = 0;
  for (const auto& w11 : elems)
    for (const auto& w21 : elems) {
      EvolutionAlgebra alg(f, Matrix{{w11, z}, {w21, z}});
      auto lc = classify_null_second_square(alg);
      ASSERT_TRUE(lc);
      if (lc->model == "zero") {
        EXPECT_TRUE(w11.is_zero() && w21.is_zero());
        continue;
      }
      EXPECT_TRUE(is_isomorphism(family(lc->model, f), alg, lc->iso)) << lc->model;
      ++seen;
    }
  EXPECT_EQ(seen, 8);
  EXPECT_FALSE(classify_null_second_square(family("A1", f)));
}

TEST(Evolution, LargerBoundIsEnforced) {
  FieldSpec f = gf(101);
  EvolutionAlgebra a3(f, Matrix{{FieldElement::one(f), FieldElement::zero(f), FieldElement::zero(f)},
                                {FieldElement::zero(f), FieldElement::one(f), FieldElement::zero(f)},
                                {FieldElement::zero(f), FieldElement::zero(f), FieldElement::one(f)}});
  EXPECT_THROW(aut_points(a3), LimitError);
}

}  // namespace
}  // namespace evohopf
