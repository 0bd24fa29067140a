#include <gtest/gtest.h>

#include <random>

#include "evohopf/error.hpp"
#include "evohopf/hopf.hpp"

namespace evohopf {
namespace {

const FieldSpec Q = FieldSpec::rationals();
FieldSpec gf(std::uint64_t p) { return FieldSpec::prime(p); }
FieldElement el(const FieldSpec& f, long long v) { return FieldElement::from_int(f, v); }

std::vector<FieldSpec> verify_fields() { return {Q, gf(2), gf(3), gf(5), gf(7)}; }

TEST(HopfCatalog, H2Presentation) {
  auto h = catalog("H2", Q, el(Q, 1));
  EXPECT_EQ(h.name(), "H2(1)");
  ASSERT_EQ(h.relations().size(), 2u);
  EXPECT_EQ(h.relations()[0].to_string(), "a*b");
  EXPECT_EQ(h.relations()[1], Polynomial::parse(h.ring(), "a^3 + b^3 - 1"));
  EXPECT_EQ(h.delta[0], Polynomial::parse(h.ring2(), "a'*a'' + b'*b''^2"));
  EXPECT_EQ(h.delta[1], Polynomial::parse(h.ring2(), "a'*b'' + b'*a''^2"));
  EXPECT_EQ(h.antipode[0].to_string(), "a^2");
  EXPECT_EQ(h.counit, (std::vector<FieldElement>{el(Q, 1), el(Q, 0)}));
  EXPECT_EQ(h.quotient().dimension(), std::optional<std::size_t>(6));
  EXPECT_EQ(catalog("H2", gf(5)).quotient().dimension(), std::optional<std::size_t>(6));
  auto h3 = catalog("H2", Q, FieldElement::parse(Q, "1/2"));
  EXPECT_EQ(h3.relations()[1], Polynomial::parse(h3.ring(), "a^3 + 1/2*b^3 - 1"));
}

TEST(HopfCatalog, H8Presentations) {
  auto h = catalog("H8", Q);
  EXPECT_EQ(h.relations()[0].to_string(), "x^2 - 1");
  EXPECT_EQ(h.delta[0].to_string(), "x'*x''");
  auto d = catalog("H8", gf(2));
  EXPECT_EQ(d.relations()[0].to_string(), "e^2");
  EXPECT_EQ(d.quotient().dimension(), std::optional<std::size_t>(2));
  EXPECT_TRUE(verify_hopf(d).ok());
}

TEST(HopfCatalog, Errors) {
  EXPECT_THROW(catalog("H9", Q), DomainError);
  EXPECT_THROW(catalog("H5", gf(2)), DomainError);
  EXPECT_THROW(catalog("H5_char2", Q), DomainError);
  EXPECT_THROW(catalog("H2", Q, el(Q, 0)), DomainError);
  EXPECT_THROW(catalog("H2", Q, el(gf(5), 1)), MismatchError);
}

TEST(HopfCatalog, LaurentPartners) {
  auto h = catalog("H6", Q);
  const auto& vars = h.ring()->vars();
  ASSERT_EQ(vars.size(), 3u);
  EXPECT_EQ(vars.name(2), "y_inv");
  EXPECT_EQ(h.delta[2].to_string(), "y_inv'*y_inv''");
  EXPECT_EQ(h.antipode[2].to_string(), "y");
  EXPECT_EQ(h.antipode[0], Polynomial::parse(h.ring(), "-x*y_inv^3"));
  EXPECT_EQ(h.relations().back(), Polynomial::parse(h.ring(), "y*y_inv - 1"));
}

TEST(HopfAxioms, WholeCatalog) {
  for (const auto& f : verify_fields())
    for (const auto& name : catalog_names()) {
      if (!catalog_valid(name, f)) continue;
      auto rep = verify_hopf(catalog(name, f));
      ASSERT_EQ(rep.checks.size(), 4u);
      for (const auto& c : rep.checks)
        EXPECT_TRUE(c.pass) << name << " over " << f.to_string() << ": " << c.axiom
                            << (c.witnesses.empty() ? "" : " " + c.witnesses.front());
    }
}

TEST(HopfAxioms, AntipodeMutationFails) {
  auto h = catalog("H2", Q);
  h.antipode[0] = Polynomial::parse(h.ring(), "a");
  auto rep = verify_hopf(h);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.checks[1].pass);
  EXPECT_TRUE(rep.checks[2].pass);
  EXPECT_FALSE(rep.checks[3].pass);
}

TEST(HopfAxioms, CoefficientMutationFails) {
  auto h = catalog("H2", Q);
  h.delta[0] = Polynomial::parse(h.ring2(), "a'*a'' + 2*b'*b''^2");
  EXPECT_FALSE(verify_hopf(h).ok());
  auto g = catalog("H6", gf(5));
  g.delta[0] = Polynomial::parse(g.ring2(), "x'*y''^2 + 2*y'*x''");
  EXPECT_FALSE(verify_hopf(g).ok());
}

TEST(HopfAxioms, RandomDeltaPerturbationsFail) {
  std::mt19937 rng(20240611);
  for (const auto& f : verify_fields())
    for (const auto& name : catalog_names()) {
      if (!catalog_valid(name, f) || name == "K") continue;
      for (int trial = 0; trial < 5; ++trial) {
        auto h = catalog(name, f);
        const std::size_t n = h.nvars();
        std::uniform_int_distribution<std::size_t> pick(0, n - 1), kind(0, 2);
        std::uniform_int_distribution<long long> coef(1, f.is_finite() ? static_cast<long long>(f.characteristic()) - 1 : 5);
        std::size_t v = pick(rng), w = pick(rng), k = kind(rng);
        Polynomial m = k == 0 ? Polynomial::constant(h.ring2(), h.ring2()->one())
                              : Polynomial::variable(h.ring2(), (k - 1) * n + w);
        h.delta[v] += m * el(f, coef(rng));
        EXPECT_FALSE(verify_hopf(h).ok()) << name << " over " << f.to_string() << " delta(" << v << ") += " << m;
      }
    }
}

TEST(HopfAxioms, WellDefinednessCatchesBadRelations) {
  auto h = HopfPresentation::from_json(R"({"vars":["x"],"relations":["x^2 - 2"],
      "delta":{"x":"x'*x''"},"antipode":{"x":"x"},"epsilon":{"x":"1"}})", Q);
  auto rep = verify_hopf(h);
  EXPECT_FALSE(rep.checks[0].pass);
}

TEST(HopfJson, LaurentFileRoundTrip) {
  auto h = HopfPresentation::from_json(R"({
    "vars": ["x"], "laurent_vars": ["y"], "relations": [],
    "delta": {"x": "x'*y''^2 + y'*x''", "y": "y'*y''"},
    "antipode": {"x": "-x*y_inv^3", "y": "y_inv"},
    "epsilon": {"x": 0, "y": 1}})", gf(7), "h6");
  EXPECT_EQ(h.name(), "h6");
  EXPECT_TRUE(verify_hopf(h).ok());
  EXPECT_EQ(rational_points(h).size(), 42u);
  EXPECT_THROW(HopfPresentation::from_json("{", Q), ParseError);
  EXPECT_THROW(HopfPresentation::from_json(R"({"vars":["x"]})", Q), ParseError);
}

TEST(HopfPoints, Counts) {
  EXPECT_EQ(rational_points(catalog("H2", gf(7))).size(), 6u);
  EXPECT_EQ(rational_points(catalog("H2", gf(13))).size(), 6u);
  EXPECT_EQ(rational_points(catalog("H2", gf(5))).size(), 2u);
  auto dual = catalog("H8", gf(2));
  auto pts = rational_points(dual);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_TRUE(pts[0][0].is_zero());  // e = x - 1 = 0
  for (std::uint64_t p : {2, 3, 5, 7, 13}) EXPECT_EQ(rational_points(catalog("H1", gf(p))).size(), 2u);
  EXPECT_EQ(rational_points(catalog("K", gf(3))).size(), 1u);
  EXPECT_THROW(rational_points(catalog("H1", Q)), DomainError);
}

TEST(HopfPoints, H2Product) {
  auto f = gf(7);
  auto h = catalog("H2", f);
  auto r = point_product(h, {el(f, 2), el(f, 0)}, {el(f, 0), el(f, 2)});
  EXPECT_EQ(r, (RationalPoint{el(f, 0), el(f, 4)}));
  EXPECT_EQ(el(f, 4).pow(3), el(f, 1));
  EXPECT_THROW(point_product(h, {el(f, 1), el(f, 1)}, {el(f, 1), el(f, 0)}), Error);
}

TEST(HopfPoints, GroupAxiomsEverywhere) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    auto f = gf(p);
    for (const auto& name : catalog_names()) {
      if (!catalog_valid(name, f)) continue;
      auto h = catalog(name, f);
      auto pts = rational_points(h);
      auto e = counit_point(h);
      for (const auto& a : pts) {
        EXPECT_EQ(point_product(h, a, e), a) << name;
        EXPECT_EQ(point_product(h, e, a), a) << name;
        EXPECT_EQ(point_product(h, a, point_inverse(h, a)), e) << name;
        EXPECT_EQ(point_product(h, point_inverse(h, a), a), e) << name;
        for (const auto& b : pts)
          for (const auto& c : pts)
            EXPECT_EQ(point_product(h, point_product(h, a, b), c), point_product(h, a, point_product(h, b, c)))
                << name;
      }
    }
  }
}

TEST(PointsIso, SpecPairs) {
  auto find = [](const FieldSpec& f, const std::string& fam) {
    for (const auto& p : pairings(f))
      if (p.family == fam) return p;
    throw std::runtime_error("no pairing");
  };
  auto r2 = points_group_iso_check(find(gf(7), "A2"), gf(7));
  EXPECT_TRUE(r2.ok());
  EXPECT_EQ(r2.hopf_points, 6u);
  auto r8 = points_group_iso_check(find(gf(5), "A8"), gf(5));
  EXPECT_TRUE(r8.ok());
  EXPECT_EQ(r8.aut_points, 2u);
  auto r6 = points_group_iso_check(find(gf(3), "A6"), gf(3));
  EXPECT_TRUE(r6.ok());
  EXPECT_EQ(r6.hopf_points, 6u);
  auto r82 = points_group_iso_check(find(gf(2), "A8"), gf(2));
  EXPECT_TRUE(r82.ok());
  EXPECT_EQ(r82.hopf_points, 1u);
}

TEST(PointsIso, AllPairingsAllFields) {
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    auto f = gf(p);
    for (const auto& pr : pairings(f)) {
      auto rep = points_group_iso_check(pr, f);
      EXPECT_TRUE(rep.ok()) << pr.family << " / " << pr.hopf << " over " << f.to_string() << ": "
                            << rep.hopf_points << " vs " << rep.aut_points
                            << (rep.failures.empty() ? "" : " " + rep.failures.front());
    }
  }
}

TEST(PointsIso, WrongMatrixIsRejected) {
  auto f = gf(7);
  Pairing bad{"A2", {el(f, 1), std::nullopt}, "H2", el(f, 1), {{"a", "b"}, {"b", "a^2"}}};
  EXPECT_FALSE(points_group_iso_check(bad, f).ok());
}

}  // namespace
}  // namespace evohopf
