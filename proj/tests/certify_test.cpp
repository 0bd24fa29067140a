#include <gtest/gtest.h>

#include <random>

#include "evohopf/certify.hpp"
#include "test_util.hpp"

namespace evohopf {
namespace {

const FieldSpec Q = FieldSpec::rationals();
FieldElement el(const FieldSpec& f, long long v) { return FieldElement::from_int(f, v); }

class CertificateCaseTest : public ::testing::TestWithParam<CertificateCase> {};

TEST_P(CertificateCaseTest, AllClaimsHold) {
  auto r = run_certificate(GetParam());
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.name << ": " << c.what;
  EXPECT_LT(r.elapsed_ms, 30000.0);
}

INSTANTIATE_TEST_SUITE_P(Cases, CertificateCaseTest, ::testing::ValuesIn(certificate_cases()),
                         [](const auto& info) { return "case" + std::to_string(info.index); });

TEST(Certificates, CoverEveryFamily) {
  std::size_t n3 = 0, n4 = 0, n5 = 0;
  for (const auto& c : certificate_cases()) {
    n3 += c.family == "A3";
    n4 += c.family == "A4";
    n5 += c.family == "A5ab";
  }
  EXPECT_EQ(n3, 9u);
  EXPECT_EQ(n4, 10u);
  EXPECT_EQ(n5, 7u);
}

TEST(Certificates, FalseClaimIsRejected) {
  CertificateCase c;
  c.name = "A1 control";
  c.family = "A1";
  c.law = "0,1,0,0";
  c.members = {"x"};
  c.expect_faithful = true;
  auto r = run_certificate(c);
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_FALSE(r.checks[0].pass);
  EXPECT_TRUE(r.checks[1].pass);
  EXPECT_FALSE(r.ok());

  auto bad = certificate_cases()[10];  // A4 l0=0 l1!=l2
  bad.subsystem = {"x*y - z*t", "x^2 + 3*x*z - t"};
  EXPECT_FALSE(run_certificate(bad).ok());
}

// The A5ab cases are stated through the system in x, y, z, t; the ideal it
// generates must coincide with the one built from the family.
TEST(Certificates, A5SystemMatchesFamily) {
  RingPtr R = xyzt_ring(Q);
  const char* law[] = {"1,0,0,1", "1,1,0,0", "1,0,0,0", "1,0,0,3", "1,0,0,2", "1,0,0,-1", "1,1,1,0"};
  for (const char* text : law) {
    auto lw = ProductLaw::parse(Q, text);
    auto s = [&](int i) { return lw.lambda[i].to_string(); };
    std::string l = s(0), m = s(1), n = s(2), p = s(3);
    // alpha = 1, beta = 2
    std::vector<std::string> sys = {
        l + "*x*y + " + m + "*x*t + " + n + "*z*y + " + p + "*z*t",
        l + "*x*y + " + m + "*y*z + " + n + "*t*x + " + p + "*t*z",
        l + "*t*z + " + m + "*y*z + " + n + "*t*x + " + p + "*x*y",
        l + "*t*z + " + m + "*t*x + " + n + "*y*z + " + p + "*x*y",
        l + "*x^2 + " + m + "*x*z + " + n + "*x*z + " + p + "*z^2 - x - y",
        l + "*z^2 + " + m + "*x*z + " + n + "*x*z + " + p + "*x^2 - z - t",
        l + "*y^2 + " + m + "*t*y + " + n + "*t*y + " + p + "*t^2 - 2*x - y",
        l + "*t^2 + " + m + "*t*y + " + n + "*t*y + " + p + "*y^2 - 2*z - t",
    };
    std::vector<Polynomial> gens;
    for (const auto& e : sys) gens.push_back(Polynomial::parse(R, e));
    StarIdeal mine(R, gens, false);

    auto u = build_upalgebra(family("A5ab", Q, {el(Q, 2), el(Q, 1)}), lw);
    std::vector<Polynomial> images = {u.x(0), u.x(1), u.x_star(0), u.x_star(1)};
    for (const auto& g : gens) EXPECT_TRUE(u.quotient().reduce(g.substitute(images, u.ring())).is_zero()) << text;
    // And back: the family relations, pulled into x, y, z, t.
    std::vector<Polynomial> back = {Polynomial::variable(R, "x"), Polynomial::variable(R, "y"),
                                    Polynomial::variable(R, "z"), Polynomial::variable(R, "t")};
    for (const auto& g : u.relations()) EXPECT_TRUE(member(g.substitute(back, R), mine)) << text;
  }
}

TEST(A3Combination, VanishesIdentically) {
  std::mt19937 rng(7);
  for (const FieldSpec& f : {Q, FieldSpec::prime(3), FieldSpec::prime(7)}) {
    EXPECT_TRUE(a3_combination(f, el(f, 1), el(f, 0), el(f, 1)).is_zero());
    for (int i = 0; i < 20; ++i) {
      auto l0 = testing::random_scalar(rng, f), l3 = testing::random_scalar(rng, f);
      auto a = testing::random_scalar(rng, f);
      EXPECT_TRUE(a3_combination(f, l0, l3, a).is_zero()) << l0 << " " << l3 << " " << a;
    }
  }
}

TEST(Char2Elimination, GcdIsZ) {
  auto r = char2_elimination();
  EXPECT_TRUE(r.references_in_ideal);
  EXPECT_EQ(r.gcd->to_string(), "z");
  EXPECT_TRUE(r.gcd_is_z);
  EXPECT_TRUE(r.z_in_ideal);
  ASSERT_EQ(r.eliminated.size(), 1u);
  EXPECT_EQ(r.eliminated[0].to_string(), "z");
}

TEST(TightHopf, PerfectCasesMatch) {
  for (const FieldSpec& f : {Q, FieldSpec::prime(5), FieldSpec::prime(7)}) {
    for (const auto& c : tight_hopf_correspondences(f)) {
      auto r = compare_tight_hopf(c, f);
      EXPECT_TRUE(r.ok()) << c.family << " " << f.to_string();
      EXPECT_EQ(r.dim_tight, r.dim_hopf);
    }
  }
  auto cs = tight_hopf_correspondences(Q);
  EXPECT_EQ(compare_tight_hopf(cs[1], Q).dim_tight, 6u);
  EXPECT_EQ(compare_tight_hopf(cs[0], Q).dim_tight, 2u);
}

TEST(TightHopf, WrongImagesFail) {
  auto cs = tight_hopf_correspondences(Q);
  auto c = cs[1];
  c.images = {"y", "x"};  // a <-> y sends a*b to 0 but a^3 + b^3 - 1 still holds
  EXPECT_TRUE(compare_tight_hopf(c, Q).ok());
  c.images = {"x", "x"};
  auto r = compare_tight_hopf(c, Q);
  EXPECT_FALSE(r.well_defined);
  EXPECT_FALSE(r.ok());
  auto d = cs[0];
  d.images = {"x + y"};  // the unit: relation holds but the map is not onto
  auto rd = compare_tight_hopf(d, Q);
  EXPECT_TRUE(rd.well_defined);
  EXPECT_FALSE(rd.bijective);
}

}  // namespace
}  // namespace evohopf
