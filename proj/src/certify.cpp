#include "evohopf/certify.hpp"

#include <chrono>

#include "evohopf/error.hpp"

namespace evohopf {

namespace {

FamilyParams alpha_only(const FieldSpec& f, long long a) {
  return {FieldElement::from_int(f, a), std::nullopt};
}

CertificateCase a3(std::string name, std::string law, std::vector<std::string> members) {
  CertificateCase c;
  c.name = "A3 " + std::move(name);
  c.family = "A3";
  c.params = alpha_only(c.field, 1);
  c.law = std::move(law);
  c.members = std::move(members);
  return c;
}

CertificateCase a4(std::string name, std::string law, std::vector<std::string> subsystem,
                   FieldSpec field = FieldSpec::rationals()) {
  CertificateCase c;
  c.name = "A4 " + std::move(name);
  c.family = "A4";
  c.field = field;
  c.params = alpha_only(field, 1);
  c.law = std::move(law);
  c.members = {"t"};
  c.subsystem = std::move(subsystem);
  if (!c.subsystem.empty()) c.subsystem_targets = {"t"};
  return c;
}

// Family A5ab(a, b) has e1^2 = e1 + b e2 and e2^2 = a e1 + e2.
CertificateCase a5(std::string name, std::string law, std::vector<std::string> members) {
  CertificateCase c;
  c.name = "A5ab " + std::move(name);
  c.family = "A5ab";
  c.params = {FieldElement::from_int(c.field, 2), FieldElement::from_int(c.field, 1)};
  c.law = std::move(law);
  c.members = std::move(members);
  return c;
}

}  // namespace

bool CertificateResult::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

RingPtr xyzt_ring(const FieldSpec& f) {
  return Ring::make(VariableSet({"x", "y", "z", "t"}, {2, 3, 0, 1}), f);
}

std::vector<CertificateCase> certificate_cases() {
  std::vector<CertificateCase> cs;

  cs.push_back(a3("l0=l3", "1,0,0,1", {"x - z", "y - t"}));
  cs.push_back(a3("l1!=l2", "1,1,0,0", {"x*y - z*t", "x*t - z*y", "x - z", "x"}));
  cs.push_back(a3("l1!=l2 sum=0", "1,1,0,-2", {"x"}));
  cs.push_back(a3("l1=l2=0 l3=0", "1,0,0,0", {"x*y", "x"}));
  cs.push_back(a3("l1=l2=0 l3!=0", "1,0,0,2", {"x*y", "z*y", "x^2", "x"}));
  cs.push_back(a3("l1=l2=0 l0+l3=0", "1,0,0,-1", {"x + z", "x"}));
  cs.push_back(a3("l1=l2=1 generic", "1,1,1,0", {"x*z^2 - x^3", "x^2 - z*x", "z - x", "x*t", "x"}));
  {
    auto c = a3("l1=l2=1 l0+l3=0", "1,1,1,-1", {"x"});
    c.subsystem = {"2*x^2 - x", "t*x + x*y", "t^2 - y^2 + 2*t*y - t - x",
                   "-t^2 + y^2 + 2*t*y - x - y"};
    c.subsystem_targets = {"x"};
    cs.push_back(c);
  }
  cs.push_back(a3("l1=l2=1 l0+l3=-2", "1,1,1,-3", {"x"}));

  cs.push_back(a4("l0=l3", "1,0,0,1", {}));
  cs.back().members = {"y - t", "x - z"};
  cs.push_back(a4("l0=0 l1!=l2", "0,1,2,1",
                  {"x*y - z*t", "3*x*z + z^2 - y", "3*y*t + t^2 - x - y", "x*y + x*t + 2*z*y",
                   "x*y + 2*x*t + z*y", "x^2 + 3*x*z - t", "y^2 + 3*y*t - z - t"}));
  cs.push_back(a4("l0=0 l1=l2!=0", "0,1,1,1",
                  {"x*y - z*t", "2*x*z + z^2 - y", "2*y*t + t^2 - x - y", "x*y + x*t + z*y",
                   "x^2 + 2*x*z - t", "y^2 + 2*y*t - z - t", "z*t + z*y + x*t"}));
  cs.push_back(a4("l0=0 l1=l2=0", "0,0,0,1",
                  {"x*y - z*t", "z^2 + t^2 - x - 2*y", "x*y", "x^2 - t", "y^2 - z - t", "z*t"}));
  cs.push_back(a4("l0!=0 l1!=l2 l0+l1+l2!=0", "1,1,2,0", {}));
  cs.push_back(a4("l0!=0 l1!=l2 l0+l1+l2=0", "-3,1,2,0",
                  {"x*y - z*t", "-3*x^2 + 3*x*z - y", "-3*y^2 + 3*y*t - x - y",
                   "-3*x*y + x*t + 2*z*y", "-3*x*y + 2*x*t + z*y", "3*x*z - 3*z^2 - t",
                   "3*y*t - 3*t^2 - z - t", "-3*z*t + z*y + 2*x*t", "-3*z*t + 2*z*y + x*t"}));
  cs.push_back(a4("l0=1 l1=l2 l1 not in {-1,0}", "1,2,2,0",
                  {"x*y - z*t", "x^2 + 4*x*z - y", "y^2 + 4*y*t - x - y", "x*y + 2*x*t + 2*z*y",
                   "4*x*z + z^2 - t", "4*y*t + t^2 - z - t", "z*t + 2*z*y + 2*x*t"}));
  cs.push_back(a4("l0=1 l1=l2=0", "1,0,0,0",
                  {"x*y - z*t", "x^2 - y", "y^2 - x - y", "x*y", "z^2 - t", "t^2 - z - t", "z*t"}));
  cs.push_back(a4("l0=1 l1=l2=-1", "1,-1,-1,0",
                  {"x*y - z*t", "x^2 - 2*x*z - y", "y^2 - 2*y*t - x - y", "x*y - x*t - z*y",
                   "-2*x*z + z^2 - t", "-2*y*t + t^2 - z - t", "z*t - z*y - x*t"}));
  cs.push_back(a4("l0=1 l1=l2 char 2", "1,1,1,0",
                  {"x*y + z*t", "x^2 + y", "y^2 + x + y", "x*y + x*t + z*y", "z^2 + t", "t^2 + z + t"},
                  FieldSpec::prime(2)));

  cs.push_back(a5("p=l", "1,0,0,1", {"x - z", "y - t"}));
  cs.push_back(a5("p!=l m!=n", "1,1,0,0", {"x*y - t*z", "t*x - y*z", "x^2 - z^2", "y^2 - t^2"}));
  cs.push_back(a5("p=m=n=0", "1,0,0,0", {"x", "y"}));
  cs.push_back(a5("m=n=0 p^2!=l^2 p!=beta l", "1,0,0,3", {"x", "y", "z", "t"}));
  cs.push_back(a5("m=n=0 p=beta l", "1,0,0,2", {"x*z", "x^2", "x", "y"}));
  cs.push_back(a5("m=n=0 p=-l", "1,0,0,-1", {"x + z", "y + t"}));
  cs.push_back(a5("p!=l m=n=1", "1,1,1,0",
                  {"x*y - t*z", "y*t - 2*x*z", "y^2 - 2*z^2", "t^2 - 2*x^2", "-t*x + x^2 + y*z - z^2",
                   "y*z - x*t", "x^2 - z^2", "y^2 - t^2"}));
  return cs;
}

CertificateResult run_certificate(const CertificateCase& c) {
  auto start = std::chrono::steady_clock::now();
  CertificateResult r;
  r.name = c.name;

  EvolutionAlgebra a = family(c.family, c.field, c.params);
  UniversalPAlgebra u = build_upalgebra(a, ProductLaw::parse(c.field, c.law));
  RingPtr local = xyzt_ring(c.field);
  std::vector<Polynomial> images = {u.x(0), u.x(1), u.x_star(0), u.x_star(1)};
  auto lift = [&](const std::string& s) {
    return Polynomial::parse(local, s).substitute(images, u.ring());
  };

  for (const auto& m : c.members)
    r.checks.push_back({m + " in I", u.quotient().reduce(lift(m)).is_zero()});

  if (!c.subsystem.empty()) {
    std::vector<Polynomial> sub;
    bool all_in = true;
    for (const auto& s : c.subsystem) {
      sub.push_back(Polynomial::parse(local, s));
      all_in = all_in && u.quotient().reduce(lift(s)).is_zero();
    }
    r.checks.push_back({"listed elements in I", all_in});
    StarIdeal j(local, sub, false);
    for (const auto& tgt : c.subsystem_targets)
      r.checks.push_back({tgt + " in (listed)", member(Polynomial::parse(local, tgt), j)});
  }

  r.checks.push_back({c.expect_faithful ? "faithful" : "not faithful", faithful(u) == c.expect_faithful});
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Polynomial a3_combination(const FieldSpec& f, const FieldElement& l0, const FieldElement& l3,
                          const FieldElement& alpha) {
  RingPtr R = xyzt_ring(f);
  auto v = [&](const char* n) { return Polynomial::variable(R, n); };
  auto k = [&](const FieldElement& c) { return Polynomial::constant(R, c); };
  auto n = [&](long long c) { return Polynomial::constant(R, FieldElement::from_int(f, c)); };
  Polynomial x = v("x"), y = v("y"), z = v("z"), t = v("t");
  Polynomial p1 = k(l3) * x * x + n(2) * x * z + k(l0) * z * z - z;
  Polynomial p2 = k(l0) * x * x + n(2) * x * z - x + k(l3) * z * z;
  Polynomial p3 = t * x + k(l0 + l3) * x * y + y * z;
  Polynomial p4 = k(l0) * t * t + n(2) * t * y - t + k(l3) * y * y - k(alpha) * z;
  Polynomial p5 = k(l3) * t * t + n(2) * t * y - k(alpha) * x + k(l0) * y * y - y;
  Polynomial q = x * y - t * z;
  Polynomial bracket = k(l0) * (t * x + t * z) + t * x - t - k(l3) * (x * y + y * z) - x - y * z;
  return t * t * p1 + q * p3 - t * y * p2 - x * x * p5 + x * z * p4 + q * bracket +
         k(alpha) * (x * z * z - x * x * x);
}

EliminationReport char2_elimination() {
  FieldSpec f = FieldSpec::prime(2);
  RingPtr R = xyzt_ring(f);
  std::vector<Polynomial> gens;
  for (const char* s : {"x*y - z*t", "z^2 - y", "t^2 - x - y", "x*y + x*t + z*y", "x^2 - t", "y^2 - z - t"})
    gens.push_back(Polynomial::parse(R, s));
  StarIdeal ideal(R, gens, false);

  EliminationReport r;
  // x, y, t removed in that order; z is index 2.
  r.eliminated = eliminate(ideal, {0, 1, 3});
  for (const char* s : {"z^10 + z^5 + z^2", "z^16 + z^4 + z", "z^12 + z^10 + z^9 + z^3"})
    r.reference.push_back(Polynomial::parse(R, s));

  r.references_in_ideal = true;
  for (const auto& g : r.reference) r.references_in_ideal = r.references_in_ideal && member(g, ideal);
  r.gcd = univariate_gcd(univariate_gcd(r.reference[0], r.reference[1]), r.reference[2]);
  Polynomial z = Polynomial::variable(R, "z");
  r.gcd_is_z = *r.gcd == z;
  r.z_in_ideal = member(z, ideal);
  return r;
}

}  // namespace evohopf

namespace evohopf {

std::vector<TightHopfCorrespondence> tight_hopf_correspondences(const FieldSpec& f) {
  auto el = [&](long long v) { return FieldElement::from_int(f, v); };
  return {
      {"A1", {}, "0,1,0,0", "H1", std::nullopt, {"x"}},
      {"A2", {el(1), std::nullopt}, "0,0,0,1", "H2", el(1), {"x", "y"}},
      {"A5ab", {el(2), el(2)}, "1,0,0,2", "H1", std::nullopt, {"x"}},
  };
}

TightHopfReport compare_tight_hopf(const TightHopfCorrespondence& c, const FieldSpec& f) {
  TightHopfReport r;
  auto u = build_upalgebra(family(c.family, f, c.params), ProductLaw::parse(f, c.law));
  TightPAlgebra t = tight_algebra(u);
  HopfPresentation h = catalog(c.hopf, f, c.hopf_alpha);
  const QuotientAlgebra& hq = h.quotient();
  if (!t.finite() || !t.unit() || !hq.finite()) {
    r.failures.push_back("infinite or non-unital algebra");
    return r;
  }
  r.dim_tight = t.dim();
  r.dim_hopf = *hq.dimension();
  if (c.images.size() != h.nvars()) throw DomainError("one image per Hopf variable expected");

  std::vector<Polynomial> images;
  for (const auto& s : c.images) images.push_back(Polynomial::parse(u.ring(), s));
  const Polynomial& e = *t.unit();
  auto psi = [&](const Polynomial& g) { return u.quotient().reduce(e * g.substitute(images, u.ring())); };

  r.well_defined = true;
  for (const auto& rel : h.relations())
    if (!psi(rel).is_zero()) {
      r.well_defined = false;
      r.failures.push_back("relation " + rel.to_string() + " maps to " + psi(rel).to_string());
    }

  // Rows: T-coordinates of the images of the standard monomials of H.
  const auto& mons = hq.basis().monomials;
  std::vector<Polynomial> hb;
  Matrix P;
  for (const auto& m : mons) {
    hb.push_back(Polynomial::term(h.ring(), m, FieldElement::one(f)));
    auto coords = t.coordinates(psi(hb.back()));
    if (!coords) {
      r.failures.push_back(hb.back().to_string() + " does not land in T");
      return r;
    }
    P.push_back(*coords);
  }
  r.bijective = r.dim_tight == r.dim_hopf && !determinant(P, f).is_zero();
  if (!r.bijective) {
    r.failures.push_back("images of the basis of H are not a basis of T");
    return r;
  }

  // (P_i)(P_j) computed in T against sum_k c_ij^k P_k computed in H.
  const auto& C = t.structure_constants();
  const std::size_t n = t.dim();
  r.constants_match = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs(n, FieldElement::zero(f));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          FieldElement w = P[i][a] * P[j][b];
          if (w.is_zero()) continue;
          for (std::size_t k = 0; k < n; ++k) lhs[k] = lhs[k] + w * C[a][b][k];
        }
      Vec cij = hq.coordinates(hb[i] * hb[j]);
      Vec rhs(n, FieldElement::zero(f));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) rhs[l] = rhs[l] + cij[k] * P[k][l];
      if (lhs != rhs) {
        r.constants_match = false;
        r.failures.push_back("product of " + hb[i].to_string() + " and " + hb[j].to_string());
      }
    }
  return r;
}

}  // namespace evohopf
