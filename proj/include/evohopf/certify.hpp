#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evohopf/evolution.hpp"
#include "evohopf/hopf.hpp"
#include "evohopf/upalgebra.hpp"

namespace evohopf {

// A membership claim about U_p of a two-dimensional family. Polynomials are
// written in x, y, z = x*, t = y*.
struct CertificateCase {
  std::string name;
  std::string family;
  FieldSpec field = FieldSpec::rationals();
  FamilyParams params;
  std::string law;  // "l0,l1,l2,l3"
  std::vector<std::string> members;
  // Listed elements of I and what they generate on their own.
  std::vector<std::string> subsystem;
  std::vector<std::string> subsystem_targets;
  bool expect_faithful = false;
};

struct CertificateCheck {
  std::string what;
  bool pass = false;
};

struct CertificateResult {
  std::string name;
  std::vector<CertificateCheck> checks;
  double elapsed_ms = 0;
  bool ok() const;
};

// Cases for A3(1), A4(1) and A5ab, the last at alpha = 1, beta = 2 in the
// convention e1^2 = e1 + alpha e2, e2^2 = beta e1 + e2.
std::vector<CertificateCase> certificate_cases();
CertificateResult run_certificate(const CertificateCase& c);

// Ring K[x, y, z, t] with z = x*, t = y*.
RingPtr xyzt_ring(const FieldSpec& f);

// The combination
//   t^2 p1 + (xy - tz) p3 - ty p2 - x^2 p5 + xz p4
//   + (xy - tz)[l0(tx + tz) + tx - t - l3(xy + yz) - x - yz] + alpha(xz^2 - x^3)
// for the A3 system with l1 = l2 = 1. It vanishes identically.
Polynomial a3_combination(const FieldSpec& f, const FieldElement& l0, const FieldElement& l3,
                          const FieldElement& alpha);

// A4(1) over GF(2) with law (0,1,1,1): eliminate x, y, t and compare the
// univariate result with the reference polynomials in z.
struct EliminationReport {
  std::vector<Polynomial> eliminated;  // generators of I cap K[z]
  std::vector<Polynomial> reference;
  std::optional<Polynomial> gcd;       // monic gcd of the reference polynomials
  bool references_in_ideal = false;
  bool gcd_is_z = false;
  bool z_in_ideal = false;
  bool ok() const { return references_in_ideal && gcd_is_z && z_in_ideal; }
};

EliminationReport char2_elimination();

// An algebra map from a catalog Hopf algebra onto T_p, given by the images of
// the Hopf variables as polynomials in the ring of U_p. The unit goes to the
// unit of T_p.
struct TightHopfCorrespondence {
  std::string family;
  FamilyParams params;
  std::string law;
  std::string hopf;
  std::optional<FieldElement> hopf_alpha;
  std::vector<std::string> images;  // one per Hopf variable
};

// A1 and A5ab(2,2) against H1, A2(1) against H2(1).
std::vector<TightHopfCorrespondence> tight_hopf_correspondences(const FieldSpec& f);

struct TightHopfReport {
  std::size_t dim_tight = 0;
  std::size_t dim_hopf = 0;
  bool well_defined = false;     // the Hopf relations map to zero
  bool bijective = false;        // a basis of H maps to a basis of T
  bool constants_match = false;  // structure constants agree under the map
  std::vector<std::string> failures;
  bool ok() const { return well_defined && bijective && constants_match; }
};

TightHopfReport compare_tight_hopf(const TightHopfCorrespondence& c, const FieldSpec& f);

}  // namespace evohopf
