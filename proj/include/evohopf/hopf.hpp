#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evohopf/evolution.hpp"
#include "evohopf/groebner.hpp"

namespace evohopf {

// Text form of a presentation. Images of Delta use primed names v' and v'';
// a Laurent variable y gets a partner y_inv and the relation y*y_inv - 1.
// Entries for y_inv may be omitted when the image of y is a single term in
// invertible variables.
struct HopfSpec {
  std::vector<std::string> vars;
  std::vector<std::string> laurent_vars;
  std::vector<std::string> relations;
  std::map<std::string, std::string> delta;
  std::map<std::string, std::string> antipode;
  std::map<std::string, std::string> counit;
};

// Commutative Hopf algebra K[v_1..v_k]/J given on generators.
class HopfPresentation {
 public:
  static HopfPresentation from_spec(std::string name, const FieldSpec& field, const HopfSpec& spec);
  // {vars, laurent_vars, relations, delta, epsilon, antipode}
  static HopfPresentation from_json(std::string_view text, const FieldSpec& field, std::string name = "custom");

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return ring_->field(); }
  std::size_t nvars() const { return ring_->nvars(); }
  const RingPtr& ring() const { return ring_; }
  // v', v'' and v', v'', v''' copies of the variables, in that block order.
  const RingPtr& ring2() const { return ring2_; }
  const RingPtr& ring3() const { return ring3_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const QuotientAlgebra& quotient() const { return *quotient_; }
  // Copy k (0-based) of f inside ring2 or ring3.
  Polynomial copy(const Polynomial& f, std::size_t k, const RingPtr& target) const;

  // Images per variable; public so that controls can mutate them.
  std::vector<Polynomial> delta;     // in ring2
  std::vector<Polynomial> antipode;  // in ring
  std::vector<FieldElement> counit;

 private:
  std::string name_;
  RingPtr ring_, ring2_, ring3_;
  std::vector<Polynomial> relations_;
  std::shared_ptr<const QuotientAlgebra> quotient_;
};

// H1, H2 (alpha), H5 (K[x^+-], char != 2), H5alt (K[x,y]/(2xy-y-1), char != 2),
// H5_char2 (K[x], char 2), H6, H7, H8 (alpha; dual numbers in char 2), K.
HopfPresentation catalog(const std::string& name, const FieldSpec& field,
                         const std::optional<FieldElement>& alpha = std::nullopt);
std::vector<std::string> catalog_names();
// Whether the catalog row exists in this characteristic.
bool catalog_valid(const std::string& name, const FieldSpec& field);

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<std::string> witnesses;  // failing images, as text
};

struct HopfReport {
  std::vector<AxiomCheck> checks;  // well_defined, coassociativity, counit, antipode
  bool ok() const;
};

HopfReport verify_hopf(const HopfPresentation& h);

// Values for every variable, Laurent partners included.
using RationalPoint = std::vector<FieldElement>;

std::vector<RationalPoint> rational_points(const HopfPresentation& h);
RationalPoint point_product(const HopfPresentation& h, const RationalPoint& a, const RationalPoint& b);
RationalPoint counit_point(const HopfPresentation& h);
RationalPoint point_inverse(const HopfPresentation& h, const RationalPoint& a);
std::string point_to_string(const HopfPresentation& h, const RationalPoint& a);

// A family together with its Hopf algebra and the matrix of the automorphism
// attached to a point, entries in the Hopf ring (row i = image of e_i).
struct Pairing {
  std::string family;
  FamilyParams params;
  std::string hopf;
  std::optional<FieldElement> hopf_alpha;
  std::vector<std::vector<std::string>> matrix;
};

// Pairings valid over the field, at the default parameters.
std::vector<Pairing> pairings(const FieldSpec& field);
Matrix pairing_matrix(const Pairing& p, const HopfPresentation& h, const RationalPoint& point);

struct PointsIsoReport {
  std::size_t hopf_points = 0;
  std::size_t aut_points = 0;
  bool bijective = false;       // points map onto aut_points without collisions
  bool multiplicative = false;  // matrix of a*b is matrix(a) matrix(b)
  std::vector<std::string> failures;
  bool ok() const { return bijective && multiplicative && hopf_points == aut_points; }
};

PointsIsoReport points_group_iso_check(const Pairing& p, const FieldSpec& field);

}  // namespace evohopf
