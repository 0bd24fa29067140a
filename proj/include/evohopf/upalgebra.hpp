#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evohopf/evolution.hpp"
#include "evohopf/groebner.hpp"

namespace evohopf {

// p(a,b) = l0 ab + l1 ab* + l2 a*b + l3 a*b*.
struct ProductLaw {
  std::vector<FieldElement> lambda;  // size 4

  static ProductLaw make(const FieldSpec& f, long long l0, long long l1, long long l2, long long l3);
  // "l0,l1,l2,l3" with entries in the field's text form.
  static ProductLaw parse(const FieldSpec& f, std::string_view text);
  FieldSpec field() const { return lambda.at(0).field(); }
  FieldElement sum() const;
  std::string to_string() const;
};

// p evaluated on a, b given together with their involutes.
Polynomial law_value(const ProductLaw& law, const Polynomial& a, const Polynomial& a_star,
                     const Polynomial& b, const Polynomial& b_star);

// K[x_i, x_i*] modulo the *-ideal of p(x_i,x_i) - sum_j w_ji x_j and p(x_i,x_j), i != j.
class UniversalPAlgebra {
 public:
  UniversalPAlgebra(EvolutionAlgebra algebra, ProductLaw law);

  const EvolutionAlgebra& algebra() const { return algebra_; }
  const ProductLaw& law() const { return law_; }
  const RingPtr& ring() const { return ring_; }
  const QuotientAlgebra& quotient() const { return *quotient_; }
  std::shared_ptr<const QuotientAlgebra> quotient_ptr() const { return quotient_; }
  std::size_t n() const { return algebra_.dim(); }
  // The class of x_i and of x_i*.
  Polynomial x(std::size_t i) const;
  Polynomial x_star(std::size_t i) const;
  const std::vector<Polynomial>& relations() const { return relations_; }

 private:
  EvolutionAlgebra algebra_;
  ProductLaw law_;
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  std::shared_ptr<const QuotientAlgebra> quotient_;
};

UniversalPAlgebra build_upalgebra(const EvolutionAlgebra& a, const ProductLaw& law);
// Names x, y for n = 2, otherwise x1..xn; starred partners follow.
std::vector<std::string> generator_names(std::size_t n);

bool faithful(const UniversalPAlgebra& u);
// Coefficients c with sum c_i x_i = 0 in U_p, i.e. sum c_i e_i in the kernel.
std::optional<Vec> kernel_relation(const UniversalPAlgebra& u);
std::vector<Vec> kernel_basis(const UniversalPAlgebra& u);

// Subalgebra of U_p generated by the x_i and x_i*.
class TightPAlgebra {
 public:
  bool finite() const { return finite_; }
  std::size_t dim() const { return basis_.size(); }
  // Normal forms, reduced echelon against the ambient standard monomials,
  // ordered by ascending leading monomial.
  const std::vector<Polynomial>& basis() const { return basis_; }
  const QuotientAlgebra& ambient() const { return *ambient_; }
  // Coordinates against basis(), or nullopt if f is not in the subalgebra.
  std::optional<Vec> coordinates(const Polynomial& f) const;
  Polynomial from_coordinates(const Vec& c) const;
  const std::optional<Polynomial>& unit() const { return unit_; }
  bool contains_one() const { return contains_one_; }
  // c[i][j] = coordinates of b_i b_j.
  const std::vector<std::vector<Vec>>& structure_constants() const { return constants_; }
  // Row i = coordinates of b_i*.
  const Matrix& star_matrix() const { return star_; }

 private:
  friend TightPAlgebra tight_algebra(const UniversalPAlgebra& u);
  bool finite_ = false;
  std::shared_ptr<const QuotientAlgebra> ambient_;
  std::vector<Polynomial> basis_;
  std::vector<Vec> ambient_coords_;
  std::vector<std::size_t> pivots_;
  std::optional<Polynomial> unit_;
  bool contains_one_ = false;
  std::vector<std::vector<Vec>> constants_;
  Matrix star_;
};

// Infinite-dimensional U_p yields finite() == false and an empty basis.
TightPAlgebra tight_algebra(const UniversalPAlgebra& u);
std::vector<std::vector<Vec>> structure_constants(const TightPAlgebra& t);

// Commutative associative algebra with an involution given on its generators.
struct StarTarget {
  std::shared_ptr<const QuotientAlgebra> algebra;
  std::vector<Polynomial> star_images;  // involution, one image per variable
  std::vector<Polynomial> pair_basis;   // elements written (1,0), (0,1) in the text form
  std::string description;

  Polynomial star(const Polynomial& f) const;
  Polynomial pair(const FieldElement& a, const FieldElement& b) const;

  // K^2 with (x,y)(z,t) = (xz - yt, xt + yz) and (x,y)* = (x,-y).
  static StarTarget complex_like(const FieldSpec& f);
  // K^2 componentwise, involution the exchange (or the identity).
  static StarTarget split(const FieldSpec& f, bool exchange);
  // K^2 with (x,y)(z,t) = (yt, 0), identity involution.
  static StarTarget nil_square(const FieldSpec& f);
  // K^2 with (x,y)(z,t) = (xz, 0), identity involution.
  static StarTarget first_projection(const FieldSpec& f);
};

struct RepresentationReport {
  bool multiplicative = false;  // sigma(e_i e_j) = p(sigma e_i, sigma e_j)
  bool injective = false;
  bool factors_through = false;  // U_p -> target, x_i -> sigma(e_i), kills every relation
  std::vector<std::string> failures;
  bool ok() const { return multiplicative && injective && factors_through; }
};

RepresentationReport check_representation(const EvolutionAlgebra& a, const ProductLaw& law,
                                          const StarTarget& target,
                                          const std::vector<Polynomial>& images);

// *-automorphisms of T over a finite field, determined by the images of the
// given algebra generators (elements of T). Each result has rows theta(b_i).
std::vector<Matrix> star_automorphisms(const TightPAlgebra& t, const std::vector<Polynomial>& generators,
                                       std::uint64_t bound = 100'000'000);

struct SymImageReport {
  bool sym_image = false;              // NF(x_i*) == NF(x_i) for all i
  std::vector<Vec> kernel;             // basis of the kernel of rho
  bool kernel_is_ideal = false;
  bool quotient_associative = false;   // A / ker rho
};

SymImageReport sym_image_consequence(const EvolutionAlgebra& a, const ProductLaw& law);

}  // namespace evohopf
