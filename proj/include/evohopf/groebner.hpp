#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "evohopf/linalg.hpp"
#include "evohopf/polynomial.hpp"

namespace evohopf {

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

// Reduced monic Groebner basis, sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

// Normal selection strategy with the coprime and chain criteria.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, BuchbergerStats* stats = nullptr);
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                         BuchbergerStats* stats = nullptr);

// Full reduction of f by an arbitrary list (not necessarily a Groebner basis).
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors);

// Ideal given by generators; when star_closed, the involutes are adjoined.
class StarIdeal {
 public:
  StarIdeal(RingPtr ring, std::vector<Polynomial> generators, bool star_closed = true);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool star_closed() const { return star_closed_; }
  // Computed once and shared between copies.
  const GroebnerBasis& groebner() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  bool star_closed_;
  std::shared_ptr<Cache> cache_;
};

struct QuotientBasis {
  bool finite = false;
  std::vector<Monomial> monomials;  // ascending; empty when infinite
};

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool member(const Polynomial& f, const StarIdeal& ideal);
// Reduced basis of the ideal intersected with the subring free of `remove`,
// computed under lex with `remove` (in the given order) as the largest variables.
std::vector<Polynomial> eliminate(const StarIdeal& ideal, const std::vector<std::size_t>& remove);
QuotientBasis quotient_basis(const GroebnerBasis& gb, std::size_t limit = 1u << 20);
QuotientBasis quotient_basis(const StarIdeal& ideal);
// A nonzero c with sum c_i NF(elems_i) = 0 (first nonzero entry 1), if any.
std::optional<Vec> linear_dependence_over_field(const std::vector<Polynomial>& elems,
                                                const GroebnerBasis& gb);
// Basis of all such relations.
std::vector<Vec> linear_relations(const std::vector<Polynomial>& elems, const GroebnerBasis& gb);

class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(StarIdeal ideal);

  const RingPtr& ring() const { return ideal_.ring(); }
  const StarIdeal& ideal() const { return ideal_; }
  const GroebnerBasis& gb() const { return ideal_.groebner(); }
  const QuotientBasis& basis() const { return basis_; }
  bool finite() const { return basis_.finite; }
  std::optional<std::size_t> dimension() const;

  Polynomial reduce(const Polynomial& f) const { return gb().normal_form(f); }
  Polynomial multiply(const Polynomial& f, const Polynomial& g) const { return reduce(f * g); }
  Polynomial star(const Polynomial& f) const;
  // Coordinates of NF(f) against basis().monomials; needs a finite quotient.
  Vec coordinates(const Polynomial& f) const;
  Polynomial from_coordinates(const Vec& v) const;

 private:
  StarIdeal ideal_;
  QuotientBasis basis_;
};

Polynomial quotient_multiply(const Polynomial& f, const Polynomial& g, const QuotientAlgebra& q);

// Oracle-style check that every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& g);

}  // namespace evohopf
