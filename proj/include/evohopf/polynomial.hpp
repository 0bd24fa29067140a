#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "evohopf/fields.hpp"

namespace evohopf {

inline constexpr std::size_t kMaxVars = 16;

// Variable names plus an involutive permutation of them.
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);
  VariableSet(std::vector<std::string> names, std::vector<std::size_t> involution);
  // base..., then base* for each base name; involution swaps the two halves.
  static VariableSet with_stars(const std::vector<std::string>& base);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t partner(std::size_t i) const { return involution_.at(i); }
  const std::vector<std::size_t>& involution() const { return involution_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> involution_;
};

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  static Monomial var(std::size_t i, std::uint16_t e = 1);
  bool is_one() const { return degree == 0; }
  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Requires o | *this.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class MonomialOrder {
 public:
  enum class Kind { Degrevlex, Lex, Block };

  static MonomialOrder degrevlex(std::vector<std::size_t> priority = {});
  static MonomialOrder lex(std::vector<std::size_t> priority = {});
  // Degrevlex on the first block_size variables of priority, then inner on the rest.
  static MonomialOrder block(std::vector<std::size_t> priority, std::size_t block_size,
                             Kind inner = Kind::Degrevlex);
  static MonomialOrder parse(std::string_view name);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;
  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_ = Kind::Degrevlex;
  Kind inner_ = Kind::Degrevlex;
  std::size_t block_size_ = 0;
  std::vector<std::size_t> priority_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr make(VariableSet vars, FieldSpec field,
                      MonomialOrder order = MonomialOrder::degrevlex());

  const VariableSet& vars() const { return vars_; }
  const FieldSpec& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return vars_.size(); }
  RingPtr with_order(MonomialOrder order) const;

  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, vars_.size());
  }
  FieldElement zero() const { return FieldElement::zero(field_); }
  FieldElement one() const { return FieldElement::one(field_); }
  FieldElement scalar(long long v) const { return FieldElement::from_int(field_, v); }

  bool same_as(const Ring& o) const;

 private:
  Ring(VariableSet vars, FieldSpec field, MonomialOrder order);
  VariableSet vars_;
  FieldSpec field_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  FieldElement coef;
};

class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, const Monomial& m, const FieldElement& c);
  // Terms may be unsorted and repeated.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  // Sorted strictly decreasing under the ring order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  std::uint32_t total_degree() const;

  const Term& leading_term() const;
  const Monomial& lm() const { return leading_term().mono; }
  const FieldElement& lc() const { return leading_term().coef; }
  Term leading_term(const MonomialOrder& order) const;
  FieldElement coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const FieldElement& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // this - c * m * g, keeping the result sorted.
  Polynomial sub_mul(const FieldElement& c, const Monomial& m, const Polynomial& g) const;
  Polynomial mul_term(const FieldElement& c, const Monomial& m) const;
  Polynomial monic() const;

  Polynomial apply_involution() const;
  FieldElement evaluate(const std::vector<FieldElement>& point) const;
  // Ring homomorphism sending variable i to images[i]; images share a target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr& target) const;
  // Same variables and field, terms re-sorted under another ring's order.
  Polynomial in_ring(const RingPtr& other) const;
  bool uses_variable(std::size_t i) const;

  std::string to_string() const;

 private:
  void check(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial scalar_mul(const FieldElement& c, const Polynomial& f);
Polynomial apply_involution(const Polynomial& f);
Term leading_term(const Polynomial& f, const MonomialOrder& order);
FieldElement evaluate(const Polynomial& f, const std::vector<FieldElement>& point);
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);
// Monic gcd of two polynomials in (at most) one common variable.
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b);

std::string monomial_to_string(const Monomial& m, const VariableSet& vars);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

}  // namespace evohopf
