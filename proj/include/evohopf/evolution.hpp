#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evohopf/linalg.hpp"
#include "evohopf/polynomial.hpp"

namespace evohopf {

// Evolution algebra with natural basis e_1..e_n and e_i^2 = sum_j omega[j][i] e_j.
class EvolutionAlgebra {
 public:
  EvolutionAlgebra(FieldSpec field, Matrix omega, std::string name = "");

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return omega_.size(); }
  const Matrix& omega() const { return omega_; }
  const std::string& name() const { return name_; }
  // Coordinates of e_i^2.
  Vec square(std::size_t i) const;
  Vec multiply(const Vec& u, const Vec& v) const;
  Vec basis_vector(std::size_t i) const;

 private:
  FieldSpec field_;
  Matrix omega_;
  std::string name_;
};

struct FamilyParams {
  std::optional<FieldElement> alpha;
  std::optional<FieldElement> beta;
};

// A1, A2(α), A3(α), A4(α), A5ab(α,β), A5, A6, A7, A8(α).
EvolutionAlgebra family(const std::string& name, const FieldSpec& field, const FamilyParams& params = {});
std::vector<std::string> family_names();
bool family_takes_alpha(const std::string& name);
bool family_takes_beta(const std::string& name);

bool is_perfect(const EvolutionAlgebra& a);
bool is_associative(const EvolutionAlgebra& a);

// Polynomial equations on the matrix entries of an automorphism f(e_i) = sum_j m_ij e_j,
// plus det * u - 1. For n = 2 the unknowns are a, b, c, d, u.
struct AutSystem {
  RingPtr ring;
  std::vector<Polynomial> equations;
  std::size_t n = 0;
};

AutSystem aut_system(const EvolutionAlgebra& a);

// All automorphisms over a finite field, as matrices whose rows are the images
// of the basis vectors, in lexicographic order of their entries.
std::vector<Matrix> aut_points(const EvolutionAlgebra& a, std::uint64_t bound = 100'000'000);
// |aut_points|, after checking the set is closed under composition and inverses.
std::size_t group_order(const EvolutionAlgebra& a);
bool closed_under_composition(const std::vector<Matrix>& group);

// m maps a's basis into b: f(e_i) = sum_j m[i][j] e'_j.
bool is_homomorphism(const EvolutionAlgebra& a, const EvolutionAlgebra& b, const Matrix& m);
bool is_isomorphism(const EvolutionAlgebra& a, const EvolutionAlgebra& b, const Matrix& m);

// For a 2-dimensional algebra with e_2^2 = 0: which of zero product, A6, A7 it is,
// with an isomorphism from the model algebra.
struct NullSquareCase {
  std::string model;  // "zero", "A6" or "A7"
  Matrix iso;         // model -> a
};
std::optional<NullSquareCase> classify_null_second_square(const EvolutionAlgebra& a);

std::string matrix_to_string(const Matrix& m);

}  // namespace evohopf
