#pragma once

#include <optional>
#include <vector>

#include "evohopf/fields.hpp"

namespace evohopf {

using Vec = std::vector<FieldElement>;
using Matrix = std::vector<Vec>;  // row-major

Vec zero_vec(const FieldSpec& f, std::size_t n);
Matrix zero_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
Matrix identity_matrix(const FieldSpec& f, std::size_t n);
Matrix matmul(const Matrix& a, const Matrix& b);
Vec matvec(const Matrix& a, const Vec& v);
Matrix transpose(const Matrix& a);
bool is_zero(const Vec& v);

struct Echelon {
  Matrix rows;                      // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(Matrix m, std::size_t ncols);
std::size_t rank(const Matrix& m, std::size_t ncols);
// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<Vec> nullspace(const Matrix& m, std::size_t ncols, const FieldSpec& f);
FieldElement determinant(Matrix m, const FieldSpec& f);
std::optional<Matrix> inverse(const Matrix& m, const FieldSpec& f);
// Some x with a x = b, if one exists.
std::optional<Vec> solve(const Matrix& a, const Vec& b, const FieldSpec& f);

// Incrementally built subspace kept in reduced echelon form. Pivots are chosen
// at the highest nonzero index, so callers can index coordinates by ascending
// monomial order and get leading-monomial pivots.
class Span {
 public:
  Span(FieldSpec f, std::size_t dim) : field_(f), dim_(dim) {}
  // Returns true if v was independent of the span (and adds it).
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  Vec reduce(Vec v) const;
  std::size_t size() const { return basis_.size(); }
  std::size_t dim() const { return dim_; }
  // Basis sorted by ascending pivot, fully reduced.
  std::vector<Vec> basis() const;
  std::vector<std::size_t> pivots() const;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivot_;
};

}  // namespace evohopf
