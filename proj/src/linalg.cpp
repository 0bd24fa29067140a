#include "evohopf/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "evohopf/error.hpp"

namespace evohopf {

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, FieldElement::zero(f)); }

Matrix zero_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols) {
  return Matrix(rows, zero_vec(f, cols));
}

Matrix identity_matrix(const FieldSpec& f, std::size_t n) {
  Matrix m = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = FieldElement::one(f);
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw DomainError("matmul shape mismatch");
  const FieldSpec f = a[0][0].field();
  Matrix c = zero_matrix(f, a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Vec matvec(const Matrix& a, const Vec& v) {
  Vec out;
  out.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != v.size()) throw DomainError("matvec shape mismatch");
    FieldElement s = FieldElement::zero(v.empty() ? row[0].field() : v[0].field());
    for (std::size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
    out.push_back(s);
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size());
  for (std::size_t j = 0; j < a[0].size(); ++j)
    for (std::size_t i = 0; i < a.size(); ++i) t[j].push_back(a[i][j]);
  return t;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& e) { return e.is_zero(); });
}

Echelon rref(Matrix m, std::size_t ncols) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    FieldElement inv = m[row][col].inv();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      FieldElement c = m[r][col];
      for (std::size_t j = 0; j < ncols; ++j) m[r][j] -= c * m[row][j];
    }
    e.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  e.rows = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m, std::size_t ncols) { return rref(m, ncols).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m, std::size_t ncols, const FieldSpec& f) {
  Echelon e = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(f, ncols);
    v[free] = FieldElement::one(f);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

FieldElement determinant(Matrix m, const FieldSpec& f) {
  const std::size_t n = m.size();
  FieldElement det = FieldElement::one(f);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return FieldElement::zero(f);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    FieldElement inv = m[col][col].inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      FieldElement c = m[r][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[r][j] -= c * m[col][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m, const FieldSpec& f) {
  const std::size_t n = m.size();
  Matrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, FieldElement::zero(f));
    aug[i][n + i] = FieldElement::one(f);
  }
  Echelon e = rref(aug, 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(e.rows[i].begin() + n, e.rows[i].end());
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b, const FieldSpec& f) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = rref(aug, n + 1);
  Vec x = zero_vec(f, n);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == n) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][n];
  }
  return x;
}

Vec Span::reduce(Vec v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const auto p = pivot_[k];
    if (v[p].is_zero()) continue;
    FieldElement c = v[p];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!basis_[k][j].is_zero()) v[j] -= c * basis_[k][j];
  }
  return v;
}

bool Span::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Span::add(const Vec& v) {
  if (v.size() != dim_) throw DomainError("span vector has wrong length");
  Vec r = reduce(v);
  std::size_t p = dim_;
  for (std::size_t j = dim_; j-- > 0;)
    if (!r[j].is_zero()) {
      p = j;
      break;
    }
  if (p == dim_) return false;
  FieldElement inv = r[p].inv();
  for (auto& x : r) x *= inv;
  for (auto& b : basis_) {
    if (b[p].is_zero()) continue;
    FieldElement c = b[p];
    for (std::size_t j = 0; j < dim_; ++j) b[j] -= c * r[j];
  }
  basis_.push_back(std::move(r));
  pivot_.push_back(p);
  return true;
}

std::vector<std::size_t> Span::pivots() const {
  std::vector<std::size_t> p = pivot_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Vec> Span::basis() const {
  std::vector<std::size_t> idx(basis_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return pivot_[a] < pivot_[b]; });
  std::vector<Vec> out;
  for (auto i : idx) out.push_back(basis_[i]);
  return out;
}

}  // namespace evohopf
