#include "evohopf/evolution.hpp"

#include <algorithm>
#include <set>

#include "evohopf/error.hpp"

namespace evohopf {

EvolutionAlgebra::EvolutionAlgebra(FieldSpec field, Matrix omega, std::string name)
    : field_(field), omega_(std::move(omega)), name_(std::move(name)) {
  if (omega_.empty()) throw DomainError("evolution algebra needs dimension >= 1");
  for (const auto& row : omega_) {
    if (row.size() != omega_.size()) throw DomainError("structure matrix must be square");
    for (const auto& x : row)
      if (x.field() != field_) throw MismatchError("structure constant from another field");
  }
}

Vec EvolutionAlgebra::square(std::size_t i) const {
  Vec v;
  for (std::size_t j = 0; j < dim(); ++j) v.push_back(omega_[j][i]);
  return v;
}

Vec EvolutionAlgebra::basis_vector(std::size_t i) const {
  Vec v = zero_vec(field_, dim());
  v.at(i) = FieldElement::one(field_);
  return v;
}

Vec EvolutionAlgebra::multiply(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim()) throw DomainError("element has wrong dimension");
  Vec out = zero_vec(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    FieldElement c = u[i] * v[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) out[j] += c * omega_[j][i];
  }
  return out;
}

namespace {

FieldElement need(const std::optional<FieldElement>& x, const char* what, const std::string& fam,
                  const FieldSpec& f) {
  if (!x) throw DomainError(fam + " needs parameter " + what);
  if (x->field() != f) throw MismatchError(fam + " parameter from another field");
  return *x;
}

std::string label(const std::string& fam, const FamilyParams& p) {
  std::string s = fam;
  if (p.alpha) {
    s += "(" + p.alpha->to_string();
    if (p.beta) s += "," + p.beta->to_string();
    s += ")";
  }
  return s;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"A1", "A2", "A3", "A4", "A5ab", "A5", "A6", "A7", "A8"};
}

bool family_takes_alpha(const std::string& name) {
  return name == "A2" || name == "A3" || name == "A4" || name == "A5ab" || name == "A8";
}

bool family_takes_beta(const std::string& name) { return name == "A5ab"; }

EvolutionAlgebra family(const std::string& name, const FieldSpec& f, const FamilyParams& params) {
  auto z = FieldElement::zero(f), o = FieldElement::one(f);
  auto m = [&](FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
    return Matrix{{a, b}, {c, d}};
  };
  FamilyParams used;
  if (family_takes_alpha(name)) {
    used.alpha = need(params.alpha, "alpha", name, f);
    if (used.alpha->is_zero()) throw DomainError(name + " needs a nonzero alpha");
  } else if (params.alpha) {
    throw DomainError(name + " takes no alpha");
  }
  if (family_takes_beta(name)) {
    used.beta = need(params.beta, "beta", name, f);
    if (used.beta->is_zero()) throw DomainError(name + " needs a nonzero beta");
    if ((*used.alpha * *used.beta).is_one()) throw DomainError("A5ab needs alpha*beta != 1");
  } else if (params.beta) {
    throw DomainError(name + " takes no beta");
  }
  const std::string tag = label(name, used);
  if (name == "A1") return {f, m(o, z, z, o), tag};
  if (name == "A2") return {f, m(z, *used.alpha, o, z), tag};
  if (name == "A3") return {f, m(o, *used.alpha, z, o), tag};
  if (name == "A4") return {f, m(z, o, *used.alpha, o), tag};
  if (name == "A5ab") return {f, m(o, *used.alpha, *used.beta, o), tag};
  if (name == "A5") return {f, m(o, -o, -o, o), tag};
  if (name == "A6") return {f, m(z, o, z, z), tag};
  if (name == "A7") return {f, m(o, z, z, z), tag};
  if (name == "A8") return {f, m(o, *used.alpha, z, z), tag};
  throw DomainError("unknown family '" + name + "'");
}

bool is_perfect(const EvolutionAlgebra& a) { return !determinant(a.omega(), a.field()).is_zero(); }

bool is_associative(const EvolutionAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k);
        if (a.multiply(a.multiply(ei, ej), ek) != a.multiply(ei, a.multiply(ej, ek))) return false;
      }
  return true;
}

AutSystem aut_system(const EvolutionAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::string> names;
  if (n == 2) {
    names = {"a", "b", "c", "d"};
  } else {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) names.push_back("m" + std::to_string(i) + std::to_string(j));
  }
  names.push_back("u");
  AutSystem sys;
  sys.n = n;
  sys.ring = Ring::make(VariableSet(names), a.field());
  const RingPtr& r = sys.ring;
  auto m = [&](std::size_t i, std::size_t j) { return Polynomial::variable(r, i * n + j); };
  auto c = [&](const FieldElement& x) { return Polynomial::constant(r, x); };
  const Matrix& w = a.omega();
  // f(e_i)^2 = f(e_i^2), coordinate l.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      Polynomial eq(r);
      for (std::size_t j = 0; j < n; ++j) eq += m(i, j) * m(i, j) * c(w[l][j]);
      for (std::size_t k = 0; k < n; ++k) eq -= c(w[k][i]) * m(k, l);
      if (!eq.is_zero()) sys.equations.push_back(eq);
    }
  // f(e_i) f(e_j) = 0 for i < j.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Polynomial eq(r);
        for (std::size_t k = 0; k < n; ++k) eq += m(i, k) * m(j, k) * c(w[l][k]);
        if (!eq.is_zero()) sys.equations.push_back(eq);
      }
  // det * u - 1 via Leibniz over permutations.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Polynomial det(r);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Polynomial t = c(FieldElement::from_int(a.field(), inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n; ++i) t = t * m(i, perm[i]);
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  sys.equations.push_back(det * Polynomial::variable(r, n * n) - c(FieldElement::one(a.field())));
  return sys;
}

namespace {

using Residues = std::vector<std::uint64_t>;

// Residue-level check that m (row-major n*n) is an automorphism.
bool residue_aut(const Residues& m, const std::vector<std::vector<std::uint64_t>>& w, std::size_t n,
                 std::uint64_t p, Residues& scratch) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      std::uint64_t lhs = 0, rhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs = (lhs + m[i * n + j] * m[i * n + j] % p * w[l][j]) % p;
      for (std::size_t k = 0; k < n; ++k) rhs = (rhs + w[k][i] * m[k * n + l]) % p;
      if (lhs != rhs) return false;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s = (s + m[i * n + k] * m[j * n + k] % p * w[l][k]) % p;
        if (s) return false;
      }
  // Nonzero determinant via elimination mod p.
  scratch = m;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && scratch[piv * n + col] == 0) ++piv;
    if (piv == n) return false;
    for (std::size_t j = 0; j < n; ++j) std::swap(scratch[piv * n + j], scratch[col * n + j]);
    std::uint64_t inv = FieldElement::from_int(FieldSpec::prime(p), static_cast<long long>(scratch[col * n + col])).inv().residue();
    for (std::size_t r = col + 1; r < n; ++r) {
      std::uint64_t f = scratch[r * n + col] * inv % p;
      if (!f) continue;
      for (std::size_t j = col; j < n; ++j)
        scratch[r * n + j] = (scratch[r * n + j] + (p - f) * scratch[col * n + j]) % p;
    }
  }
  return true;
}

}  // namespace

std::vector<Matrix> aut_points(const EvolutionAlgebra& a, std::uint64_t bound) {
  const FieldSpec& f = a.field();
  if (!f.is_finite()) throw DomainError("aut_points needs a finite field");
  const std::uint64_t p = f.characteristic();
  const std::size_t n = a.dim();
  const std::size_t k = n * n;
  long double total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<long double>(p);
  if (total > static_cast<long double>(bound))
    throw LimitError("aut_points search space exceeds bound");
  std::vector<std::vector<std::uint64_t>> w(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a.omega()[i][j].residue();
  std::vector<Matrix> out;
  Residues m(k, 0), scratch;
  for (;;) {
    if (residue_aut(m, w, n, p, scratch)) {
      Matrix mat(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          mat[i].push_back(FieldElement::from_int(f, static_cast<long long>(m[i * n + j])));
      out.push_back(std::move(mat));
    }
    // Odometer with the last entry fastest, giving lexicographic order.
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++m[pos] < p) break;
      m[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

namespace {

std::vector<std::uint64_t> key(const Matrix& m) {
  std::vector<std::uint64_t> k;
  for (const auto& row : m)
    for (const auto& x : row) k.push_back(x.residue());
  return k;
}

}  // namespace

bool closed_under_composition(const std::vector<Matrix>& group) {
  if (group.empty()) return false;
  std::set<std::vector<std::uint64_t>> keys;
  for (const auto& g : group) keys.insert(key(g));
  const FieldSpec f = group[0][0][0].field();
  if (!keys.count(key(identity_matrix(f, group[0].size())))) return false;
  for (const auto& g : group) {
    auto gi = inverse(g, f);
    if (!gi || !keys.count(key(*gi))) return false;
    for (const auto& h : group)
      if (!keys.count(key(matmul(g, h)))) return false;
  }
  return true;
}

std::size_t group_order(const EvolutionAlgebra& a) {
  auto pts = aut_points(a);
  if (!closed_under_composition(pts)) throw Error("automorphism set of " + a.name() + " is not a group");
  return pts.size();
}

bool is_homomorphism(const EvolutionAlgebra& a, const EvolutionAlgebra& b, const Matrix& m) {
  if (a.field() != b.field() || m.size() != a.dim()) throw DomainError("map shape mismatch");
  for (const auto& row : m)
    if (row.size() != b.dim()) throw DomainError("map shape mismatch");
  auto image = [&](const Vec& v) {
    Vec out = zero_vec(b.field(), b.dim());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) out[j] += v[i] * m[i][j];
    return out;
  };
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      Vec ei = a.basis_vector(i), ej = a.basis_vector(j);
      if (b.multiply(image(ei), image(ej)) != image(a.multiply(ei, ej))) return false;
    }
  return true;
}

bool is_isomorphism(const EvolutionAlgebra& a, const EvolutionAlgebra& b, const Matrix& m) {
  return a.dim() == b.dim() && !determinant(m, a.field()).is_zero() && is_homomorphism(a, b, m);
}

std::optional<NullSquareCase> classify_null_second_square(const EvolutionAlgebra& a) {
  if (a.dim() != 2) return std::nullopt;
  const Matrix& w = a.omega();
  const FieldSpec& f = a.field();
  if (!w[0][1].is_zero() || !w[1][1].is_zero()) return std::nullopt;
  auto z = FieldElement::zero(f), o = FieldElement::one(f);
  if (w[0][0].is_zero() && w[1][0].is_zero()) return NullSquareCase{"zero", identity_matrix(f, 2)};
  if (w[0][0].is_zero()) return NullSquareCase{"A6", Matrix{{z, w[1][0]}, {o, z}}};
  FieldElement c = w[0][0].inv();
  return NullSquareCase{"A7", Matrix{{c, c * c * w[1][0]}, {z, o}}};
}

std::string matrix_to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) s += ", ";
      s += m[i][j].to_string();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace evohopf
