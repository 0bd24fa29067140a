#include "evohopf/upalgebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "evohopf/error.hpp"

namespace evohopf {

// ---------------------------------------------------------------- ProductLaw

ProductLaw ProductLaw::make(const FieldSpec& f, long long l0, long long l1, long long l2, long long l3) {
  return {{FieldElement::from_int(f, l0), FieldElement::from_int(f, l1), FieldElement::from_int(f, l2),
           FieldElement::from_int(f, l3)}};
}

ProductLaw ProductLaw::parse(const FieldSpec& f, std::string_view text) {
  ProductLaw law;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    law.lambda.push_back(FieldElement::parse(f, item));
  }
  if (law.lambda.size() != 4) throw ParseError("a product law needs four coefficients");
  return law;
}

FieldElement ProductLaw::sum() const { return lambda[0] + lambda[1] + lambda[2] + lambda[3]; }

std::string ProductLaw::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + lambda[i].to_string();
  return s;
}

Polynomial law_value(const ProductLaw& law, const Polynomial& a, const Polynomial& a_star,
                     const Polynomial& b, const Polynomial& b_star) {
  return a * b * law.lambda[0] + a * b_star * law.lambda[1] + a_star * b * law.lambda[2] +
         a_star * b_star * law.lambda[3];
}

// ---------------------------------------------------------------- U_p

std::vector<std::string> generator_names(std::size_t n) {
  if (n == 2) return {"x", "y"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

UniversalPAlgebra::UniversalPAlgebra(EvolutionAlgebra algebra, ProductLaw law)
    : algebra_(std::move(algebra)), law_(std::move(law)) {
  if (law_.lambda.size() != 4) throw DomainError("product law needs four coefficients");
  if (law_.field() != algebra_.field()) throw MismatchError("law and algebra over different fields");
  const std::size_t n = algebra_.dim();
  if (2 * n > kMaxVars) throw DomainError("algebra dimension too large");
  // Starred variables form the leading block so normal forms prefer x_i over x_i*.
  std::vector<std::size_t> prio;
  for (std::size_t i = 0; i < n; ++i) prio.push_back(n + i);
  for (std::size_t i = 0; i < n; ++i) prio.push_back(i);
  ring_ = Ring::make(VariableSet::with_stars(generator_names(n)), algebra_.field(),
                     MonomialOrder::block(prio, n));
  const Matrix& w = algebra_.omega();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial r = law_value(law_, x(i), x_star(i), x(j), x_star(j));
      if (i == j)
        for (std::size_t k = 0; k < n; ++k) r -= x(k) * w[k][i];
      relations_.push_back(r);
    }
  }
  quotient_ = std::make_shared<const QuotientAlgebra>(StarIdeal(ring_, relations_, true));
}

Polynomial UniversalPAlgebra::x(std::size_t i) const { return Polynomial::variable(ring_, i); }
Polynomial UniversalPAlgebra::x_star(std::size_t i) const {
  return Polynomial::variable(ring_, i + algebra_.dim());
}

UniversalPAlgebra build_upalgebra(const EvolutionAlgebra& a, const ProductLaw& law) {
  return UniversalPAlgebra(a, law);
}

namespace {
std::vector<Polynomial> xs(const UniversalPAlgebra& u) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < u.n(); ++i) out.push_back(u.x(i));
  return out;
}
}  // namespace

std::optional<Vec> kernel_relation(const UniversalPAlgebra& u) {
  return linear_dependence_over_field(xs(u), u.quotient().gb());
}

std::vector<Vec> kernel_basis(const UniversalPAlgebra& u) {
  return linear_relations(xs(u), u.quotient().gb());
}

bool faithful(const UniversalPAlgebra& u) { return !kernel_relation(u); }

// ---------------------------------------------------------------- T_p

std::optional<Vec> TightPAlgebra::coordinates(const Polynomial& f) const {
  Vec v = ambient_->coordinates(f);
  Vec c;
  Vec rest = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    c.push_back(v[pivots_[k]]);
    if (c.back().is_zero()) continue;
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c.back() * ambient_coords_[k][j];
  }
  if (!is_zero(rest)) return std::nullopt;
  return c;
}

Polynomial TightPAlgebra::from_coordinates(const Vec& c) const {
  Polynomial p(ambient_->ring());
  for (std::size_t k = 0; k < c.size(); ++k) p += basis_.at(k) * c[k];
  return p;
}

TightPAlgebra tight_algebra(const UniversalPAlgebra& u) {
  TightPAlgebra t;
  t.ambient_ = u.quotient_ptr();
  const QuotientAlgebra& q = *t.ambient_;
  if (!q.finite()) return t;
  t.finite_ = true;
  const FieldSpec f = u.ring()->field();
  const std::size_t dim_u = *q.dimension();
  Span span(f, dim_u);
  std::vector<Vec> found;
  for (std::size_t i = 0; i < u.n(); ++i)
    for (const Polynomial& g : {u.x(i), u.x_star(i)}) {
      Vec v = q.coordinates(g);
      if (span.add(v)) found.push_back(v);
    }
  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    Polynomial a = q.from_coordinates(found[idx]);
    for (std::size_t j = 0; j <= idx; ++j) {
      Vec v = q.coordinates(a * q.from_coordinates(found[j]));
      if (span.add(v)) found.push_back(v);
    }
  }
  t.ambient_coords_ = span.basis();
  t.pivots_ = span.pivots();
  for (const auto& v : t.ambient_coords_) t.basis_.push_back(q.from_coordinates(v));
  const std::size_t d = t.basis_.size();

  t.constants_.assign(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = t.coordinates(q.multiply(t.basis_[i], t.basis_[j]));
      if (!c) throw Error("tight algebra is not closed under products");
      t.constants_[i][j] = *c;
    }
  for (std::size_t i = 0; i < d; ++i) {
    auto c = t.coordinates(q.star(t.basis_[i]));
    if (!c) throw Error("tight algebra is not closed under the involution");
    t.star_.push_back(*c);
  }
  t.contains_one_ = t.coordinates(Polynomial::constant(u.ring(), u.ring()->one())).has_value();
  // Unit: e = sum c_k b_k with e b_j = b_j for every j.
  if (d > 0) {
    Matrix a;
    Vec rhs;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        Vec row;
        for (std::size_t k = 0; k < d; ++k) row.push_back(t.constants_[k][j][l]);
        a.push_back(row);
        rhs.push_back(j == l ? FieldElement::one(f) : FieldElement::zero(f));
      }
    if (auto c = solve(a, rhs, f)) t.unit_ = t.from_coordinates(*c);
  }
  return t;
}

std::vector<std::vector<Vec>> structure_constants(const TightPAlgebra& t) { return t.structure_constants(); }

// ---------------------------------------------------------------- targets

Polynomial StarTarget::star(const Polynomial& f) const {
  return algebra->reduce(f.substitute(star_images, algebra->ring()));
}

Polynomial StarTarget::pair(const FieldElement& a, const FieldElement& b) const {
  return algebra->reduce(pair_basis.at(0) * a + pair_basis.at(1) * b);
}

namespace {

StarTarget make_target(const FieldSpec& f, std::vector<std::string> vars, std::vector<std::string> rels,
                       std::vector<std::string> star, std::vector<std::string> pair, std::string desc) {
  RingPtr r = Ring::make(VariableSet(std::move(vars)), f);
  std::vector<Polynomial> gens;
  for (const auto& s : rels) gens.push_back(Polynomial::parse(r, s));
  StarTarget t;
  t.algebra = std::make_shared<const QuotientAlgebra>(StarIdeal(r, gens, false));
  for (const auto& s : star) t.star_images.push_back(Polynomial::parse(r, s));
  for (const auto& s : pair) t.pair_basis.push_back(Polynomial::parse(r, s));
  t.description = std::move(desc);
  return t;
}

}  // namespace

StarTarget StarTarget::complex_like(const FieldSpec& f) {
  return make_target(f, {"s"}, {"s^2 + 1"}, {"-s"}, {"1", "s"}, "K^2, (x,y)(z,t)=(xz-yt,xt+yz), (x,y)*=(x,-y)");
}

StarTarget StarTarget::split(const FieldSpec& f, bool exchange) {
  return make_target(f, {"e"}, {"e^2 - e"}, {exchange ? "1 - e" : "e"}, {"e", "1 - e"},
                     exchange ? "K^2 componentwise, exchange involution" : "K^2 componentwise, identity involution");
}

StarTarget StarTarget::nil_square(const FieldSpec& f) {
  return make_target(f, {"v"}, {"v^3"}, {"v"}, {"v^2", "v"}, "K^2, (x,y)(z,t)=(yt,0), identity involution");
}

StarTarget StarTarget::first_projection(const FieldSpec& f) {
  return make_target(f, {"e", "w"}, {"e^2 - e", "w^2", "e*w"}, {"e", "w"}, {"e", "w"},
                     "K^2, (x,y)(z,t)=(xz,0), identity involution");
}

RepresentationReport check_representation(const EvolutionAlgebra& a, const ProductLaw& law,
                                          const StarTarget& target, const std::vector<Polynomial>& images) {
  const std::size_t n = a.dim();
  if (images.size() != n) throw DomainError("one image per basis vector is required");
  const QuotientAlgebra& q = *target.algebra;
  RepresentationReport rep;
  std::vector<Polynomial> img, img_star;
  for (const auto& s : images) {
    img.push_back(q.reduce(s));
    img_star.push_back(target.star(s));
  }
  rep.multiplicative = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial lhs(q.ring());
      if (i == j)
        for (std::size_t k = 0; k < n; ++k) lhs += img[k] * a.omega()[k][i];
      Polynomial rhs = q.reduce(law_value(law, img[i], img_star[i], img[j], img_star[j]));
      if (q.reduce(lhs) != rhs) {
        rep.multiplicative = false;
        rep.failures.push_back("product e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) +
                               ": expected " + q.reduce(lhs).to_string() + ", got " + rhs.to_string());
      }
    }
  rep.injective = !linear_dependence_over_field(img, q.gb());
  if (!rep.injective) rep.failures.push_back("images are linearly dependent");
  UniversalPAlgebra u(a, law);
  std::vector<Polynomial> subst = img;
  subst.insert(subst.end(), img_star.begin(), img_star.end());
  rep.factors_through = true;
  for (const auto& r : u.quotient().ideal().generators()) {
    Polynomial v = q.reduce(r.substitute(subst, q.ring()));
    if (!v.is_zero()) {
      rep.factors_through = false;
      rep.failures.push_back("relation " + r.to_string() + " maps to " + v.to_string());
    }
  }
  return rep;
}

// ---------------------------------------------------------------- Aut*(T)

namespace {

using RVec = std::vector<std::uint64_t>;

struct ResidueAlgebra {
  std::uint64_t p;
  std::size_t d;
  // For each (i, j): nonzero (k, c) with b_i b_j = sum c b_k.
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> table;
  std::vector<RVec> star;  // rows

  RVec mul(const RVec& u, const RVec& v) const {
    RVec out(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (!u[i]) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (!v[j]) continue;
        std::uint64_t c = u[i] * v[j] % p;
        for (const auto& [k, s] : table[i * d + j]) out[k] = (out[k] + c * s) % p;
      }
    }
    return out;
  }
  RVec apply_star(const RVec& u) const {
    RVec out(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (!u[i]) continue;
      for (std::size_t k = 0; k < d; ++k) out[k] = (out[k] + u[i] * star[i][k]) % p;
    }
    return out;
  }
};

RVec residues(const Vec& v) {
  RVec r;
  for (const auto& x : v) r.push_back(x.residue());
  return r;
}

// Linear combination sum c_k rows_k.
RVec combine(const std::vector<std::uint64_t>& c, const std::vector<RVec>& rows, std::uint64_t p, std::size_t d) {
  RVec out(d, 0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k]) continue;
    for (std::size_t j = 0; j < d; ++j) out[j] = (out[j] + c[k] * rows[k][j]) % p;
  }
  return out;
}

}  // namespace

std::vector<Matrix> star_automorphisms(const TightPAlgebra& t, const std::vector<Polynomial>& generators,
                                       std::uint64_t bound) {
  if (!t.finite()) throw DomainError("star_automorphisms needs a finite-dimensional algebra");
  const FieldSpec f = t.ambient().ring()->field();
  if (!f.is_finite()) throw DomainError("star_automorphisms needs a finite field");
  const std::uint64_t p = f.characteristic();
  const std::size_t d = t.dim();
  const std::size_t k = generators.size();
  if (d == 0) return {Matrix{}};
  if (k == 0) throw DomainError("at least one generator is required");

  ResidueAlgebra alg{p, d, {}, {}};
  alg.table.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec& c = t.structure_constants()[i][j];
      for (std::size_t l = 0; l < d; ++l)
        if (!c[l].is_zero()) alg.table[i * d + j].push_back({l, c[l].residue()});
    }
  for (const auto& row : t.star_matrix()) alg.star.push_back(residues(row));

  std::vector<RVec> gens;
  for (const auto& g : generators) {
    auto c = t.coordinates(g);
    if (!c) throw DomainError("generator " + g.to_string() + " is not in the algebra");
    gens.push_back(residues(*c));
  }

  // Words in the generators spanning T: word w = parent * generator.
  struct Word {
    int parent;  // -1 for a bare generator
    std::size_t gen;
  };
  std::vector<Word> words;
  std::vector<RVec> word_vecs;
  Span span(f, d);
  auto to_vec = [&](const RVec& r) {
    Vec v;
    for (auto x : r) v.push_back(FieldElement::from_int(f, static_cast<long long>(x)));
    return v;
  };
  for (std::size_t g = 0; g < k; ++g)
    if (span.add(to_vec(gens[g]))) {
      words.push_back({-1, g});
      word_vecs.push_back(gens[g]);
    }
  for (std::size_t w = 0; w < words.size() && span.size() < d; ++w)
    for (std::size_t g = 0; g < k && span.size() < d; ++g) {
      RVec v = alg.mul(word_vecs[w], gens[g]);
      if (span.add(to_vec(v))) {
        words.push_back({static_cast<int>(w), g});
        word_vecs.push_back(v);
      }
    }
  if (span.size() < d) throw DomainError("the generators do not generate the algebra");
  Matrix pm;
  for (const auto& v : word_vecs) pm.push_back(to_vec(v));
  auto pinv_opt = inverse(pm, f);
  if (!pinv_opt) throw Error("word basis is singular");
  std::vector<RVec> pinv;
  for (const auto& row : *pinv_opt) pinv.push_back(residues(row));

  // Per-generator candidates: zeros of the generator's minimal relation.
  auto power_relation = [&](const RVec& g) {
    std::vector<RVec> powers{g};
    Span s(f, d);
    s.add(to_vec(g));
    for (;;) {
      RVec next = alg.mul(powers.back(), g);
      Matrix cols;
      powers.push_back(next);
      if (!s.add(to_vec(next))) break;
    }
    // Relation among g^1..g^r with the last coefficient 1.
    Matrix m(d);
    for (std::size_t row = 0; row < d; ++row)
      for (const auto& pw : powers) m[row].push_back(FieldElement::from_int(f, static_cast<long long>(pw[row])));
    auto ns = nullspace(m, powers.size(), f);
    for (const auto& v : ns)
      if (!v.back().is_zero()) {
        FieldElement inv = v.back().inv();
        RVec rel;
        for (const auto& x : v) rel.push_back((x * inv).residue());
        return rel;
      }
    throw Error("no power relation found");
  };
  // A generator lying in the *-subalgebra of the earlier ones has its image
  // determined by theirs; record how to compute it.
  struct StarWord {
    int parent;
    std::size_t gen;
    bool starred;
  };
  struct Derivation {
    std::vector<StarWord> words;
    std::vector<std::uint64_t> coef;
  };
  std::vector<std::optional<Derivation>> derived(k);
  for (std::size_t j = 1; j < k; ++j) {
    Derivation dv;
    std::vector<RVec> vecs;
    Span s(f, d);
    auto letter = [&](std::size_t i, bool st) { return st ? alg.apply_star(gens[i]) : gens[i]; };
    for (std::size_t i = 0; i < j; ++i)
      for (bool st : {false, true})
        if (RVec v = letter(i, st); s.add(to_vec(v))) {
          dv.words.push_back({-1, i, st});
          vecs.push_back(v);
        }
    for (std::size_t w = 0; w < vecs.size(); ++w)
      for (std::size_t i = 0; i < j; ++i)
        for (bool st : {false, true})
          if (RVec v = alg.mul(vecs[w], letter(i, st)); s.add(to_vec(v))) {
            dv.words.push_back({static_cast<int>(w), i, st});
            vecs.push_back(v);
          }
    Matrix a(d);
    for (std::size_t row = 0; row < d; ++row)
      for (const auto& v : vecs) a[row].push_back(FieldElement::from_int(f, static_cast<long long>(v[row])));
    if (auto c = solve(a, to_vec(gens[j]), f)) {
      dv.coef = residues(*c);
      derived[j] = std::move(dv);
    }
  }

  long double space = 1;
  for (std::size_t i = 0; i < d; ++i) space *= static_cast<long double>(p);
  if (space > static_cast<long double>(bound)) throw LimitError("generator image space exceeds bound");
  std::vector<std::vector<RVec>> candidates(k);
  for (std::size_t g = 0; g < k; ++g) {
    if (derived[g]) continue;
    RVec rel = power_relation(gens[g]);
    RVec x(d, 0);
    for (;;) {
      RVec pw = x, acc(d, 0);
      for (std::size_t e = 0; e < rel.size(); ++e) {
        if (e) pw = alg.mul(pw, x);
        for (std::size_t j = 0; j < d; ++j) acc[j] = (acc[j] + rel[e] * pw[j]) % p;
      }
      if (std::all_of(acc.begin(), acc.end(), [](auto v) { return v == 0; })) candidates[g].push_back(x);
      std::size_t pos = d;
      while (pos > 0) {
        --pos;
        if (++x[pos] < p) break;
        x[pos] = 0;
        if (pos == 0) break;
      }
      if (pos == 0 && x[0] == 0 && std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; })) break;
    }
  }
  long double tuples = 1;
  for (std::size_t g = 0; g < k; ++g)
    if (!derived[g]) tuples *= static_cast<long double>(candidates[g].size());
  if (tuples > static_cast<long double>(bound)) throw LimitError("candidate tuples exceed bound");

  // Linear relations among generators, their involutes and pairwise products.
  struct Item {
    std::size_t a, b;  // b == k marks a bare generator, b == k + 1 its involute
  };
  std::vector<Item> items;
  std::vector<RVec> item_vecs;
  for (std::size_t a = 0; a < k; ++a) {
    items.push_back({a, k});
    item_vecs.push_back(gens[a]);
    items.push_back({a, k + 1});
    item_vecs.push_back(alg.apply_star(gens[a]));
    for (std::size_t b = a; b < k; ++b) {
      items.push_back({a, b});
      item_vecs.push_back(alg.mul(gens[a], gens[b]));
    }
  }
  Matrix im(d);
  for (std::size_t row = 0; row < d; ++row)
    for (const auto& v : item_vecs) im[row].push_back(FieldElement::from_int(f, static_cast<long long>(v[row])));
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>>> rel_at(k);
  for (const auto& v : nullspace(im, items.size(), f)) {
    std::vector<std::pair<std::size_t, std::uint64_t>> rel;
    std::size_t level = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) {
        rel.push_back({i, v[i].residue()});
        level = std::max(level, std::max(items[i].a, items[i].b >= k ? 0 : items[i].b));
      }
    rel_at[level].push_back(rel);
  }

  std::vector<Matrix> result;
  std::vector<const RVec*> chosen(k, nullptr);
  std::vector<std::vector<RVec>> derived_value(k);
  auto derive = [&](std::size_t level) {
    const Derivation& dv = *derived[level];
    std::vector<RVec> vals;
    for (const auto& w : dv.words) {
      RVec l = w.starred ? alg.apply_star(*chosen[w.gen]) : *chosen[w.gen];
      vals.push_back(w.parent < 0 ? l : alg.mul(vals[static_cast<std::size_t>(w.parent)], l));
    }
    return std::vector<RVec>{combine(dv.coef, vals, p, d)};
  };
  auto item_value = [&](const Item& it) {
    if (it.b == k) return *chosen[it.a];
    if (it.b == k + 1) return alg.apply_star(*chosen[it.a]);
    return alg.mul(*chosen[it.a], *chosen[it.b]);
  };
  auto full_check = [&]() -> std::optional<std::vector<RVec>> {
    std::vector<RVec> theta_words;
    for (const auto& w : words)
      theta_words.push_back(w.parent < 0 ? *chosen[w.gen]
                                          : alg.mul(theta_words[static_cast<std::size_t>(w.parent)], *chosen[w.gen]));
    std::vector<RVec> theta;  // theta(b_i)
    for (std::size_t i = 0; i < d; ++i) theta.push_back(combine(pinv[i], theta_words, p, d));
    for (std::size_t g = 0; g < k; ++g)
      if (combine(gens[g], theta, p, d) != *chosen[g]) return std::nullopt;
    for (std::size_t i = 0; i < d; ++i) {
      if (alg.apply_star(theta[i]) != combine(alg.star[i], theta, p, d)) return std::nullopt;
      for (std::size_t j = i; j < d; ++j) {
        RVec c(d, 0);
        for (const auto& [l, s] : alg.table[i * d + j]) c[l] = s;
        if (alg.mul(theta[i], theta[j]) != combine(c, theta, p, d)) return std::nullopt;
      }
    }
    Matrix m;
    for (const auto& row : theta) m.push_back(to_vec(row));
    if (determinant(m, f).is_zero()) return std::nullopt;
    return theta;
  };
  auto search = [&](auto&& self, std::size_t level) -> void {
    if (level == k) {
      if (auto theta = full_check()) {
        Matrix m;
        for (const auto& row : *theta) m.push_back(to_vec(row));
        result.push_back(std::move(m));
      }
      return;
    }
    if (derived[level]) derived_value[level] = derive(level);
    for (const auto& cand : derived[level] ? derived_value[level] : candidates[level]) {
      chosen[level] = &cand;
      bool ok = true;
      for (const auto& rel : rel_at[level]) {
        RVec acc(d, 0);
        for (const auto& [i, c] : rel) {
          RVec v = item_value(items[i]);
          for (std::size_t j = 0; j < d; ++j) acc[j] = (acc[j] + c * v[j]) % p;
        }
        if (std::any_of(acc.begin(), acc.end(), [](auto v) { return v != 0; })) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, level + 1);
    }
    chosen[level] = nullptr;
  };
  search(search, 0);
  std::sort(result.begin(), result.end(), [](const Matrix& a, const Matrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a[i].size(); ++j) {
        int c = a[i][j].compare(b[i][j]);
        if (c) return c < 0;
      }
    return false;
  });
  return result;
}

// ---------------------------------------------------------------- symmetric image

SymImageReport sym_image_consequence(const EvolutionAlgebra& a, const ProductLaw& law) {
  UniversalPAlgebra u(a, law);
  const QuotientAlgebra& q = u.quotient();
  SymImageReport rep;
  rep.sym_image = true;
  for (std::size_t i = 0; i < u.n(); ++i)
    rep.sym_image = rep.sym_image && q.reduce(u.x(i)) == q.reduce(u.x_star(i));
  rep.kernel = kernel_basis(u);
  const FieldSpec f = a.field();
  Span ker(f, a.dim());
  for (const auto& v : rep.kernel) ker.add(v);
  rep.kernel_is_ideal = true;
  for (const auto& v : rep.kernel)
    for (std::size_t j = 0; j < a.dim(); ++j)
      rep.kernel_is_ideal = rep.kernel_is_ideal && ker.contains(a.multiply(v, a.basis_vector(j)));
  rep.quotient_associative = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t l = 0; l < a.dim(); ++l) {
        Vec ei = a.basis_vector(i), ej = a.basis_vector(j), el = a.basis_vector(l);
        Vec lhs = a.multiply(a.multiply(ei, ej), el), rhs = a.multiply(ei, a.multiply(ej, el));
        for (std::size_t c = 0; c < lhs.size(); ++c) lhs[c] -= rhs[c];
        rep.quotient_associative = rep.quotient_associative && ker.contains(lhs);
      }
  return rep;
}

}  // namespace evohopf
