#include "evohopf/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "evohopf/error.hpp"

namespace evohopf {

namespace {

// Over Q: integer coefficients with content 1 and positive leading coefficient.
// Over GF(p): monic.
Polynomial normalize(const Polynomial& f) {
  if (f.is_zero()) return f;
  if (f.ring()->field().is_finite()) return f.monic();
  mpz_class den = 1, num = 0;
  for (const auto& t : f.terms()) den = lcm(den, t.coef.rational().get_den());
  for (const auto& t : f.terms()) {
    mpq_class v = t.coef.rational() * den;
    num = gcd(num, v.get_num());
  }
  mpq_class scale(den, num);
  scale.canonicalize();
  if (sgn(f.lc().rational()) < 0) scale = -scale;
  return f * FieldElement::from_rational(f.ring()->field(), scale);
}

const Polynomial* find_reducer(const Monomial& m, const std::vector<const Polynomial*>& divisors) {
  for (const Polynomial* g : divisors)
    if (g->lm().divides(m)) return g;
  return nullptr;
}

Polynomial reduce_full(Polynomial p, const std::vector<const Polynomial*>& divisors) {
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    if (const Polynomial* g = find_reducer(lt.mono, divisors)) {
      p = p.sub_mul(lt.coef / g->lc(), lt.mono / g->lm(), *g);
    } else {
      rem.push_back(lt);
      std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
      p = Polynomial::from_terms(p.ring(), std::move(rest));
    }
  }
  return Polynomial::from_terms(p.ring(), std::move(rem));
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.lm().lcm(g.lm());
  Polynomial a = f.mul_term(g.lc(), l / f.lm());
  return a.sub_mul(f.lc(), l / g.lm(), g);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(RingPtr ring, BuchbergerStats* stats) : ring_(std::move(ring)), stats_(stats) {}

  GroebnerBasis run(const std::vector<Polynomial>& gens) {
    for (const auto& f : gens) {
      Polynomial g = f.in_ring(ring_);
      if (g.is_zero()) continue;
      if (g.is_constant()) return unit();
      insert(normalize(g));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (before(pairs_[k], pairs_[best])) best = k;
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (stats_) ++stats_->pairs_reduced;
      Polynomial h = reduce_full(spoly(polys_[pr.i], polys_[pr.j]), active_list());
      if (h.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (h.is_constant()) return unit();
      insert(normalize(h));
    }
    return finish();
  }

 private:
  GroebnerBasis unit() const {
    return GroebnerBasis(ring_, {Polynomial::constant(ring_, ring_->one())});
  }

  bool before(const Pair& a, const Pair& b) const {
    if (a.lcm.degree != b.lcm.degree) return a.lcm.degree < b.lcm.degree;
    int c = ring_->compare(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  std::vector<const Polynomial*> active_list() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  // Gebauer-Moeller update.
  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    const Monomial& lh = polys_[hi].lm();

    std::vector<std::size_t> c;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) c.push_back(k);
    if (stats_) stats_->pairs_considered += c.size();

    std::vector<std::size_t> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Monomial& lg = polys_[c[a]].lm();
      Monomial l1 = lh.lcm(lg);
      bool keep = lh.coprime(lg);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (lh.lcm(polys_[c[b]].lm()).divides(l1)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (lh.lcm(polys_[d[b]].lm()).divides(l1)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }

    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const Monomial& l = p.lcm;
      bool drop = lh.divides(l) && !(polys_[p.i].lm().lcm(lh) == l) &&
                  !(polys_[p.j].lm().lcm(lh) == l);
      if (!drop) next.push_back(p);
    }
    for (auto k : d)
      if (!lh.coprime(polys_[k].lm())) next.push_back({k, hi, lh.lcm(polys_[k].lm())});
    pairs_ = std::move(next);

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(polys_[k].lm())) active_[k] = false;
    active_[hi] = true;
  }

  GroebnerBasis finish() const {
    std::vector<Polynomial> g;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) g.push_back(polys_[k]);
    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < g.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
        if (a == b) continue;
        if (g[b].lm().divides(g[a].lm()) && (!(g[b].lm() == g[a].lm()) || b < a)) redundant = true;
      }
      if (!redundant) minimal.push_back(g[a]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const Polynomial*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (a != b) others.push_back(&minimal[b]);
      const Term lt = minimal[a].leading_term();
      std::vector<Term> tail(minimal[a].terms().begin() + 1, minimal[a].terms().end());
      Polynomial rest = reduce_full(Polynomial::from_terms(ring_, std::move(tail)), others);
      reduced.push_back((rest + Polynomial::term(ring_, lt.mono, lt.coef)).monic());
    }
    return GroebnerBasis(ring_, std::move(reduced));
  }

  RingPtr ring_;
  BuchbergerStats* stats_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced)
    : ring_(std::move(ring)), elements_(std::move(reduced)) {
  std::sort(elements_.begin(), elements_.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring_->compare(a.lm(), b.lm()) < 0;
  });
}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  Polynomial g = f.ring() == ring_ ? f : f.in_ring(ring_);
  std::vector<const Polynomial*> divisors;
  for (const auto& e : elements_) divisors.push_back(&e);
  Polynomial r = reduce_full(std::move(g), divisors);
  return f.ring() == ring_ ? r : r.in_ring(f.ring());
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, BuchbergerStats* stats) {
  if (generators.empty()) throw DomainError("buchberger needs at least one generator (or a ring)");
  return buchberger(generators.front().ring(), generators, stats);
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                         BuchbergerStats* stats) {
  return Engine(ring, stats).run(generators);
}

Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  std::vector<const Polynomial*> d;
  for (const auto& g : divisors)
    if (!g.is_zero()) d.push_back(&g);
  return reduce_full(f, d);
}

// ---------------------------------------------------------------- StarIdeal

struct StarIdeal::Cache {
  std::once_flag once;
  std::optional<GroebnerBasis> gb;
};

StarIdeal::StarIdeal(RingPtr ring, std::vector<Polynomial> generators, bool star_closed)
    : ring_(std::move(ring)), star_closed_(star_closed), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!g.ring()->same_as(*ring_)) throw MismatchError("ideal generator from another ring");
    g = g.in_ring(ring_);
  }
  auto add = [&](const Polynomial& g) {
    if (g.is_zero()) return;
    for (const auto& h : generators_)
      if (h == g) return;
    generators_.push_back(g);
  };
  for (const auto& g : generators) add(g);
  if (star_closed_)
    for (const auto& g : generators) add(g.apply_involution());
}

const GroebnerBasis& StarIdeal::groebner() const {
  std::call_once(cache_->once, [&] { cache_->gb.emplace(buchberger(ring_, generators_)); });
  return *cache_->gb;
}

// ---------------------------------------------------------------- operations

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

bool member(const Polynomial& f, const StarIdeal& ideal) { return ideal.groebner().contains(f); }

std::vector<Polynomial> eliminate(const StarIdeal& ideal, const std::vector<std::size_t>& remove) {
  const RingPtr& ring = ideal.ring();
  std::vector<bool> removed(ring->nvars(), false);
  std::vector<std::size_t> prio;
  for (auto v : remove) {
    if (v >= ring->nvars() || removed[v]) throw DomainError("bad elimination variable");
    removed[v] = true;
    prio.push_back(v);
  }
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (!removed[v]) prio.push_back(v);
  RingPtr lex = ring->with_order(MonomialOrder::lex(prio));
  GroebnerBasis gb = buchberger(lex, ideal.generators());
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (auto v : remove) free = free && !g.uses_variable(v);
    if (free) out.push_back(g.in_ring(ring));
  }
  return out;
}

QuotientBasis quotient_basis(const GroebnerBasis& gb, std::size_t limit) {
  const RingPtr& ring = gb.ring();
  const std::size_t n = ring->nvars();
  QuotientBasis qb;
  if (gb.is_unit()) {
    qb.finite = true;
    return qb;
  }
  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& g : gb.elements()) {
      const Monomial& m = g.lm();
      if (m.degree == m.exp[v] && m.degree > 0) {
        bound[v] = bound[v] == 0 ? m.degree : std::min<std::uint32_t>(bound[v], m.degree);
      }
    }
    if (bound[v] == 0) return qb;  // no pure power: infinite
  }
  qb.finite = true;
  Monomial cur;
  std::size_t visited = 0;
  for (;;) {
    if (++visited > limit) throw LimitError("standard monomial enumeration exceeded its bound");
    bool standard = true;
    for (const auto& g : gb.elements())
      if (g.lm().divides(cur)) {
        standard = false;
        break;
      }
    if (standard) qb.monomials.push_back(cur);
    std::size_t v = 0;
    while (v < n) {
      if (cur.exp[v] + 1u < bound[v]) {
        ++cur.exp[v];
        ++cur.degree;
        break;
      }
      cur.degree -= cur.exp[v];
      cur.exp[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(qb.monomials.begin(), qb.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) < 0; });
  return qb;
}

QuotientBasis quotient_basis(const StarIdeal& ideal) { return quotient_basis(ideal.groebner()); }

std::vector<Vec> linear_relations(const std::vector<Polynomial>& elems, const GroebnerBasis& gb) {
  const FieldSpec f = gb.ring()->field();
  std::vector<Polynomial> nfs;
  for (const auto& e : elems) nfs.push_back(gb.normal_form(e));
  // Index every monomial that occurs.
  std::vector<Monomial> monos;
  for (const auto& p : nfs)
    for (const auto& t : p.terms())
      if (std::find(monos.begin(), monos.end(), t.mono) == monos.end()) monos.push_back(t.mono);
  Matrix m = zero_matrix(f, monos.size(), elems.size());
  for (std::size_t c = 0; c < nfs.size(); ++c)
    for (const auto& t : nfs[c].terms()) {
      auto r = static_cast<std::size_t>(std::find(monos.begin(), monos.end(), t.mono) - monos.begin());
      m[r][c] = t.coef;
    }
  return nullspace(m, elems.size(), f);
}

std::optional<Vec> linear_dependence_over_field(const std::vector<Polynomial>& elems,
                                                const GroebnerBasis& gb) {
  auto rels = linear_relations(elems, gb);
  if (rels.empty()) return std::nullopt;
  Vec v = rels.front();
  for (const auto& x : v)
    if (!x.is_zero()) {
      FieldElement inv = x.inv();
      for (auto& y : v) y *= inv;
      break;
    }
  return v;
}

// ---------------------------------------------------------------- QuotientAlgebra

QuotientAlgebra::QuotientAlgebra(StarIdeal ideal) : ideal_(std::move(ideal)) {
  basis_ = quotient_basis(ideal_.groebner());
}

std::optional<std::size_t> QuotientAlgebra::dimension() const {
  if (!basis_.finite) return std::nullopt;
  return basis_.monomials.size();
}

Polynomial QuotientAlgebra::star(const Polynomial& f) const {
  if (!ideal_.star_closed()) throw DomainError("quotient has no involution");
  return reduce(f.apply_involution());
}

Vec QuotientAlgebra::coordinates(const Polynomial& f) const {
  if (!basis_.finite) throw DomainError("coordinates need a finite-dimensional quotient");
  Polynomial r = reduce(f);
  Vec v = zero_vec(ring()->field(), basis_.monomials.size());
  for (const auto& t : r.terms()) {
    auto it = std::find(basis_.monomials.begin(), basis_.monomials.end(), t.mono);
    v[static_cast<std::size_t>(it - basis_.monomials.begin())] = t.coef;
  }
  return v;
}

Polynomial QuotientAlgebra::from_coordinates(const Vec& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) terms.push_back({basis_.monomials.at(i), v[i]});
  return Polynomial::from_terms(ring(), std::move(terms));
}

Polynomial quotient_multiply(const Polynomial& f, const Polynomial& g, const QuotientAlgebra& q) {
  return q.multiply(f, g);
}

bool is_groebner_basis(const std::vector<Polynomial>& g) {
  std::vector<Polynomial> nz;
  for (const auto& p : g)
    if (!p.is_zero()) nz.push_back(p);
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = i + 1; j < nz.size(); ++j)
      if (!reduce_by(spoly(nz[i], nz[j]), nz).is_zero()) return false;
  return true;
}

}  // namespace evohopf
