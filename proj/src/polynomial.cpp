#include "evohopf/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "evohopf/error.hpp"

namespace evohopf {

// ---------------------------------------------------------------- VariableSet

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  involution_.resize(names_.size());
  std::iota(involution_.begin(), involution_.end(), 0);
  if (names_.size() > kMaxVars) throw DomainError("too many variables");
}

VariableSet::VariableSet(std::vector<std::string> names, std::vector<std::size_t> involution)
    : names_(std::move(names)), involution_(std::move(involution)) {
  if (names_.size() > kMaxVars) throw DomainError("too many variables");
  if (involution_.size() != names_.size()) throw DomainError("involution has wrong length");
  for (std::size_t i = 0; i < involution_.size(); ++i)
    if (involution_[i] >= names_.size() || involution_[involution_[i]] != i)
      throw DomainError("involution is not an involutive permutation");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw DomainError("duplicate variable " + names_[i]);
}

VariableSet VariableSet::with_stars(const std::vector<std::string>& base) {
  std::vector<std::string> names = base;
  std::vector<std::size_t> inv(2 * base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    names.push_back(base[i] + "*");
    inv[i] = i + base.size();
    inv[i + base.size()] = i;
  }
  return VariableSet(std::move(names), std::move(inv));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableSet::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw ParseError("unknown variable '" + std::string(name) + "'");
  return *i;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::size_t i, std::uint16_t e) {
  Monomial m;
  m.exp.at(i) = e;
  m.degree = e;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree > o.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] && o.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 0xffff) throw LimitError("exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = degree + o.degree;
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = exp[i] - o.exp[i];
  m.degree = degree - o.degree;
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(exp[i], o.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

// ---------------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::degrevlex(std::vector<std::size_t> priority) {
  MonomialOrder o;
  o.kind_ = Kind::Degrevlex;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> priority, std::size_t block_size,
                                   Kind inner) {
  if (block_size > priority.size()) throw DomainError("block larger than priority list");
  if (inner == Kind::Block) throw DomainError("nested block orders are not supported");
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.inner_ = inner;
  o.block_size_ = block_size;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "degrevlex" || name == "grevlex") return degrevlex();
  if (name == "lex") return lex();
  throw ParseError("unknown monomial order '" + std::string(name) + "'");
}

namespace {

inline std::size_t at(const std::vector<std::size_t>& prio, std::size_t i) {
  return prio.empty() ? i : prio[i];
}

int revlex_part(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& prio,
                std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exp[at(prio, i)];
    db += b.exp[at(prio, i)];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    auto v = at(prio, i);
    if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? -1 : 1;
  }
  return 0;
}

int lex_part(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& prio,
             std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    auto v = at(prio, i);
    if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  switch (kind_) {
    case Kind::Degrevlex:
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      return revlex_part(a, b, priority_, 0, nvars);
    case Kind::Lex:
      return lex_part(a, b, priority_, 0, nvars);
    case Kind::Block: {
      int c = revlex_part(a, b, priority_, 0, block_size_);
      if (c) return c;
      return inner_ == Kind::Lex ? lex_part(a, b, priority_, block_size_, nvars)
                                 : revlex_part(a, b, priority_, block_size_, nvars);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Degrevlex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block";
  }
  return "?";
}

// ---------------------------------------------------------------- Ring

Ring::Ring(VariableSet vars, FieldSpec field, MonomialOrder order)
    : vars_(std::move(vars)), field_(field), order_(std::move(order)) {
  const auto& prio = order_.priority();
  if (!prio.empty()) {
    std::vector<std::size_t> sorted = prio;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i || sorted.size() != vars_.size())
        throw DomainError("order priority is not a permutation of the variables");
  }
}

RingPtr Ring::make(VariableSet vars, FieldSpec field, MonomialOrder order) {
  return RingPtr(new Ring(std::move(vars), field, std::move(order)));
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(vars_, field_, std::move(order)); }

bool Ring::same_as(const Ring& o) const {
  return this == &o || (field_ == o.field_ && order_ == o.order_ && vars_ == o.vars_);
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  Polynomial p(std::move(ring));
  if (c.field() != p.ring_->field()) throw MismatchError("constant from another field");
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw DomainError("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::var(i), ring->one()});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto i = ring->vars().require(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const FieldElement& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const Ring& r = *p.ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono, ring_->nvars()) > 0) best = &t;
  return *best;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return ring_->zero();
}

void Polynomial::check(const Polynomial& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_))
    throw MismatchError("polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check(o);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElement s = terms_[i].coef + o.terms_[j].coef;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coef});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return sub_mul(ring_->one(), Monomial{}, o);
}

Polynomial Polynomial::sub_mul(const FieldElement& c, const Monomial& m,
                               const Polynomial& g) const {
  check(g);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const bool unit = m.is_one();
  while (i < terms_.size() && j < g.terms_.size()) {
    Monomial gm = unit ? g.terms_[j].mono : g.terms_[j].mono * m;
    int cmp = ring_->compare(terms_[i].mono, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({gm, -(c * g.terms_[j++].coef)});
    } else {
      FieldElement s = terms_[i].coef - c * g.terms_[j].coef;
      if (!s.is_zero()) r.terms_.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j)
    r.terms_.push_back({unit ? g.terms_[j].mono : g.terms_[j].mono * m, -(c * g.terms_[j].coef)});
  return r;
}

Polynomial Polynomial::mul_term(const FieldElement& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  if (terms_.empty() || o.terms_.empty()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].coef, o.terms_[0].mono);
  if (terms_.size() == 1) return o.mul_term(terms_[0].coef, terms_[0].mono);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coef * b.coef});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
  return mul_term(c, Monomial{});
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = constant(ring_, ring_->one());
  Polynomial base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check(o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef)
      return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return mul_term(lc().inv(), Monomial{});
}

Polynomial Polynomial::apply_involution() const {
  const auto& vars = ring_->vars();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    m.degree = t.mono.degree;
    for (std::size_t i = 0; i < vars.size(); ++i) m.exp[vars.partner(i)] = t.mono.exp[i];
    out.push_back({m, t.coef});
  }
  return from_terms(ring_, std::move(out));
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
  if (point.size() != ring_->nvars()) throw DomainError("point has wrong dimension");
  FieldElement acc = ring_->zero();
  for (const auto& t : terms_) {
    FieldElement v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono.exp[i]) v *= point[i].pow(t.mono.exp[i]);
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.empty()) {
    if (ring_->nvars() != 0) throw DomainError("substitution needs one image per variable");
    return *this;
  }
  return substitute(images, images.front().ring());
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images,
                                  const RingPtr& target) const {
  if (images.size() != ring_->nvars()) throw DomainError("substitution needs one image per variable");
  if (target->field() != ring_->field()) throw MismatchError("substitution across fields");
  for (const auto& im : images)
    if (!im.ring()->same_as(*target)) throw MismatchError("substitution images in different rings");
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, target->one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial acc(target);
  for (const auto& t : terms_) {
    Polynomial v = constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono.exp[i]) v = v * power(i, t.mono.exp[i]);
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::in_ring(const RingPtr& other) const {
  if (other->field() != ring_->field() || !(other->vars() == ring_->vars()))
    throw MismatchError("in_ring needs the same variables and field");
  return from_terms(other, terms_);
}

bool Polynomial::uses_variable(std::size_t i) const {
  for (const auto& t : terms_)
    if (t.mono.exp[i]) return true;
  return false;
}

std::string monomial_to_string(const Monomial& m, const VariableSet& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!s.empty()) s += '*';
    s += vars.name(i);
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = !ring_->field().is_finite() && sgn(t.coef.rational()) < 0;
    FieldElement c = negative ? -t.coef : t.coef;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      s += c.to_string();
    } else if (c.is_one()) {
      s += monomial_to_string(t.mono, ring_->vars());
    } else {
      s += c.to_string() + "*" + monomial_to_string(t.mono, ring_->vars());
    }
  }
  return s;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial scalar_mul(const FieldElement& c, const Polynomial& f) { return f * c; }
Polynomial apply_involution(const Polynomial& f) { return f.apply_involution(); }
Term leading_term(const Polynomial& f, const MonomialOrder& order) { return f.leading_term(order); }
FieldElement evaluate(const Polynomial& f, const std::vector<FieldElement>& point) {
  return f.evaluate(point);
}
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  return f.substitute(images);
}

namespace {

// Dense coefficients, index = exponent.
std::vector<FieldElement> dense(const Polynomial& f, std::size_t var) {
  std::vector<FieldElement> c;
  for (const auto& t : f.terms()) {
    std::size_t e = t.mono.exp[var];
    if (t.mono.degree != e) throw DomainError("univariate_gcd needs univariate input");
    if (c.size() <= e) c.resize(e + 1, f.ring()->zero());
    c[e] = t.coef;
  }
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

}  // namespace

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b) {
  if (!a.ring()->same_as(*b.ring())) throw MismatchError("gcd across rings");
  const RingPtr& ring = a.ring();
  std::optional<std::size_t> var;
  for (const Polynomial* f : {&a, &b})
    for (const auto& t : f->terms())
      for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (t.mono.exp[i]) {
          if (var && *var != i) throw DomainError("univariate_gcd needs a single common variable");
          var = i;
        }
  if (!var) {
    if (a.is_zero() && b.is_zero()) return Polynomial(ring);
    return Polynomial::constant(ring, ring->one());
  }
  auto x = dense(a, *var), y = dense(b, *var);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    // x <- x mod y
    FieldElement lead_inv = y.back().inv();
    while (x.size() >= y.size() && !x.empty()) {
      FieldElement q = x.back() * lead_inv;
      std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= q * y[i];
      while (!x.empty() && x.back().is_zero()) x.pop_back();
    }
    std::swap(x, y);
  }
  std::vector<Term> terms;
  FieldElement lead_inv = x.back().inv();
  for (std::size_t e = 0; e < x.size(); ++e)
    if (!x[e].is_zero()) terms.push_back({Monomial::var(*var, static_cast<std::uint16_t>(e)), x[e] * lead_inv});
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace evohopf
