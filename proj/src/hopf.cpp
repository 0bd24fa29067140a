#include "evohopf/hopf.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "evohopf/error.hpp"

namespace evohopf {

namespace {

const std::string kInv = "_inv";

std::vector<std::string> primed(const std::vector<std::string>& names, std::size_t copies) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= copies; ++k)
    for (const auto& n : names) out.push_back(n + std::string(k, '\''));
  return out;
}

// Inverse of a single term whose variables all have inverse partners.
std::optional<Polynomial> invert_term(const Polynomial& f, const std::vector<std::optional<std::size_t>>& inverse) {
  if (f.terms().size() != 1) return std::nullopt;
  const Term& t = f.terms().front();
  Polynomial out = Polynomial::constant(f.ring(), t.coef.inv());
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
    if (!t.mono.exp[i]) continue;
    if (!inverse[i]) return std::nullopt;
    out = out * Polynomial::variable(f.ring(), *inverse[i]).pow(t.mono.exp[i]);
  }
  return out;
}

std::string field_text(const FieldElement& a) { return "(" + a.to_string() + ")"; }

}  // namespace

// ---------------------------------------------------------------- presentation

HopfPresentation HopfPresentation::from_spec(std::string name, const FieldSpec& field, const HopfSpec& spec) {
  HopfPresentation h;
  h.name_ = std::move(name);
  std::vector<std::string> names = spec.vars;
  for (const auto& y : spec.laurent_vars)
    if (std::find(names.begin(), names.end(), y) == names.end()) names.push_back(y);
  const std::size_t base = names.size();
  for (const auto& y : spec.laurent_vars) names.push_back(y + kInv);
  const std::size_t n = names.size();
  if (3 * n > kMaxVars) throw DomainError("too many Hopf generators");

  h.ring_ = Ring::make(VariableSet(names), field);
  h.ring2_ = Ring::make(VariableSet(primed(names, 2)), field);
  h.ring3_ = Ring::make(VariableSet(primed(names, 3)), field);

  std::vector<std::optional<std::size_t>> inv1(n), inv2(2 * n);
  for (std::size_t k = 0; k < spec.laurent_vars.size(); ++k) {
    std::size_t y = h.ring_->vars().require(spec.laurent_vars[k]), yi = base + k;
    inv1[y] = yi;
    inv1[yi] = y;
    for (std::size_t c = 0; c < 2; ++c) {
      inv2[c * n + y] = c * n + yi;
      inv2[c * n + yi] = c * n + y;
    }
  }

  for (const auto& r : spec.relations) h.relations_.push_back(Polynomial::parse(h.ring_, r));
  for (std::size_t k = 0; k < spec.laurent_vars.size(); ++k)
    h.relations_.push_back(Polynomial::variable(h.ring_, *inv1[base + k]) * Polynomial::variable(h.ring_, base + k) -
                           Polynomial::constant(h.ring_, h.ring_->one()));

  auto lookup = [&](const std::map<std::string, std::string>& m, const std::string& v) -> const std::string* {
    auto it = m.find(v);
    return it == m.end() ? nullptr : &it->second;
  };
  h.delta.assign(n, Polynomial(h.ring2_));
  h.antipode.assign(n, Polynomial(h.ring_));
  h.counit.assign(n, FieldElement::zero(field));
  // Explicit entries first, then derived inverses.
  for (std::size_t pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& v = names[i];
      bool derived = i >= base;
      if (pass == 0) {
        const std::string* d = lookup(spec.delta, v);
        const std::string* s = lookup(spec.antipode, v);
        const std::string* e = lookup(spec.counit, v);
        if (!derived && (!d || !s || !e)) throw ParseError("missing delta, antipode or counit for " + v);
        if (derived && (bool(d) != bool(s) || bool(s) != bool(e)))
          throw ParseError("give all or none of delta, antipode and counit for " + v);
        if (d) {
          h.delta[i] = Polynomial::parse(h.ring2_, *d);
          h.antipode[i] = Polynomial::parse(h.ring_, *s);
          h.counit[i] = FieldElement::parse(field, *e);
        } else {
          h.delta[i] = Polynomial(h.ring2_);  // filled in pass 1
        }
      } else if (derived && !lookup(spec.delta, v)) {
        std::size_t y = *inv1[i];
        auto d = invert_term(h.delta[y], inv2);
        auto s = invert_term(h.antipode[y], inv1);
        if (!d || !s || h.counit[y].is_zero())
          throw ParseError("cannot derive the maps on " + v + "; give them explicitly");
        h.delta[i] = *d;
        h.antipode[i] = *s;
        h.counit[i] = h.counit[y].inv();
      }
    }
  h.quotient_ = std::make_shared<const QuotientAlgebra>(StarIdeal(h.ring_, h.relations_, false));
  return h;
}

HopfPresentation HopfPresentation::from_json(std::string_view text, const FieldSpec& field, std::string name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid Hopf presentation JSON: ") + e.what());
  }
  HopfSpec spec;
  auto strings = [&](const char* key) {
    std::vector<std::string> out;
    if (j.contains(key))
      for (const auto& s : j.at(key)) out.push_back(s.get<std::string>());
    return out;
  };
  auto table = [&](const char* key) {
    std::map<std::string, std::string> out;
    if (j.contains(key))
      for (const auto& [k, v] : j.at(key).items()) out[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return out;
  };
  try {
    spec.vars = strings("vars");
    spec.laurent_vars = strings("laurent_vars");
    spec.relations = strings("relations");
    spec.delta = table("delta");
    spec.antipode = table("antipode");
    spec.counit = table("epsilon");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid Hopf presentation JSON: ") + e.what());
  }
  if (j.contains("name") && j.at("name").is_string()) name = j.at("name").get<std::string>();
  return from_spec(std::move(name), field, spec);
}

Polynomial HopfPresentation::copy(const Polynomial& f, std::size_t k, const RingPtr& target) const {
  const std::size_t n = f.ring()->nvars();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(target, k * nvars() + i));
  return f.substitute(images, target);
}

// ---------------------------------------------------------------- catalog

std::vector<std::string> catalog_names() {
  return {"H1", "H2", "H5", "H5alt", "H5_char2", "H6", "H7", "H8", "K"};
}

bool catalog_valid(const std::string& name, const FieldSpec& field) {
  bool two = field.characteristic() == 2;
  if (name == "H5" || name == "H5alt") return !two;
  if (name == "H5_char2") return two;
  auto names = catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

HopfPresentation catalog(const std::string& name, const FieldSpec& field, const std::optional<FieldElement>& alpha) {
  auto names = catalog_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw DomainError("unknown catalog entry " + name);
  if (!catalog_valid(name, field))
    throw DomainError(name + " is not defined in characteristic " + std::to_string(field.characteristic()));
  HopfSpec s;
  if (name == "H1") {
    s = {{"x"}, {}, {"x^2 - x"}, {{"x", "x'*x'' + (1 - x')*(1 - x'')"}}, {{"x", "x"}}, {{"x", "1"}}};
  } else if (name == "H2") {
    FieldElement a = alpha.value_or(FieldElement::one(field));
    if (a.field() != field) throw MismatchError("alpha from another field");
    if (a.is_zero()) throw DomainError("H2 needs alpha != 0");
    std::string at = field_text(a);
    s = {{"a", "b"},
         {},
         {"a*b", "a^3 + " + at + "*b^3 - 1"},
         {{"a", "a'*a'' + " + at + "*b'*b''^2"}, {"b", "a'*b'' + b'*a''^2"}},
         {{"a", "a^2"}, {"b", "b"}},
         {{"a", "1"}, {"b", "0"}}};
    return HopfPresentation::from_spec("H2(" + a.to_string() + ")", field, s);
  } else if (name == "H5") {
    s = {{}, {"x"}, {}, {{"x", "x'*x''"}}, {{"x", "x_inv"}}, {{"x", "1"}}};
  } else if (name == "H5alt") {
    s = {{"x", "y"},
         {},
         {"2*x*y - y - 1"},
         {{"x", "1 - x' - x'' + 2*x'*x''"}, {"y", "y'*y''"}},
         {{"x", "x*y"}, {"y", "2*x - 1"}},
         {{"x", "1"}, {"y", "1"}}};
  } else if (name == "H5_char2") {
    s = {{"x"}, {}, {}, {{"x", "x' + x'' + 1"}}, {{"x", "x"}}, {{"x", "1"}}};
  } else if (name == "H6") {
    s = {{"x"},
         {"y"},
         {},
         {{"x", "x'*y''^2 + y'*x''"}, {"y", "y'*y''"}},
         {{"x", "-x*y_inv^3"}, {"y", "y_inv"}},
         {{"x", "0"}, {"y", "1"}}};
  } else if (name == "H7") {
    s = {{}, {"x"}, {}, {{"x", "x'*x''"}}, {{"x", "x_inv"}}, {{"x", "1"}}};
  } else if (name == "H8") {
    if (field.characteristic() == 2)
      s = {{"e"}, {}, {"e^2"}, {{"e", "e'*e'' + e' + e''"}}, {{"e", "e"}}, {{"e", "0"}}};
    else
      s = {{"x"}, {}, {"x^2 - 1"}, {{"x", "x'*x''"}}, {{"x", "x"}}, {{"x", "1"}}};
  } else {  // K
    s = {};
  }
  return HopfPresentation::from_spec(name, field, s);
}

// ---------------------------------------------------------------- axioms

bool HopfReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

HopfReport verify_hopf(const HopfPresentation& h) {
  const std::size_t n = h.nvars();
  const RingPtr& r1 = h.ring();
  const RingPtr& r2 = h.ring2();
  const RingPtr& r3 = h.ring3();
  const GroebnerBasis& gb1 = h.quotient().gb();
  std::vector<Polynomial> g2, g3;
  for (const auto& g : gb1.elements()) {
    for (std::size_t k = 0; k < 2; ++k) g2.push_back(h.copy(g, k, r2));
    for (std::size_t k = 0; k < 3; ++k) g3.push_back(h.copy(g, k, r3));
  }
  GroebnerBasis gb2 = buchberger(r2, g2), gb3 = buchberger(r3, g3);
  auto var1 = [&](std::size_t i) { return Polynomial::variable(r1, i); };

  HopfReport rep;
  AxiomCheck wd{"well_defined", true, {}};
  for (const auto& rel : h.relations()) {
    Polynomial d = gb2.normal_form(rel.substitute(h.delta, r2));
    if (!d.is_zero()) wd.witnesses.push_back("delta(" + rel.to_string() + ") = " + d.to_string());
    Polynomial s = gb1.normal_form(rel.substitute(h.antipode, r1));
    if (!s.is_zero()) wd.witnesses.push_back("antipode(" + rel.to_string() + ") = " + s.to_string());
    FieldElement e = rel.evaluate(h.counit);
    if (!e.is_zero()) wd.witnesses.push_back("counit(" + rel.to_string() + ") = " + e.to_string());
  }
  wd.pass = wd.witnesses.empty();
  rep.checks.push_back(wd);

  // (delta x id) delta and (id x delta) delta inside the triple copy.
  std::vector<Polynomial> left(2 * n, Polynomial(r3)), right(2 * n, Polynomial(r3));
  auto shift = [&](const Polynomial& f, std::size_t offset) {
    std::vector<Polynomial> images;
    for (std::size_t t = 0; t < 2 * n; ++t) images.push_back(Polynomial::variable(r3, t + offset * n));
    return f.substitute(images, r3);
  };
  for (std::size_t j = 0; j < n; ++j) {
    left[j] = shift(h.delta[j], 0);
    left[n + j] = Polynomial::variable(r3, 2 * n + j);
    right[j] = Polynomial::variable(r3, j);
    right[n + j] = shift(h.delta[j], 1);
  }
  AxiomCheck co{"coassociativity", true, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial diff = gb3.normal_form(h.delta[i].substitute(left, r3) - h.delta[i].substitute(right, r3));
    if (!diff.is_zero()) co.witnesses.push_back(r1->vars().name(i) + ": " + diff.to_string());
  }
  co.pass = co.witnesses.empty();
  rep.checks.push_back(co);

  std::vector<Polynomial> eps_left(2 * n, Polynomial(r1)), eps_right(2 * n, Polynomial(r1));
  std::vector<Polynomial> s_left(2 * n, Polynomial(r1)), s_right(2 * n, Polynomial(r1));
  for (std::size_t j = 0; j < n; ++j) {
    eps_left[j] = Polynomial::constant(r1, h.counit[j]);
    eps_left[n + j] = var1(j);
    eps_right[j] = var1(j);
    eps_right[n + j] = Polynomial::constant(r1, h.counit[j]);
    s_left[j] = h.antipode[j];
    s_left[n + j] = var1(j);
    s_right[j] = var1(j);
    s_right[n + j] = h.antipode[j];
  }
  AxiomCheck cu{"counit", true, {}}, an{"antipode", true, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& v = r1->vars().name(i);
    for (const auto* images : {&eps_left, &eps_right}) {
      Polynomial diff = gb1.normal_form(h.delta[i].substitute(*images, r1) - var1(i));
      if (!diff.is_zero()) cu.witnesses.push_back(v + (images == &eps_left ? " (left): " : " (right): ") + diff.to_string());
    }
    for (const auto* images : {&s_left, &s_right}) {
      Polynomial diff =
          gb1.normal_form(h.delta[i].substitute(*images, r1) - Polynomial::constant(r1, h.counit[i]));
      if (!diff.is_zero()) an.witnesses.push_back(v + (images == &s_left ? " (left): " : " (right): ") + diff.to_string());
    }
  }
  cu.pass = cu.witnesses.empty();
  an.pass = an.witnesses.empty();
  rep.checks.push_back(cu);
  rep.checks.push_back(an);
  return rep;
}

// ---------------------------------------------------------------- points

namespace {

// Indices of variables that are Laurent partners, with their base variable.
std::vector<std::optional<std::size_t>> partners(const HopfPresentation& h) {
  const auto& vars = h.ring()->vars();
  std::vector<std::optional<std::size_t>> out(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string& n = vars.name(i);
    if (n.size() > kInv.size() && n.compare(n.size() - kInv.size(), kInv.size(), kInv) == 0)
      if (auto b = vars.index_of(n.substr(0, n.size() - kInv.size()))) out[i] = *b;
  }
  return out;
}

bool satisfies(const HopfPresentation& h, const RationalPoint& pt) {
  for (const auto& r : h.relations())
    if (!r.evaluate(pt).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<RationalPoint> rational_points(const HopfPresentation& h) {
  const FieldSpec& f = h.field();
  if (!f.is_finite()) throw DomainError("rational points need a finite field");
  const std::size_t n = h.nvars();
  auto part = partners(h);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!part[i]) free.push_back(i);
  long double space = 1;
  for (std::size_t k = 0; k < free.size(); ++k) space *= static_cast<long double>(f.characteristic());
  if (space > 1e8L) throw LimitError("point enumeration space too large");
  auto elems = enumerate(f);
  std::vector<RationalPoint> out;
  std::vector<std::size_t> idx(free.size(), 0);
  for (;;) {
    RationalPoint pt(n, FieldElement::zero(f));
    for (std::size_t k = 0; k < free.size(); ++k) pt[free[k]] = elems[idx[k]];
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (part[i]) {
        if (pt[*part[i]].is_zero())
          ok = false;
        else
          pt[i] = pt[*part[i]].inv();
      }
    if (ok && satisfies(h, pt)) out.push_back(pt);
    bool done = true;
    for (std::size_t k = free.size(); k-- > 0;) {
      if (++idx[k] < elems.size()) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
    if (done) break;
  }
  return out;
}

RationalPoint point_product(const HopfPresentation& h, const RationalPoint& a, const RationalPoint& b) {
  if (a.size() != h.nvars() || b.size() != h.nvars()) throw DomainError("point has the wrong length");
  RationalPoint ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  RationalPoint out;
  for (const auto& d : h.delta) out.push_back(d.evaluate(ab));
  if (!satisfies(h, out)) throw Error("product of points violates a relation");
  return out;
}

RationalPoint counit_point(const HopfPresentation& h) { return h.counit; }

RationalPoint point_inverse(const HopfPresentation& h, const RationalPoint& a) {
  RationalPoint out;
  for (const auto& s : h.antipode) out.push_back(s.evaluate(a));
  if (!satisfies(h, out)) throw Error("antipode of a point violates a relation");
  return out;
}

std::string point_to_string(const HopfPresentation& h, const RationalPoint& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + h.ring()->vars().name(i) + "=" + a[i].to_string();
  return s + ")";
}

// ---------------------------------------------------------------- pairings

std::vector<Pairing> pairings(const FieldSpec& field) {
  const bool two = field.characteristic() == 2;
  auto el = [&](long long v) { return FieldElement::from_int(field, v); };
  std::vector<Pairing> out;
  const std::vector<std::vector<std::string>> id{{"1", "0"}, {"0", "1"}};
  out.push_back({"A1", {}, "H1", std::nullopt, {{"x", "1 - x"}, {"1 - x", "x"}}});
  out.push_back({"A2", {el(1), std::nullopt}, "H2", el(1), {{"a", "b"}, {"b^2", "a^2"}}});
  out.push_back({"A3", {el(1), std::nullopt}, "K", std::nullopt, id});
  out.push_back({"A4", {el(1), std::nullopt}, "K", std::nullopt, id});
  // alpha != beta and alpha*beta != 1 needs a field with at least three elements.
  if (!two) out.push_back({"A5ab", {el(1), el(2)}, "K", std::nullopt, id});
  // alpha = beta with alpha^2 != 1.
  for (long long a : {2, 3}) {
    FieldElement fa = el(a);
    if (!fa.is_zero() && !(fa * fa).is_one()) {
      out.push_back({"A5ab", {fa, fa}, "H1", std::nullopt, {{"x", "1 - x"}, {"1 - x", "x"}}});
      break;
    }
  }
  if (two) {
    out.push_back({"A5", {}, "H5_char2", std::nullopt, {{"x", "1 + x"}, {"1 + x", "x"}}});
  } else {
    out.push_back({"A5", {}, "H5", std::nullopt, {{"(1 + x)/2", "(1 - x)/2"}, {"(1 - x)/2", "(1 + x)/2"}}});
    out.push_back({"A5", {}, "H5alt", std::nullopt, {{"x", "1 - x"}, {"1 - x", "x"}}});
  }
  out.push_back({"A6", {}, "H6", std::nullopt, {{"y^2", "0"}, {"x", "y"}}});
  out.push_back({"A7", {}, "H7", std::nullopt, {{"1", "0"}, {"0", "x"}}});
  if (two)
    out.push_back({"A8", {el(1), std::nullopt}, "H8", std::nullopt, {{"1", "0"}, {"0", "1 + e"}}});
  else
    out.push_back({"A8", {el(1), std::nullopt}, "H8", std::nullopt, {{"1", "0"}, {"0", "x"}}});
  return out;
}

Matrix pairing_matrix(const Pairing& p, const HopfPresentation& h, const RationalPoint& point) {
  Matrix m;
  for (const auto& row : p.matrix) {
    Vec r;
    for (const auto& e : row) r.push_back(Polynomial::parse(h.ring(), e).evaluate(point));
    m.push_back(r);
  }
  return m;
}

PointsIsoReport points_group_iso_check(const Pairing& p, const FieldSpec& field) {
  HopfPresentation h = catalog(p.hopf, field, p.hopf_alpha);
  EvolutionAlgebra a = family(p.family, field, p.params);
  auto pts = rational_points(h);
  auto auts = aut_points(a);
  PointsIsoReport rep;
  rep.hopf_points = pts.size();
  rep.aut_points = auts.size();
  std::set<std::string> aut_keys, seen;
  for (const auto& m : auts) aut_keys.insert(matrix_to_string(m));
  rep.bijective = true;
  std::vector<Matrix> mats;
  for (const auto& pt : pts) {
    Matrix m = pairing_matrix(p, h, pt);
    std::string key = matrix_to_string(m);
    if (!aut_keys.count(key) || !is_isomorphism(a, a, m)) {
      rep.bijective = false;
      rep.failures.push_back("point " + point_to_string(h, pt) + " gives non-automorphism " + key);
    }
    if (!seen.insert(key).second) {
      rep.bijective = false;
      rep.failures.push_back("two points give " + key);
    }
    mats.push_back(std::move(m));
  }
  if (seen.size() != aut_keys.size()) rep.bijective = false;
  rep.multiplicative = true;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      Matrix prod = pairing_matrix(p, h, point_product(h, pts[i], pts[j]));
      if (prod != matmul(mats[i], mats[j])) {
        rep.multiplicative = false;
        rep.failures.push_back("product of " + point_to_string(h, pts[i]) + " and " + point_to_string(h, pts[j]));
      }
    }
  return rep;
}

}  // namespace evohopf
