#include "evohopf/fields.hpp"

#include <charconv>
#include <limits>

#include "evohopf/error.hpp"

namespace evohopf {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw DomainError("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view rest;
  if (text.starts_with("GF:"))
    rest = text.substr(3);
  else if (text.starts_with("GF(") && text.ends_with(")"))
    rest = text.substr(3, text.size() - 4);
  else
    throw ParseError("unknown field '" + std::string(text) + "'");
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
  if (ec != std::errc() || ptr != rest.data() + rest.size())
    throw ParseError("bad characteristic in '" + std::string(text) + "'");
  return prime(p);
}

std::string FieldSpec::to_string() const {
  return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

FieldElement FieldElement::from_int(const FieldSpec& f, long long v) {
  if (!f.is_finite()) return FieldElement(mpq_class(static_cast<long>(v)));
  const auto p = static_cast<long long>(f.characteristic());
  long long r = v % p;
  if (r < 0) r += p;
  return FieldElement(f.characteristic(), static_cast<std::uint64_t>(r));
}

FieldElement FieldElement::from_rational(const FieldSpec& f, const mpq_class& q) {
  if (!f.is_finite()) {
    mpq_class c = q;
    c.canonicalize();
    return FieldElement(std::move(c));
  }
  const std::uint64_t p = f.characteristic();
  const std::uint64_t den = reduce_mpz(q.get_den(), p);
  if (den == 0)
    throw DomainError("denominator vanishes in " + f.to_string());
  const std::uint64_t num = reduce_mpz(q.get_num(), p);
  return FieldElement(p, num * mod_inverse(den, p) % p);
}

FieldElement FieldElement::parse(const FieldSpec& f, std::string_view text) {
  std::string s(text);
  mpq_class q;
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    bool digits = false, slash = false;
    for (; i < t.size(); ++i) {
      if (t[i] >= '0' && t[i] <= '9') {
        digits = true;
      } else if (t[i] == '/' && digits && !slash) {
        slash = true;
        digits = false;
      } else {
        return false;
      }
    }
    return digits;
  };
  if (!valid(s)) throw ParseError("bad field element '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  if (q.set_str(s, 10) != 0) throw ParseError("bad field element '" + s + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_rational(f, q);
}

FieldSpec FieldElement::field() const {
  return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime(p_);
}

bool FieldElement::is_zero() const {
  if (p_) return std::get<std::uint64_t>(v_) == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool FieldElement::is_one() const {
  if (p_) return std::get<std::uint64_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

void FieldElement::check(const FieldElement& o) const {
  if (p_ != o.p_)
    throw MismatchError("field mismatch: " + field().to_string() + " vs " +
                        o.field().to_string());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  if (p_) {
    std::uint64_t s = std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_);
    return FieldElement(p_, s >= p_ ? s - p_ : s);
  }
  return FieldElement(mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  if (p_) {
    std::uint64_t a = std::get<std::uint64_t>(v_), b = std::get<std::uint64_t>(o.v_);
    return FieldElement(p_, a >= b ? a - b : a + p_ - b);
  }
  return FieldElement(mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  if (p_)
    return FieldElement(p_, std::get<std::uint64_t>(v_) * std::get<std::uint64_t>(o.v_) % p_);
  return FieldElement(mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inv();
}

FieldElement FieldElement::operator-() const {
  if (p_) {
    std::uint64_t a = std::get<std::uint64_t>(v_);
    return FieldElement(p_, a == 0 ? 0 : p_ - a);
  }
  return FieldElement(mpq_class(-std::get<mpq_class>(v_)));
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DomainError("inverse of zero in " + field().to_string());
  if (p_) return FieldElement(p_, mod_inverse(std::get<std::uint64_t>(v_), p_));
  return FieldElement(mpq_class(1 / std::get<mpq_class>(v_)));
}

FieldElement FieldElement::pow(long long e) const {
  FieldElement base = e < 0 ? inv() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  FieldElement acc = p_ ? FieldElement(p_, 1 % p_) : FieldElement(mpq_class(1));
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check(o);
  if (p_) return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
  return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

int FieldElement::compare(const FieldElement& o) const {
  check(o);
  if (p_) {
    auto a = std::get<std::uint64_t>(v_), b = std::get<std::uint64_t>(o.v_);
    return a < b ? -1 : (a > b ? 1 : 0);
  }
  return cmp(std::get<mpq_class>(v_), std::get<mpq_class>(o.v_));
}

std::string FieldElement::to_string() const {
  if (p_) return std::to_string(std::get<std::uint64_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

std::uint64_t FieldElement::residue() const {
  if (!p_) throw DomainError("residue() on a rational");
  return std::get<std::uint64_t>(v_);
}

const mpq_class& FieldElement::rational() const {
  if (p_) throw DomainError("rational() on a finite field element");
  return std::get<mpq_class>(v_);
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement neg(const FieldElement& a) { return -a; }
FieldElement inv(const FieldElement& a) { return a.inv(); }

std::vector<FieldElement> enumerate(const FieldSpec& f) {
  if (!f.is_finite()) throw DomainError("cannot enumerate an infinite field");
  std::vector<FieldElement> out;
  out.reserve(f.characteristic());
  for (std::uint64_t i = 0; i < f.characteristic(); ++i)
    out.push_back(FieldElement::from_int(f, static_cast<long long>(i)));
  return out;
}

}  // namespace evohopf
