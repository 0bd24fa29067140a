#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace evohopf {

// Q (characteristic 0) or GF(p) for a prime p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(std::uint64_t p);
  // Accepts "Q", "GF:7", "GF(7)".
  static FieldSpec parse(std::string_view text);

  std::uint64_t characteristic() const { return p_; }
  bool is_finite() const { return p_ != 0; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

class FieldElement {
 public:
  static FieldElement zero(const FieldSpec& f) { return from_int(f, 0); }
  static FieldElement one(const FieldSpec& f) { return from_int(f, 1); }
  static FieldElement from_int(const FieldSpec& f, long long v);
  static FieldElement from_rational(const FieldSpec& f, const mpq_class& q);
  // "n" or "n/d", optional sign.
  static FieldElement parse(const FieldSpec& f, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inv() const;
  FieldElement pow(long long e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // Total order used for deterministic sorting only.
  int compare(const FieldElement& o) const;

  std::string to_string() const;

  // GF(p) residue in [0, p); throws on Q.
  std::uint64_t residue() const;
  // Exact value over Q; throws on GF(p).
  const mpq_class& rational() const;

 private:
  FieldElement(std::uint64_t p, std::uint64_t r) : p_(p), v_(r) {}
  FieldElement(mpq_class q) : p_(0), v_(std::move(q)) {}
  void check(const FieldElement& o) const;

  std::uint64_t p_;
  std::variant<std::uint64_t, mpq_class> v_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);

// All elements of a finite field in residue order.
std::vector<FieldElement> enumerate(const FieldSpec& f);

}  // namespace evohopf
