#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shellseq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t n);

// Coefficient choice for (co)homology computations: the integers, the
// rationals, or a prime field.
class CoefficientRing {
 public:
  enum class Kind { integers, rationals, prime_field };

  static CoefficientRing integers() { return CoefficientRing(Kind::integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::rationals, 0); }
  static CoefficientRing prime_field(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    return CoefficientRing(Kind::prime_field, p);
  }

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::integers; }
  std::string name() const;

  bool operator==(const CoefficientRing&) const = default;

 private:
  CoefficientRing(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

// Field policies for the generic linear algebra. Each provides an Element
// type plus exact arithmetic on it.

struct RationalField {
  using Element = Rational;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const { return v; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element div(const Element& a, const Element& b) const {
    if (b == 0) throw std::domain_error("division by zero");
    return a / b;
  }
  Element neg(const Element& a) const { return -a; }
  bool is_zero(const Element& a) const { return a == 0; }
  CoefficientRing ring() const { return CoefficientRing::rationals(); }
};

// Arithmetic modulo a prime p < 2^31, with elements stored as canonical
// residues in [0, p).
class PrimeField {
 public:
  using Element = std::int64_t;

  explicit PrimeField(std::int64_t p);

  std::int64_t modulus() const { return p_; }
  Element zero() const { return 0; }
  Element one() const { return p_ == 1 ? 0 : 1; }
  Element from_int(long long v) const {
    Element r = static_cast<Element>(v % p_);
    return r < 0 ? r + p_ : r;
  }
  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a - b + p_) % p_; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  CoefficientRing ring() const { return CoefficientRing::prime_field(p_); }

 private:
  std::int64_t p_;
};

}  // namespace shellseq
