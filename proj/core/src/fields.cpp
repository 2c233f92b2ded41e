#include "shellseq/fields.hpp"

namespace shellseq {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::prime_field: return "F" + std::to_string(p_);
  }
  return "?";
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  if (p >= (std::int64_t(1) << 31)) throw std::invalid_argument("modulus too large");
}

PrimeField::Element PrimeField::inv(Element a) const {
  a %= p_;
  if (a < 0) a += p_;
  if (a == 0) throw std::domain_error("division by zero");
  // extended Euclid: find x with a*x = 1 (mod p)
  std::int64_t r0 = p_, r1 = a, x0 = 0, x1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t x2 = x0 - q * x1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
  }
  x0 %= p_;
  return x0 < 0 ? x0 + p_ : x0;
}

}  // namespace shellseq
