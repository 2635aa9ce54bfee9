#include "detkit/field.hpp"

#include <stdexcept>

namespace detkit {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("prime field modulus must be a prime below 2^31, got " +
                                std::to_string(p));
  }
}

std::string PrimeField::name() const { return "fp:" + std::to_string(p_); }

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  return from_int(s0);
}

std::string PrimeField::to_string(Element a) const {
  if (is_negative(a)) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::Element RationalField::from_int(std::int64_t v) const {
  mpz_class z;
  // mpz from a 64-bit value without relying on long being 64 bits
  z = static_cast<long>(v >> 32);
  z <<= 32;
  z += static_cast<unsigned long>(v & 0xffffffffLL);
  return Element(z);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero in qq");
  Element r = 1 / a;
  r.canonicalize();
  return r;
}

}  // namespace detkit
