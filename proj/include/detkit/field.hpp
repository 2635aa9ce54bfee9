#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace detkit {

/// Integers modulo a prime p < 2^31. Elements are residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const;

  Element add(Element a, Element b) const {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws std::domain_error on zero.
  Element inv(Element a) const;

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  /// Printing uses the symmetric representative in (-p/2, p/2].
  bool is_negative(Element a) const { return a > p_ / 2; }
  std::string to_string(Element a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP. mpq_class values are kept canonical.
class RationalField {
 public:
  using Element = mpq_class;

  std::string name() const { return "qq"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const;

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  bool is_negative(const Element& a) const { return sgn(a) < 0; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept CoefficientField = requires(const F& f, const typename F::Element& a) {
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.name() } -> std::convertible_to<std::string>;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

}  // namespace detkit
