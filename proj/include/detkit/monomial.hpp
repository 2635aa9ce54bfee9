#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace detkit {

/// Upper bound on the number of variables of any polynomial ring.
inline constexpr std::size_t kMaxVariables = 32;

/// Ordered variable names. Position 0 is the greatest variable in every order.
class VariableTable {
 public:
  VariableTable() = default;
  /// Throws std::invalid_argument on duplicate names or more than kMaxVariables.
  explicit VariableTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  /// New table with `aux` in front; existing variables shift by aux.size().
  VariableTable with_prepended(const std::vector<std::string>& aux) const;

  friend bool operator==(const VariableTable&, const VariableTable&) = default;

 private:
  std::vector<std::string> names_;
};

/// Exponent vector stored densely over kMaxVariables slots, with cached
/// total degree and support bitmask.
class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned exponent = 1);
  /// Throws std::invalid_argument if too many entries or an exponent exceeds 255.
  static Monomial from_exponents(std::span<const unsigned> exponents);

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  unsigned degree() const { return degree_; }
  std::uint32_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }

  /// Precondition: divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b) {
    return (a.support_ & b.support_) == 0;
  }

  /// Sparse (position, exponent) pairs sorted by position.
  std::vector<std::pair<std::size_t, unsigned>> sparse() const;

  /// Highest variable index in the support, or -1 for the unit monomial.
  int max_variable() const;

  /// Same monomial with every variable moved by `shift` positions (may be negative).
  Monomial shifted(int shift) const;

  const std::array<Exponent, kMaxVariables>& exponents() const { return exp_; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  std::size_t hash() const;

 private:
  void recompute();

  std::array<Exponent, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// `x[1,1]^2*x[2,3]`, or `1` for the unit monomial.
std::string to_string(const Monomial& m, const VariableTable& vars);

enum class OrderKind { lex, grevlex, block_elimination };

/// Total monomial order over a fixed number of variables.
///
/// block_elimination(k) compares the first k variables by grevlex and breaks
/// ties by grevlex on the remaining ones, so any monomial involving a front
/// variable exceeds every monomial free of them.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t nvars) { return {OrderKind::lex, nvars, 0}; }
  static MonomialOrder grevlex(std::size_t nvars) { return {OrderKind::grevlex, nvars, 0}; }
  static MonomialOrder block_elimination(std::size_t nvars, std::size_t front);

  OrderKind kind() const { return kind_; }
  std::size_t variables() const { return nvars_; }
  std::size_t front_block() const { return front_; }
  std::string name() const;

  /// Unchecked comparison for hot loops.
  std::strong_ordering compare(const Monomial& u, const Monomial& v) const {
    switch (kind_) {
      case OrderKind::lex:
        return compare_lex(u, v);
      case OrderKind::grevlex:
        return compare_grevlex_full(u, v, nvars_);
      case OrderKind::block_elimination:
        break;
    }
    if (auto c = compare_grevlex(u, v, 0, front_); c != 0) return c;
    return compare_grevlex(u, v, front_, nvars_);
  }
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::size_t nvars, std::size_t front)
      : kind_(kind), nvars_(nvars), front_(front) {}

  std::strong_ordering compare_lex(const Monomial& u, const Monomial& v) const {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (u[i] != v[i]) return u[i] <=> v[i];
    }
    return std::strong_ordering::equal;
  }

  static std::strong_ordering compare_grevlex(const Monomial& u, const Monomial& v,
                                              std::size_t begin, std::size_t end) {
    unsigned du = 0, dv = 0;
    for (std::size_t i = begin; i < end; ++i) {
      du += u[i];
      dv += v[i];
    }
    if (du != dv) return du <=> dv;
    return reverse_scan(u, v, begin, end);
  }

  static std::strong_ordering compare_grevlex_full(const Monomial& u, const Monomial& v,
                                                   std::size_t nvars) {
    if (u.degree() != v.degree()) return u.degree() <=> v.degree();
    return reverse_scan(u, v, 0, nvars);
  }

  static std::strong_ordering reverse_scan(const Monomial& u, const Monomial& v,
                                           std::size_t begin, std::size_t end) {
    for (std::size_t i = end; i-- > begin;) {
      if (u[i] != v[i]) return v[i] <=> u[i];
    }
    return std::strong_ordering::equal;
  }

  OrderKind kind_;
  std::size_t nvars_;
  std::size_t front_;
};

enum class Comparison { LT, EQ, GT };

/// Checked comparison: throws std::invalid_argument if either monomial uses
/// a variable outside the order's range.
Comparison monomial_compare(const MonomialOrder& order, const Monomial& u, const Monomial& v);

/// Parses "lex" or "grevlex".
MonomialOrder parse_order(std::string_view name, std::size_t nvars);

}  // namespace detkit
