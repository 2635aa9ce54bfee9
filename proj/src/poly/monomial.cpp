#include "detkit/monomial.hpp"

#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace detkit {

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw std::invalid_argument("too many variables: " + std::to_string(names_.size()) +
                                " (limit " + std::to_string(kMaxVariables) + ")");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name " + n);
  }
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

VariableTable VariableTable::with_prepended(const std::vector<std::string>& aux) const {
  std::vector<std::string> names = aux;
  names.insert(names.end(), names_.begin(), names_.end());
  return VariableTable(std::move(names));
}

void Monomial::recompute() {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    degree_ += exp_[i];
    if (exp_[i] != 0) support_ |= (1u << i);
  }
}

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  if (index >= kMaxVariables) throw std::invalid_argument("variable index out of range");
  if (exponent > 255) throw std::invalid_argument("exponent exceeds 255");
  Monomial m;
  m.exp_[index] = static_cast<Exponent>(exponent);
  m.recompute();
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw std::invalid_argument("too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 255) throw std::invalid_argument("exponent exceeds 255");
    m.exp_[i] = static_cast<Exponent>(exponents[i]);
  }
  m.recompute();
  return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    q.exp_[i] = static_cast<Exponent>(exp_[i] - divisor.exp_[i]);
  }
  q.degree_ = degree_ - divisor.degree_;
  q.support_ = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (q.exp_[i] != 0) q.support_ |= (1u << i);
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = unsigned{a.exp_[i]} + b.exp_[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exp_[i] = static_cast<Monomial::Exponent>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  m.support_ = a.support_ | b.support_;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    m.degree_ += m.exp_[i];
  }
  m.support_ = a.support_ | b.support_;
  return m;
}

std::vector<std::pair<std::size_t, unsigned>> Monomial::sparse() const {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] != 0) out.emplace_back(i, exp_[i]);
  }
  return out;
}

int Monomial::max_variable() const {
  if (support_ == 0) return -1;
  return 31 - std::countl_zero(support_);
}

Monomial Monomial::shifted(int shift) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] == 0) continue;
    const int j = static_cast<int>(i) + shift;
    if (j < 0 || j >= static_cast<int>(kMaxVariables)) {
      throw std::invalid_argument("variable shift out of range");
    }
    m.exp_[static_cast<std::size_t>(j)] = exp_[i];
  }
  m.recompute();
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_string(const Monomial& m, const VariableTable& vars) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [i, e] : m.sparse()) {
    if (!out.empty()) out += '*';
    out += i < vars.size() ? vars.name(i) : "v" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

MonomialOrder MonomialOrder::block_elimination(std::size_t nvars, std::size_t front) {
  if (front > nvars) throw std::invalid_argument("front block larger than variable count");
  return {OrderKind::block_elimination, nvars, front};
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::block_elimination:
      return "elim(" + std::to_string(front_) + ")";
  }
  return "?";
}

Comparison monomial_compare(const MonomialOrder& order, const Monomial& u, const Monomial& v) {
  const auto limit = static_cast<int>(order.variables());
  if (u.max_variable() >= limit || v.max_variable() >= limit) {
    throw std::invalid_argument("monomial outside the order's variable table");
  }
  const auto c = order.compare(u, v);
  if (c < 0) return Comparison::LT;
  if (c > 0) return Comparison::GT;
  return Comparison::EQ;
}

MonomialOrder parse_order(std::string_view name, std::size_t nvars) {
  if (name == "lex") return MonomialOrder::lex(nvars);
  if (name == "grevlex") return MonomialOrder::grevlex(nvars);
  throw std::invalid_argument("unknown monomial order '" + std::string(name) +
                              "' (expected lex or grevlex)");
}

}  // namespace detkit
