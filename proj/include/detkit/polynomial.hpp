#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "detkit/field.hpp"
#include "detkit/monomial.hpp"

namespace detkit {

/// Coefficient field, variable table and monomial order of k[x_1..x_n].
template <CoefficientField F>
class PolynomialRing {
 public:
  PolynomialRing(F field, VariableTable vars, MonomialOrder order)
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {
    if (order_.variables() != vars_.size()) {
      throw std::invalid_argument("monomial order and variable table disagree on size");
    }
  }

  const F& field() const { return field_; }
  const VariableTable& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return vars_.size(); }

  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  F field_;
  VariableTable vars_;
  MonomialOrder order_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolynomialRing<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, VariableTable vars, MonomialOrder order) {
  return std::make_shared<const PolynomialRing<F>>(std::move(field), std::move(vars), order);
}

template <CoefficientField F>
RingPtr<F> with_order(const RingPtr<F>& ring, MonomialOrder order) {
  return make_ring(ring->field(), ring->variables(), order);
}

template <CoefficientField F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

template <CoefficientField F>
struct Term {
  Monomial monomial;
  typename F::Element coeff;
};

namespace detail {

/// f + c * u * g on descending term lists, skipping the first `f_skip` and
/// `g_skip` terms of the inputs.
template <CoefficientField F>
std::vector<Term<F>> add_scaled(const F& field, const MonomialOrder& order,
                                std::span<const Term<F>> f,
                                const typename F::Element& c, const Monomial& u,
                                std::span<const Term<F>> g) {
  std::vector<Term<F>> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = u * g[j].monomial;
    const auto cmp = order.compare(f[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), field.mul(c, g[j].coeff)});
      ++j;
    } else {
      auto s = field.add(f[i].coeff, field.mul(c, g[j].coeff));
      if (!field.is_zero(s)) out.push_back({std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({u * g[j].monomial, field.mul(c, g[j].coeff)});
  return out;
}

/// Sorts descending and merges equal monomials, dropping zero sums.
template <CoefficientField F>
void canonicalize(const F& field, const MonomialOrder& order, std::vector<Term<F>>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    auto c = terms[i].coeff;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].monomial == terms[i].monomial; ++j) {
      c = field.add(c, terms[j].coeff);
    }
    if (!field.is_zero(c)) {
      terms[out].monomial = terms[i].monomial;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace detail

/// Sparse polynomial: terms strictly descending in the ring's order, no zero
/// coefficients. Values are immutable once built.
template <CoefficientField F>
class Polynomial {
 public:
  using Element = typename F::Element;
  using TermType = Term<F>;

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("polynomial without a ring");
  }

  static Polynomial constant(RingPtr<F> ring, const Element& c) {
    return term(std::move(ring), Monomial(), c);
  }
  static Polynomial constant(RingPtr<F> ring, std::int64_t c) {
    const auto e = ring->field().from_int(c);
    return term(std::move(ring), Monomial(), e);
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    if (index >= ring->size()) throw std::invalid_argument("variable index out of range");
    const auto one = ring->field().one();
    return term(std::move(ring), Monomial::variable(index), one);
  }
  static Polynomial term(RingPtr<F> ring, const Monomial& m, const Element& c) {
    Polynomial p(std::move(ring));
    p.check_monomial(m);
    if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial from_terms(RingPtr<F> ring, std::vector<TermType> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms) p.check_monomial(t.monomial);
    detail::canonicalize(p.field(), p.order(), terms);
    p.terms_ = std::move(terms);
    return p;
  }
  /// Terms must already be strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<TermType> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    assert(p.is_canonical());
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const MonomialOrder& order() const { return ring_->order(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<TermType>& terms() const { return terms_; }

  const TermType& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Element& leading_coeff() const { return leading_term().coeff; }

  /// Maximum total degree of a term; -1 for zero.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const auto inv = field().inv(leading_coeff());
    return scaled(inv);
  }

  Polynomial scaled(const Element& c) const {
    Polynomial p(ring_);
    if (field().is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial, field().mul(c, t.coeff)});
    return p;
  }

  Polynomial mul_term(const Monomial& u, const Element& c) const {
    Polynomial p(ring_);
    if (field().is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({u * t.monomial, field().mul(c, t.coeff)});
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial p(a.ring_);
    p.terms_ = detail::add_scaled<F>(a.field(), a.order(), a.terms_, a.field().one(), Monomial(),
                                     b.terms_);
    return p;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial p(a.ring_);
    p.terms_ = detail::add_scaled<F>(a.field(), a.order(), a.terms_,
                                     a.field().neg(a.field().one()), Monomial(), b.terms_);
    return p;
  }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(a.field().neg(a.field().one())); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    std::vector<TermType> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        acc.push_back({s.monomial * t.monomial, a.field().mul(s.coeff, t.coeff)});
      }
    }
    detail::canonicalize(a.field(), a.order(), acc);
    Polynomial p(a.ring_);
    p.terms_ = std::move(acc);
    return p;
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, field().one());
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          !a.field().equal(a.terms_[i].coeff, b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  /// Re-expresses the polynomial in `target`, moving variable i to i + shift.
  Polynomial shifted_into(const RingPtr<F>& target, int shift) const {
    if (!(target->field() == field())) throw std::invalid_argument("field mismatch");
    std::vector<TermType> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back({t.monomial.shifted(shift), t.coeff});
    return from_terms(target, std::move(terms));
  }

  /// Same polynomial under another ring with identical variables (e.g. a new order).
  Polynomial reordered(const RingPtr<F>& target) const { return shifted_into(target, 0); }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != ring_->size()) throw std::invalid_argument("evaluation point size");
    const F& k = field();
    Element total = k.zero();
    for (const auto& t : terms_) {
      Element v = t.coeff;
      for (const auto& [i, e] : t.monomial.sparse()) {
        for (unsigned r = 0; r < e; ++r) v = k.mul(v, point[i]);
      }
      total = k.add(total, v);
    }
    return total;
  }

  /// Canonical text: descending terms, `c*x[i,j]^e` factors, ` + ` / ` - ` joins.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    const F& k = field();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      const bool negative = k.is_negative(t.coeff);
      const auto magnitude = negative ? k.neg(t.coeff) : t.coeff;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (t.monomial.is_one()) {
        out += k.to_string(magnitude);
      } else {
        if (!k.is_one(magnitude)) out += k.to_string(magnitude) + "*";
        out += detkit::to_string(t.monomial, ring_->variables());
      }
    }
    return out;
  }

  bool is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (field().is_zero(terms_[i].coeff)) return false;
      if (i > 0 && order().compare(terms_[i - 1].monomial, terms_[i].monomial) <= 0) return false;
    }
    return true;
  }

  void check_ring(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) {
      throw std::invalid_argument("polynomials belong to different rings");
    }
  }

 private:
  void check_monomial(const Monomial& m) const {
    if (m.max_variable() >= static_cast<int>(ring_->size())) {
      throw std::invalid_argument("monomial uses a variable outside the ring");
    }
  }

  RingPtr<F> ring_;
  std::vector<TermType> terms_;
};

/// poly_mul
template <CoefficientField F>
Polynomial<F> poly_mul(const Polynomial<F>& f, const Polynomial<F>& g) {
  return f * g;
}

}  // namespace detkit
