#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "detkit/polynomial.hpp"

namespace detkit {

/// Positive integer weight per variable.
class GradingSpec {
 public:
  /// Throws std::invalid_argument if any weight is < 1.
  explicit GradingSpec(std::vector<unsigned> weights);
  static GradingSpec standard(std::size_t nvars) {
    return GradingSpec(std::vector<unsigned>(nvars, 1));
  }

  std::size_t size() const { return weights_.size(); }
  unsigned weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<unsigned>& weights() const { return weights_; }

  long degree(const Monomial& m) const;

 private:
  std::vector<unsigned> weights_;
};

/// Result of weighted_degree: a value, the zero polynomial's -infinity, or
/// "inhomogeneous".
class WeightedDegree {
 public:
  enum class Kind { minus_infinity, inhomogeneous, homogeneous };

  static WeightedDegree minus_infinity() { return WeightedDegree(Kind::minus_infinity, 0); }
  static WeightedDegree inhomogeneous() { return WeightedDegree(Kind::inhomogeneous, 0); }
  static WeightedDegree of(long d) { return WeightedDegree(Kind::homogeneous, d); }

  Kind kind() const { return kind_; }
  bool is_homogeneous() const { return kind_ == Kind::homogeneous; }
  long value() const {
    if (kind_ != Kind::homogeneous) throw std::logic_error("no weighted degree");
    return value_;
  }

  friend bool operator==(const WeightedDegree&, const WeightedDegree&) = default;

 private:
  WeightedDegree(Kind k, long v) : kind_(k), value_(v) {}
  Kind kind_;
  long value_;
};

template <CoefficientField F>
WeightedDegree weighted_degree(const GradingSpec& g, const Polynomial<F>& f) {
  if (g.size() != f.ring()->size()) {
    throw std::invalid_argument("grading and polynomial ring differ in variable count");
  }
  if (f.is_zero()) return WeightedDegree::minus_infinity();
  const long d = g.degree(f.leading_monomial());
  for (const auto& t : f.terms()) {
    if (g.degree(t.monomial) != d) return WeightedDegree::inhomogeneous();
  }
  return WeightedDegree::of(d);
}

}  // namespace detkit
