#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "detkit/polynomial.hpp"

namespace detkit {

/// Linear span of polynomials, kept in echelon form keyed by leading
/// monomial. Pure linear algebra over the coefficient field: no monomial
/// multiples are ever formed.
template <CoefficientField F>
class EchelonSpan {
 public:
  explicit EchelonSpan(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Adds p to the span. Returns true iff p was linearly independent of it.
  bool insert(const Polynomial<F>& p);

  /// p minus its projection onto the pivots; zero iff p lies in the span.
  Polynomial<F> reduce(const Polynomial<F>& p) const;

  bool contains(const Polynomial<F>& p) const { return reduce(p).is_zero(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Polynomial<F>>& rows() const { return rows_; }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> rows_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivot_;
};

/// Rank of the coefficient matrix of `polys`.
template <CoefficientField F>
std::size_t linear_rank(std::span<const Polynomial<F>> polys);

/// Coefficients a with target = sum a_i * basis_i, or nullopt if target is
/// outside the span. `basis` must be linearly independent.
template <CoefficientField F>
std::optional<std::vector<typename F::Element>> express_in_span(
    std::span<const Polynomial<F>> basis, const Polynomial<F>& target);

}  // namespace detkit
