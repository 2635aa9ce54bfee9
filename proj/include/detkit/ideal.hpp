#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include "detkit/groebner.hpp"

namespace detkit {

class UnitIdealError : public std::domain_error {
 public:
  UnitIdealError() : std::domain_error("unit ideal") {}
};

/// Generator list over a ring, with a lazily computed reduced Groebner basis
/// shared between copies. Thread-safe once constructed.
template <CoefficientField F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  /// Zero generators are dropped. Throws std::invalid_argument on ring mismatch.
  Ideal(RingPtr<F> ring, std::vector<Poly> generators);

  static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr<F> ring) {
    auto one = Poly::constant(ring, ring->field().one());
    return Ideal(std::move(ring), {std::move(one)});
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Reduced Groebner basis in the ring's order; computed on first use.
  const std::vector<Poly>& groebner_basis() const;
  bool has_cached_basis() const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

 private:
  struct BasisCache {
    std::once_flag once;
    std::vector<Poly> basis;
    bool ready = false;
  };

  RingPtr<F> ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<BasisCache> cache_;
};

/// True iff normal_form(f, GB(I)) is zero.
template <CoefficientField F>
bool ideal_member(const Polynomial<F>& f, const Ideal<F>& I);

/// True iff every generator of `small` lies in `big`.
template <CoefficientField F>
bool ideal_contains(const Ideal<F>& big, const Ideal<F>& small);

/// True iff the reduced Groebner bases coincide term for term. Throws
/// std::invalid_argument if the rings (tables or orders) differ.
template <CoefficientField F>
bool ideal_equal(const Ideal<F>& I, const Ideal<F>& J);

/// I ∩ J by elimination of an auxiliary variable w from w*I + (1-w)*J.
template <CoefficientField F>
Ideal<F> ideal_intersect(const Ideal<F>& I, const Ideal<F>& J);

/// Left fold of ideal_intersect; `ideals` must be non-empty.
template <CoefficientField F>
Ideal<F> ideal_intersect_all(std::span<const Ideal<F>> ideals);

/// Dimension of the leading-term ideal: the largest variable subset containing
/// the support of no leading monomial. Throws UnitIdealError for (1).
template <CoefficientField F>
long krull_dimension(const Ideal<F>& I);

/// Number of variables minus krull_dimension.
template <CoefficientField F>
long ideal_height(const Ideal<F>& I);

}  // namespace detkit
