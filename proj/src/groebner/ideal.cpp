#include "detkit/ideal.hpp"

#include <bit>
#include <string>

namespace detkit {

template <CoefficientField F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<BasisCache>()) {
  if (!ring_) throw std::invalid_argument("ideal without a ring");
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) {
      throw std::invalid_argument("ideal generator belongs to a different ring");
    }
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

template <CoefficientField F>
const std::vector<Polynomial<F>>& Ideal<F>::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = buchberger<F>(gens_);
    cache_->ready = true;
  });
  return cache_->basis;
}

template <CoefficientField F>
bool Ideal<F>::has_cached_basis() const {
  return cache_->ready;
}

template <CoefficientField F>
bool Ideal<F>::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

template <CoefficientField F>
bool ideal_member(const Polynomial<F>& f, const Ideal<F>& I) {
  if (!same_ring(f.ring(), I.ring())) {
    throw std::invalid_argument("polynomial and ideal belong to different rings");
  }
  const auto& gb = I.groebner_basis();
  return normal_form<F>(f, gb).is_zero();
}

template <CoefficientField F>
bool ideal_contains(const Ideal<F>& big, const Ideal<F>& small) {
  for (const auto& g : small.generators()) {
    if (!ideal_member(g, big)) return false;
  }
  return true;
}

template <CoefficientField F>
bool ideal_equal(const Ideal<F>& I, const Ideal<F>& J) {
  if (!same_ring(I.ring(), J.ring())) {
    throw std::invalid_argument("ideal_equal: rings differ in variables or order");
  }
  const auto& a = I.groebner_basis();
  const auto& b = J.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

namespace {

std::string fresh_name(const VariableTable& vars) {
  std::string name = "w";
  for (int i = 1; vars.find(name); ++i) name = "w" + std::to_string(i);
  return name;
}

}  // namespace

template <CoefficientField F>
Ideal<F> ideal_intersect(const Ideal<F>& I, const Ideal<F>& J) {
  if (!same_ring(I.ring(), J.ring())) {
    throw std::invalid_argument("ideal_intersect: rings differ");
  }
  const RingPtr<F>& ring = I.ring();
  const std::size_t n = ring->size();
  auto elim = make_ring(ring->field(), ring->variables().with_prepended({fresh_name(ring->variables())}),
                        MonomialOrder::block_elimination(n + 1, 1));
  const auto w = Polynomial<F>::variable(elim, 0);
  const auto one_minus_w = Polynomial<F>::constant(elim, elim->field().one()) - w;

  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.generators()) gens.push_back(w * f.shifted_into(elim, 1));
  for (const auto& g : J.generators()) gens.push_back(one_minus_w * g.shifted_into(elim, 1));

  std::vector<Polynomial<F>> kept;
  for (const auto& g : buchberger<F>(gens)) {
    if (g.leading_monomial()[0] == 0) kept.push_back(g.shifted_into(ring, -1));
  }
  return Ideal<F>(ring, std::move(kept));
}

template <CoefficientField F>
Ideal<F> ideal_intersect_all(std::span<const Ideal<F>> ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  Ideal<F> acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i]);
  return acc;
}

template <CoefficientField F>
long krull_dimension(const Ideal<F>& I) {
  const auto& gb = I.groebner_basis();
  const std::size_t n = I.ring()->size();
  if (n > 24) throw std::invalid_argument("krull_dimension: too many variables for subset search");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    if (g.is_constant()) throw UnitIdealError();
    supports.push_back(g.leading_monomial().support());
  }
  int best = -1;
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  for (std::uint64_t s = 0; s <= full; ++s) {
    const auto subset = static_cast<std::uint32_t>(s);
    const int size = std::popcount(subset);
    if (size <= best) continue;
    bool independent = true;
    for (auto sup : supports) {
      if ((sup & ~subset) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

template <CoefficientField F>
long ideal_height(const Ideal<F>& I) {
  return static_cast<long>(I.ring()->size()) - krull_dimension(I);
}

#define DETKIT_INSTANTIATE_IDEAL(F)                                                \
  template class Ideal<F>;                                                         \
  template bool ideal_member<F>(const Polynomial<F>&, const Ideal<F>&);            \
  template bool ideal_contains<F>(const Ideal<F>&, const Ideal<F>&);               \
  template bool ideal_equal<F>(const Ideal<F>&, const Ideal<F>&);                  \
  template Ideal<F> ideal_intersect<F>(const Ideal<F>&, const Ideal<F>&);          \
  template Ideal<F> ideal_intersect_all<F>(std::span<const Ideal<F>>);             \
  template long krull_dimension<F>(const Ideal<F>&);                               \
  template long ideal_height<F>(const Ideal<F>&);

DETKIT_INSTANTIATE_IDEAL(PrimeField)
DETKIT_INSTANTIATE_IDEAL(RationalField)

#undef DETKIT_INSTANTIATE_IDEAL

}  // namespace detkit
