#include "detkit/linalg.hpp"

#include <stdexcept>

namespace detkit {

namespace {

/// Eliminates every pivot monomial from `p`. `on_subtract(row, c)` is told
/// that c * rows[row] was subtracted.
template <CoefficientField F, class Callback>
Polynomial<F> eliminate(const Polynomial<F>& p, const std::vector<Polynomial<F>>& rows,
                        const std::unordered_map<Monomial, std::size_t, MonomialHash>& pivot,
                        Callback&& on_subtract) {
  const F& k = p.field();
  std::vector<Term<F>> work = p.terms();
  std::size_t pos = 0;
  while (pos < work.size()) {
    const auto it = pivot.find(work[pos].monomial);
    if (it == pivot.end()) {
      ++pos;
      continue;
    }
    const auto& row = rows[it->second];
    const auto c = k.mul(work[pos].coeff, k.inv(row.leading_coeff()));
    on_subtract(it->second, c);
    std::vector<Term<F>> next(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(pos));
    auto tail = detail::add_scaled<F>(k, p.order(),
                                      std::span<const Term<F>>(work).subspan(pos + 1), k.neg(c),
                                      Monomial(), std::span<const Term<F>>(row.terms()).subspan(1));
    next.insert(next.end(), tail.begin(), tail.end());
    work = std::move(next);
  }
  return Polynomial<F>::from_sorted_terms(p.ring(), std::move(work));
}

}  // namespace

template <CoefficientField F>
bool EchelonSpan<F>::insert(const Polynomial<F>& p) {
  auto r = reduce(p);
  if (r.is_zero()) return false;
  pivot_.emplace(r.leading_monomial(), rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

template <CoefficientField F>
Polynomial<F> EchelonSpan<F>::reduce(const Polynomial<F>& p) const {
  if (!same_ring(p.ring(), ring_)) throw std::invalid_argument("EchelonSpan: ring mismatch");
  return eliminate<F>(p, rows_, pivot_, [](std::size_t, const auto&) {});
}

template <CoefficientField F>
std::size_t linear_rank(std::span<const Polynomial<F>> polys) {
  if (polys.empty()) return 0;
  EchelonSpan<F> span(polys.front().ring());
  for (const auto& p : polys) span.insert(p);
  return span.rank();
}

template <CoefficientField F>
std::optional<std::vector<typename F::Element>> express_in_span(
    std::span<const Polynomial<F>> basis, const Polynomial<F>& target) {
  using Element = typename F::Element;
  const F& k = target.field();
  const std::size_t n = basis.size();
  std::vector<Polynomial<F>> rows;
  std::vector<std::vector<Element>> combos;  // rows[i] = sum combos[i][j] * basis[j]
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivot;

  for (std::size_t b = 0; b < n; ++b) {
    std::vector<Element> combo(n, k.zero());
    combo[b] = k.one();
    auto r = eliminate<F>(basis[b], rows, pivot, [&](std::size_t row, const Element& c) {
      for (std::size_t j = 0; j < n; ++j) combo[j] = k.sub(combo[j], k.mul(c, combos[row][j]));
    });
    if (r.is_zero()) throw std::invalid_argument("express_in_span: basis is linearly dependent");
    pivot.emplace(r.leading_monomial(), rows.size());
    rows.push_back(std::move(r));
    combos.push_back(std::move(combo));
  }

  std::vector<Element> coeffs(n, k.zero());
  auto rest = eliminate<F>(target, rows, pivot, [&](std::size_t row, const Element& c) {
    for (std::size_t j = 0; j < n; ++j) coeffs[j] = k.add(coeffs[j], k.mul(c, combos[row][j]));
  });
  if (!rest.is_zero()) return std::nullopt;
  return coeffs;
}

#define DETKIT_INSTANTIATE_LINALG(F)                                                   \
  template class EchelonSpan<F>;                                                       \
  template std::size_t linear_rank<F>(std::span<const Polynomial<F>>);                 \
  template std::optional<std::vector<typename F::Element>> express_in_span<F>(         \
      std::span<const Polynomial<F>>, const Polynomial<F>&);

DETKIT_INSTANTIATE_LINALG(PrimeField)
DETKIT_INSTANTIATE_LINALG(RationalField)

#undef DETKIT_INSTANTIATE_LINALG

}  // namespace detkit
