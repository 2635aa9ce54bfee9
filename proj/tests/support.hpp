#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "detkit/polynomial.hpp"

namespace detkit::testing {

inline VariableTable names(std::initializer_list<const char*> list) {
  std::vector<std::string> v(list.begin(), list.end());
  return VariableTable(std::move(v));
}

inline VariableTable numbered(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  return VariableTable(std::move(v));
}

template <CoefficientField F>
Polynomial<F> var(const RingPtr<F>& ring, std::size_t i) {
  return Polynomial<F>::variable(ring, i);
}

template <CoefficientField F>
Polynomial<F> cst(const RingPtr<F>& ring, std::int64_t c) {
  return Polynomial<F>::constant(ring, c);
}

/// Random polynomial with up to `max_terms` terms, exponents <= `max_exp`.
template <CoefficientField F>
Polynomial<F> random_poly(const RingPtr<F>& ring, std::mt19937& rng, std::size_t max_terms,
                          unsigned max_exp) {
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> ex(0, max_exp);
  std::uniform_int_distribution<int> co(-9, 9);
  std::vector<Term<F>> terms;
  const std::size_t k = nterms(rng);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<unsigned> e(ring->size());
    for (auto& x : e) x = ex(rng);
    terms.push_back({Monomial::from_exponents(e), ring->field().from_int(co(rng))});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <CoefficientField F>
std::vector<typename F::Element> random_point(const RingPtr<F>& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> co(-50, 50);
  std::vector<typename F::Element> pt;
  for (std::size_t i = 0; i < ring->size(); ++i) pt.push_back(ring->field().from_int(co(rng)));
  return pt;
}

}  // namespace detkit::testing
