#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "detkit/polynomial.hpp"

namespace detkit {

/// Thrown by long-running engine calls once the current thread's deadline passes.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("resource budget exceeded") {}
};

/// Installs a deadline for engine calls made on this thread; restores the
/// previous one on destruction.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::steady_clock::time_point deadline);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

/// Throws BudgetExceeded if this thread's deadline has passed.
void check_deadline();

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_discarded = 0;
  std::size_t max_basis_size = 0;
};

/// Full reduction of f by G: repeatedly cancels the greatest reducible term
/// using the first element of G (in stored order) whose leading monomial
/// divides it. Zero elements of G are ignored.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> G);

template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g);

/// Reduced Groebner basis of the ideal generated by `gens`, under the order of
/// their common ring: monic, autoreduced, sorted by ascending leading monomial.
/// Empty input gives an empty basis.
template <CoefficientField F>
std::vector<Polynomial<F>> buchberger(std::span<const Polynomial<F>> gens,
                                      GroebnerStats* stats = nullptr);

/// True iff every S-polynomial of G reduces to zero against G.
template <CoefficientField F>
bool is_groebner_basis(std::span<const Polynomial<F>> G);

/// True iff G is monic, sorted, has pairwise non-dividing leading monomials and
/// no reducible tail terms.
template <CoefficientField F>
bool is_reduced_basis(std::span<const Polynomial<F>> G);

}  // namespace detkit
