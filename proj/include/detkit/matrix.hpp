#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "detkit/combinat.hpp"
#include "detkit/polynomial.hpp"

namespace detkit {

enum class MatrixKind { generic, symmetric, skew };

/// A generic, generic symmetric or generic skew-symmetric matrix of variables.
///
/// Variables are numbered row-major over the free entries: x[i,j] for all
/// (i,j), y[i,j] for i <= j, z[i,j] for i < j. Indices are 1-based.
class MatrixSpec {
 public:
  static MatrixSpec generic(int m, int n);
  static MatrixSpec symmetric(int n);
  static MatrixSpec skew(int n);

  MatrixKind kind() const { return kind_; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  const VariableTable& variables() const { return vars_; }
  std::string symbol() const;  // "X", "Y" or "Z"

  struct Entry {
    int sign;  // -1, 0 or +1
    std::size_t var;
  };
  /// Throws std::out_of_range outside 1..rows x 1..cols.
  Entry entry(int i, int j) const;

  /// Variable index of the free entry (i,j); for symmetric/skew matrices i <= j / i < j.
  std::size_t variable_index(int i, int j) const;

 private:
  MatrixSpec(MatrixKind kind, int m, int n);
  MatrixKind kind_;
  int m_;
  int n_;
  VariableTable vars_;
};

template <CoefficientField F>
RingPtr<F> matrix_ring(const MatrixSpec& spec, F field, const std::string& order = "grevlex") {
  return make_ring(std::move(field), spec.variables(), parse_order(order, spec.variables().size()));
}

/// Minors and Pfaffians of one matrix over one ring, memoized on
/// (row set, column set) bitmasks. Not thread-safe; use one per thread.
template <CoefficientField F>
class MatrixPolynomials {
 public:
  /// Throws std::invalid_argument if the ring's variables differ from those of `spec`.
  MatrixPolynomials(MatrixSpec spec, RingPtr<F> ring);

  const MatrixSpec& spec() const { return spec_; }
  const RingPtr<F>& ring() const { return ring_; }

  Polynomial<F> entry(int i, int j) const;
  /// Determinant of the indexed submatrix by first-column cofactor expansion.
  Polynomial<F> minor(const combinat::MinorIndex& ix);
  /// Pfaffian by expansion along the first index; skew matrices only.
  Polynomial<F> pfaffian(const combinat::PfaffianIndex& ix);

 private:
  Polynomial<F> det_masks(std::uint32_t rows, std::uint32_t cols);
  Polynomial<F> pf_mask(std::uint32_t rows);

  MatrixSpec spec_;
  RingPtr<F> ring_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial<F>> det_memo_;
  std::map<std::uint32_t, Polynomial<F>> pf_memo_;
};

template <CoefficientField F>
Polynomial<F> minor_poly(const MatrixSpec& spec, const RingPtr<F>& ring,
                         const combinat::MinorIndex& ix) {
  MatrixPolynomials<F> mp(spec, ring);
  return mp.minor(ix);
}

template <CoefficientField F>
Polynomial<F> pfaffian_poly(const MatrixSpec& spec, const RingPtr<F>& ring,
                            const combinat::PfaffianIndex& ix) {
  MatrixPolynomials<F> mp(spec, ring);
  return mp.pfaffian(ix);
}

}  // namespace detkit
