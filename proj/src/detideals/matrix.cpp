#include "detkit/matrix.hpp"

#include <bit>
#include <stdexcept>

namespace detkit {

namespace {

VariableTable make_variables(MatrixKind kind, int m, int n) {
  std::vector<std::string> names;
  const char* sym = kind == MatrixKind::generic ? "x" : kind == MatrixKind::symmetric ? "y" : "z";
  for (int i = 1; i <= m; ++i) {
    const int first = kind == MatrixKind::generic ? 1 : kind == MatrixKind::symmetric ? i : i + 1;
    for (int j = first; j <= n; ++j) {
      names.push_back(std::string(sym) + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }
  return VariableTable(std::move(names));
}

std::uint32_t mask_of(const combinat::SubsetIx& s, int bound) {
  std::uint32_t mask = 0;
  for (int v : s) {
    if (v > bound || v > 32) throw std::out_of_range("index " + std::to_string(v) + " out of range");
    mask |= 1u << (v - 1);
  }
  return mask;
}

int lowest(std::uint32_t mask) { return std::countr_zero(mask) + 1; }

}  // namespace

MatrixSpec::MatrixSpec(MatrixKind kind, int m, int n)
    : kind_(kind), m_(m), n_(n), vars_(make_variables(kind, m, n)) {}

MatrixSpec MatrixSpec::generic(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
  return MatrixSpec(MatrixKind::generic, m, n);
}

MatrixSpec MatrixSpec::symmetric(int n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
  return MatrixSpec(MatrixKind::symmetric, n, n);
}

MatrixSpec MatrixSpec::skew(int n) {
  if (n < 2) throw std::invalid_argument("skew-symmetric matrix needs n >= 2");
  return MatrixSpec(MatrixKind::skew, n, n);
}

std::string MatrixSpec::symbol() const {
  switch (kind_) {
    case MatrixKind::generic:
      return "X";
    case MatrixKind::symmetric:
      return "Y";
    case MatrixKind::skew:
      return "Z";
  }
  return "?";
}

std::size_t MatrixSpec::variable_index(int i, int j) const {
  const auto ui = static_cast<std::size_t>(i - 1);
  const auto uj = static_cast<std::size_t>(j - 1);
  const auto n = static_cast<std::size_t>(n_);
  switch (kind_) {
    case MatrixKind::generic:
      return ui * n + uj;
    case MatrixKind::symmetric:
      // rows before i contribute n, n-1, ..., n-i+2 entries
      return ui * n - ui * (ui - 1) / 2 + (uj - ui);
    case MatrixKind::skew:
      return ui * (n - 1) - ui * (ui - 1) / 2 + (uj - ui - 1);
  }
  return 0;
}

MatrixSpec::Entry MatrixSpec::entry(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_) {
    throw std::out_of_range("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range");
  }
  switch (kind_) {
    case MatrixKind::generic:
      return {1, variable_index(i, j)};
    case MatrixKind::symmetric:
      return i <= j ? Entry{1, variable_index(i, j)} : Entry{1, variable_index(j, i)};
    case MatrixKind::skew:
      if (i == j) return {0, 0};
      return i < j ? Entry{1, variable_index(i, j)} : Entry{-1, variable_index(j, i)};
  }
  return {0, 0};
}

template <CoefficientField F>
MatrixPolynomials<F>::MatrixPolynomials(MatrixSpec spec, RingPtr<F> ring)
    : spec_(std::move(spec)), ring_(std::move(ring)) {
  if (!(ring_->variables() == spec_.variables())) {
    throw std::invalid_argument("ring variables do not match the matrix");
  }
}

template <CoefficientField F>
Polynomial<F> MatrixPolynomials<F>::entry(int i, int j) const {
  const auto e = spec_.entry(i, j);
  if (e.sign == 0) return Polynomial<F>(ring_);
  auto v = Polynomial<F>::variable(ring_, e.var);
  return e.sign > 0 ? v : -v;
}

template <CoefficientField F>
Polynomial<F> MatrixPolynomials<F>::minor(const combinat::MinorIndex& ix) {
  return det_masks(mask_of(ix.rows, spec_.rows()), mask_of(ix.cols, spec_.cols()));
}

template <CoefficientField F>
Polynomial<F> MatrixPolynomials<F>::det_masks(std::uint32_t rows, std::uint32_t cols) {
  if (rows == 0) return Polynomial<F>::constant(ring_, ring_->field().one());
  if (auto it = det_memo_.find({rows, cols}); it != det_memo_.end()) return it->second;
  const int c = lowest(cols);
  const std::uint32_t rest_cols = cols & (cols - 1);
  Polynomial<F> acc(ring_);
  int position = 0;
  for (std::uint32_t rs = rows; rs != 0; rs &= rs - 1, ++position) {
    const int r = lowest(rs);
    auto a = entry(r, c);
    if (a.is_zero()) continue;
    auto term = a * det_masks(rows & ~(1u << (r - 1)), rest_cols);
    acc = position % 2 == 0 ? acc + term : acc - term;
  }
  det_memo_.emplace(std::make_pair(rows, cols), acc);
  return acc;
}

template <CoefficientField F>
Polynomial<F> MatrixPolynomials<F>::pfaffian(const combinat::PfaffianIndex& ix) {
  if (spec_.kind() != MatrixKind::skew) {
    throw std::invalid_argument("Pfaffians are defined for skew-symmetric matrices only");
  }
  return pf_mask(mask_of(ix.rows, spec_.rows()));
}

template <CoefficientField F>
Polynomial<F> MatrixPolynomials<F>::pf_mask(std::uint32_t rows) {
  if (rows == 0) return Polynomial<F>::constant(ring_, ring_->field().one());
  if (auto it = pf_memo_.find(rows); it != pf_memo_.end()) return it->second;
  const int first = lowest(rows);
  const std::uint32_t rest = rows & (rows - 1);
  Polynomial<F> acc(ring_);
  // positions counted from 1 within the index; partner at position i gets sign (-1)^i
  int position = 2;
  for (std::uint32_t rs = rest; rs != 0; rs &= rs - 1, ++position) {
    const int k = lowest(rs);
    auto term = entry(first, k) * pf_mask(rest & ~(1u << (k - 1)));
    acc = position % 2 == 0 ? acc + term : acc - term;
  }
  pf_memo_.emplace(rows, acc);
  return acc;
}

template class MatrixPolynomials<PrimeField>;
template class MatrixPolynomials<RationalField>;

}  // namespace detkit
