#pragma once

#include <string>
#include <vector>

#include "detkit/combinat.hpp"
#include "detkit/grading.hpp"
#include "detkit/ideal.hpp"
#include "detkit/matrix.hpp"

namespace detkit {

/// Nested leading blocks: at least row_mins[i] rows among the first
/// row_cuts[i] rows, at least col_mins[j] columns among the first col_cuts[j].
struct BlockProfile {
  std::vector<int> row_cuts;
  std::vector<int> row_mins;
  std::vector<int> col_cuts;
  std::vector<int> col_mins;

  /// Throws std::invalid_argument unless lengths match and
  /// 1 <= R_1 <= ... <= R_p <= m, 1 <= C_1 <= ... <= C_q <= n.
  void validate(int m, int n) const;
  bool empty() const { return row_cuts.empty() && col_cuts.empty(); }
};

template <CoefficientField F>
struct NamedIdeal {
  std::string name;
  Ideal<F> ideal;
};

/// Every t-minor of a generic matrix satisfying the profile's block conditions.
std::vector<combinat::MinorIndex> qualifying_minors(int m, int n, int t, const BlockProfile& b);
/// Every 2t-Pfaffian index with at least r_i entries in [R_i].
std::vector<combinat::PfaffianIndex> qualifying_pfaffians(int n, int size2t,
                                                          const std::vector<int>& R,
                                                          const std::vector<int>& r);

/// Ideal of s-minors of the submatrix on `rows` x `cols`. s <= 0 gives the
/// unit ideal, s above the submatrix size the zero ideal.
template <CoefficientField F>
Ideal<F> minors_ideal(MatrixPolynomials<F>& mp, const combinat::SubsetIx& rows,
                      const combinat::SubsetIx& cols, int s);

/// Ideal of s-Pfaffians of the principal submatrix on `index`; s even.
template <CoefficientField F>
Ideal<F> pfaffians_ideal(MatrixPolynomials<F>& mp, const combinat::SubsetIx& index, int s);

/// [I_t(X), I_r1(X_R1), ..., I_c1(X^C1), ...].
template <CoefficientField F>
std::vector<NamedIdeal<F>> build_components_minors(MatrixPolynomials<F>& mp, int t,
                                                   const BlockProfile& b);
template <CoefficientField F>
Ideal<F> build_J_minors(MatrixPolynomials<F>& mp, int t, const BlockProfile& b);

/// J for a symmetric matrix: all qualifying t-minors, or only those in the doset.
template <CoefficientField F>
Ideal<F> build_J_symmetric(MatrixPolynomials<F>& mp, int t, const std::vector<int>& R,
                           const std::vector<int>& r, bool doset_only = false);
/// [I_t(Y), I_r1(Y_R1), ...].
template <CoefficientField F>
std::vector<NamedIdeal<F>> build_components_symmetric(MatrixPolynomials<F>& mp, int t,
                                                      const std::vector<int>& R,
                                                      const std::vector<int>& r);

/// Throws std::invalid_argument if size2t is odd.
template <CoefficientField F>
Ideal<F> build_J_pfaffian(MatrixPolynomials<F>& mp, int size2t, const std::vector<int>& R,
                          const std::vector<int>& r);
/// The ideal of Pfaffians with at least r entries in [R]: P_r(Z(R)) for r
/// even, the sum of P_{r+1}(Z(R u k)) over k > R for r odd.
template <CoefficientField F>
NamedIdeal<F> pfaffian_block_component(MatrixPolynomials<F>& mp, int R, int r);
/// [P_2t(Z), J_1, ..., J_p].
template <CoefficientField F>
std::vector<NamedIdeal<F>> build_components_pfaffian(MatrixPolynomials<F>& mp, int size2t,
                                                     const std::vector<int>& R,
                                                     const std::vector<int>& r);

/// Weights p on the first a columns of a generic matrix, q elsewhere.
GradingSpec column_block_grading(const MatrixSpec& spec, int a, unsigned p, unsigned q);
/// Skew weights 2p inside [R] x [R], p+q across, 2q outside.
GradingSpec skew_block_grading(const MatrixSpec& spec, int R, unsigned p, unsigned q);

/// Generators of weighted degree <= d. Throws std::invalid_argument on an
/// inhomogeneous generator.
template <CoefficientField F>
Ideal<F> truncated_ideal(const Ideal<F>& I, const GradingSpec& g, long d);

/// Same ideal built from bases of the graded pieces I_e, e <= d, assembled
/// from monomial multiples of the generators.
template <CoefficientField F>
Ideal<F> truncated_ideal_by_pieces(const Ideal<F>& I, const GradingSpec& g, long d);

/// Least integer r with p*r + q*(size - r) <= d. Throws unless 0 < p < q.
long truncation_minimum(long size, long p, long q, long d);

/// (n - 2p + 1)(n - 2p + 2) / 2.
long pfaffian_height(long p, long n);

}  // namespace detkit
