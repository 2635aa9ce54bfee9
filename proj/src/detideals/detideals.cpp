#include "detkit/detideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "detkit/linalg.hpp"

namespace detkit {

using combinat::MinorIndex;
using combinat::PfaffianIndex;
using combinat::SubsetIx;
using combinat::subsets_of_size;

namespace {

void check_cuts(const std::vector<int>& cuts, const std::vector<int>& mins, int bound,
                const char* what) {
  if (cuts.size() != mins.size()) {
    throw std::invalid_argument(std::string(what) + ": cut and minimum lists differ in length");
  }
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] < 1 || cuts[i] > bound || (i > 0 && cuts[i] < cuts[i - 1])) {
      throw std::invalid_argument(std::string(what) + " cuts must satisfy 1 <= R_1 <= ... <= " +
                                  std::to_string(bound));
    }
  }
}

bool meets(const SubsetIx& s, const std::vector<int>& cuts, const std::vector<int>& mins) {
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (s.count_at_most(cuts[i]) < mins[i]) return false;
  }
  return true;
}

// picks entries of `from` at the positions of `pick` (1-based)
SubsetIx compose(const SubsetIx& from, const SubsetIx& pick) {
  std::vector<int> v;
  for (int i : pick) v.push_back(from[static_cast<std::size_t>(i - 1)]);
  return SubsetIx(std::move(v));
}

std::string block_name(const std::string& symbol, int s, const std::string& sub) {
  return "I_" + std::to_string(s) + "(" + symbol + sub + ")";
}

void monomials_of_degree(const GradingSpec& g, std::size_t var, long remaining,
                         std::vector<unsigned>& exps, std::vector<Monomial>& out) {
  if (var == g.size()) {
    if (remaining == 0) out.push_back(Monomial::from_exponents(exps));
    return;
  }
  const long w = g.weight(var);
  for (long e = 0; e * w <= remaining; ++e) {
    exps[var] = static_cast<unsigned>(e);
    monomials_of_degree(g, var + 1, remaining - e * w, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

void BlockProfile::validate(int m, int n) const {
  check_cuts(row_cuts, row_mins, m, "row");
  check_cuts(col_cuts, col_mins, n, "column");
}

std::vector<MinorIndex> qualifying_minors(int m, int n, int t, const BlockProfile& b) {
  b.validate(m, n);
  std::vector<MinorIndex> out;
  if (t < 1) return out;
  const auto cs = subsets_of_size(n, t);
  for (const auto& rows : subsets_of_size(m, t)) {
    if (!meets(rows, b.row_cuts, b.row_mins)) continue;
    for (const auto& cols : cs) {
      if (meets(cols, b.col_cuts, b.col_mins)) out.emplace_back(rows, cols);
    }
  }
  return out;
}

std::vector<PfaffianIndex> qualifying_pfaffians(int n, int size2t, const std::vector<int>& R,
                                                const std::vector<int>& r) {
  if (size2t % 2 != 0) throw std::invalid_argument("Pfaffian size must be even");
  check_cuts(R, r, n, "row");
  std::vector<PfaffianIndex> out;
  if (size2t < 2) return out;
  for (auto& s : subsets_of_size(n, size2t)) {
    if (meets(s, R, r)) out.emplace_back(std::move(s));
  }
  return out;
}

template <CoefficientField F>
Ideal<F> minors_ideal(MatrixPolynomials<F>& mp, const SubsetIx& rows, const SubsetIx& cols,
                      int s) {
  if (s <= 0) return Ideal<F>::unit(mp.ring());
  std::vector<Polynomial<F>> gens;
  const auto cs = subsets_of_size(static_cast<int>(cols.size()), s);
  for (const auto& rp : subsets_of_size(static_cast<int>(rows.size()), s)) {
    for (const auto& cp : cs) gens.push_back(mp.minor(MinorIndex(compose(rows, rp), compose(cols, cp))));
  }
  return Ideal<F>(mp.ring(), std::move(gens));
}

template <CoefficientField F>
Ideal<F> pfaffians_ideal(MatrixPolynomials<F>& mp, const SubsetIx& index, int s) {
  if (s % 2 != 0) throw std::invalid_argument("Pfaffian size must be even");
  if (s <= 0) return Ideal<F>::unit(mp.ring());
  std::vector<Polynomial<F>> gens;
  for (const auto& p : subsets_of_size(static_cast<int>(index.size()), s)) {
    gens.push_back(mp.pfaffian(PfaffianIndex(compose(index, p))));
  }
  return Ideal<F>(mp.ring(), std::move(gens));
}

template <CoefficientField F>
std::vector<NamedIdeal<F>> build_components_minors(MatrixPolynomials<F>& mp, int t,
                                                   const BlockProfile& b) {
  const int m = mp.spec().rows();
  const int n = mp.spec().cols();
  b.validate(m, n);
  const std::string sym = mp.spec().symbol();
  const auto all_rows = SubsetIx::range(1, m);
  const auto all_cols = SubsetIx::range(1, n);
  std::vector<NamedIdeal<F>> out;
  out.push_back({block_name(sym, t, ""), minors_ideal(mp, all_rows, all_cols, t)});
  for (std::size_t i = 0; i < b.row_cuts.size(); ++i) {
    out.push_back({block_name(sym, b.row_mins[i], "_" + std::to_string(b.row_cuts[i])),
                   minors_ideal(mp, SubsetIx::range(1, b.row_cuts[i]), all_cols, b.row_mins[i])});
  }
  for (std::size_t j = 0; j < b.col_cuts.size(); ++j) {
    out.push_back({block_name(sym, b.col_mins[j], "^" + std::to_string(b.col_cuts[j])),
                   minors_ideal(mp, all_rows, SubsetIx::range(1, b.col_cuts[j]), b.col_mins[j])});
  }
  return out;
}

template <CoefficientField F>
Ideal<F> build_J_minors(MatrixPolynomials<F>& mp, int t, const BlockProfile& b) {
  std::vector<Polynomial<F>> gens;
  for (const auto& ix : qualifying_minors(mp.spec().rows(), mp.spec().cols(), t, b)) {
    gens.push_back(mp.minor(ix));
  }
  return Ideal<F>(mp.ring(), std::move(gens));
}

template <CoefficientField F>
Ideal<F> build_J_symmetric(MatrixPolynomials<F>& mp, int t, const std::vector<int>& R,
                           const std::vector<int>& r, bool doset_only) {
  if (mp.spec().kind() != MatrixKind::symmetric) {
    throw std::invalid_argument("build_J_symmetric needs a symmetric matrix");
  }
  const int n = mp.spec().rows();
  BlockProfile b{R, r, {}, {}};
  std::vector<Polynomial<F>> gens;
  for (const auto& ix : qualifying_minors(n, n, t, b)) {
    if (doset_only && !combinat::in_doset(ix)) continue;
    gens.push_back(mp.minor(ix));
  }
  return Ideal<F>(mp.ring(), std::move(gens));
}

template <CoefficientField F>
std::vector<NamedIdeal<F>> build_components_symmetric(MatrixPolynomials<F>& mp, int t,
                                                      const std::vector<int>& R,
                                                      const std::vector<int>& r) {
  if (mp.spec().kind() != MatrixKind::symmetric) {
    throw std::invalid_argument("build_components_symmetric needs a symmetric matrix");
  }
  return build_components_minors(mp, t, BlockProfile{R, r, {}, {}});
}

template <CoefficientField F>
Ideal<F> build_J_pfaffian(MatrixPolynomials<F>& mp, int size2t, const std::vector<int>& R,
                          const std::vector<int>& r) {
  std::vector<Polynomial<F>> gens;
  for (const auto& ix : qualifying_pfaffians(mp.spec().rows(), size2t, R, r)) {
    gens.push_back(mp.pfaffian(ix));
  }
  return Ideal<F>(mp.ring(), std::move(gens));
}

template <CoefficientField F>
NamedIdeal<F> pfaffian_block_component(MatrixPolynomials<F>& mp, int R, int r) {
  const int n = mp.spec().rows();
  const std::string Rs = std::to_string(R);
  if (r <= 0) return {"P_0(Z(" + Rs + "))", Ideal<F>::unit(mp.ring())};
  const auto head = SubsetIx::range(1, R);
  if (r % 2 == 0) {
    return {"P_" + std::to_string(r) + "(Z(" + Rs + "))", pfaffians_ideal(mp, head, r)};
  }
  // Pfaffians inside Z(R) itself are listed too, so R = n yields P_{r+1}(Z)
  std::set<PfaffianIndex> seen;
  std::vector<Polynomial<F>> gens;
  auto add_from = [&](const SubsetIx& index) {
    for (const auto& p : subsets_of_size(static_cast<int>(index.size()), r + 1)) {
      PfaffianIndex ix(compose(index, p));
      if (seen.insert(ix).second) gens.push_back(mp.pfaffian(ix));
    }
  };
  add_from(head);
  for (int k = R + 1; k <= n; ++k) add_from(head.concat(SubsetIx{k}));
  const std::string size = std::to_string(r + 1);
  std::string name = R < n ? "sum_{k=" + std::to_string(R + 1) + ".." + std::to_string(n) + "} P_" +
                                 size + "(Z(" + Rs + " u k))"
                           : "P_" + size + "(Z(" + Rs + "))";
  return {std::move(name), Ideal<F>(mp.ring(), std::move(gens))};
}

template <CoefficientField F>
std::vector<NamedIdeal<F>> build_components_pfaffian(MatrixPolynomials<F>& mp, int size2t,
                                                     const std::vector<int>& R,
                                                     const std::vector<int>& r) {
  if (size2t % 2 != 0) throw std::invalid_argument("Pfaffian size must be even");
  const int n = mp.spec().rows();
  check_cuts(R, r, n, "row");
  std::vector<NamedIdeal<F>> out;
  out.push_back({"P_" + std::to_string(size2t) + "(Z)",
                 pfaffians_ideal(mp, SubsetIx::range(1, n), size2t)});
  for (std::size_t i = 0; i < R.size(); ++i) {
    auto c = pfaffian_block_component(mp, R[i], r[i]);
    c.name = "J_" + std::to_string(i + 1) + "=" + c.name;
    out.push_back(std::move(c));
  }
  return out;
}

GradingSpec column_block_grading(const MatrixSpec& spec, int a, unsigned p, unsigned q) {
  if (spec.kind() != MatrixKind::generic) {
    throw std::invalid_argument("column grading needs a generic matrix");
  }
  std::vector<unsigned> w(spec.variables().size());
  for (int i = 1; i <= spec.rows(); ++i) {
    for (int j = 1; j <= spec.cols(); ++j) w[spec.variable_index(i, j)] = j <= a ? p : q;
  }
  return GradingSpec(std::move(w));
}

GradingSpec skew_block_grading(const MatrixSpec& spec, int R, unsigned p, unsigned q) {
  if (spec.kind() != MatrixKind::skew) {
    throw std::invalid_argument("skew grading needs a skew-symmetric matrix");
  }
  std::vector<unsigned> w(spec.variables().size());
  for (int i = 1; i <= spec.rows(); ++i) {
    for (int j = i + 1; j <= spec.cols(); ++j) {
      w[spec.variable_index(i, j)] = (i <= R ? p : q) + (j <= R ? p : q);
    }
  }
  return GradingSpec(std::move(w));
}

template <CoefficientField F>
Ideal<F> truncated_ideal(const Ideal<F>& I, const GradingSpec& g, long d) {
  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.generators()) {
    const auto deg = weighted_degree(g, f);
    if (!deg.is_homogeneous()) {
      throw std::invalid_argument("truncated_ideal: inhomogeneous generator " + f.to_string());
    }
    if (deg.value() <= d) gens.push_back(f);
  }
  return Ideal<F>(I.ring(), std::move(gens));
}

template <CoefficientField F>
Ideal<F> truncated_ideal_by_pieces(const Ideal<F>& I, const GradingSpec& g, long d) {
  std::vector<std::pair<long, const Polynomial<F>*>> graded;
  for (const auto& f : I.generators()) {
    const auto deg = weighted_degree(g, f);
    if (!deg.is_homogeneous()) {
      throw std::invalid_argument("truncated_ideal: inhomogeneous generator " + f.to_string());
    }
    graded.emplace_back(deg.value(), &f);
  }
  std::vector<Polynomial<F>> gens;
  std::vector<unsigned> exps(g.size(), 0);
  for (long e = 0; e <= d; ++e) {
    EchelonSpan<F> piece(I.ring());
    for (const auto& [deg, f] : graded) {
      if (deg > e) continue;
      std::vector<Monomial> mults;
      monomials_of_degree(g, 0, e - deg, exps, mults);
      for (const auto& u : mults) {
        check_deadline();
        piece.insert(f->mul_term(u, I.ring()->field().one()));
      }
    }
    gens.insert(gens.end(), piece.rows().begin(), piece.rows().end());
  }
  return Ideal<F>(I.ring(), std::move(gens));
}

long truncation_minimum(long size, long p, long q, long d) {
  if (p <= 0 || p >= q) throw std::invalid_argument("truncation_minimum needs 0 < p < q");
  const long num = size * q - d;
  const long den = q - p;
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

long pfaffian_height(long p, long n) { return (n - 2 * p + 1) * (n - 2 * p + 2) / 2; }

#define DETKIT_INSTANTIATE_DETIDEALS(F)                                                        \
  template Ideal<F> minors_ideal<F>(MatrixPolynomials<F>&, const SubsetIx&, const SubsetIx&,   \
                                    int);                                                      \
  template Ideal<F> pfaffians_ideal<F>(MatrixPolynomials<F>&, const SubsetIx&, int);           \
  template std::vector<NamedIdeal<F>> build_components_minors<F>(MatrixPolynomials<F>&, int,   \
                                                                 const BlockProfile&);         \
  template Ideal<F> build_J_minors<F>(MatrixPolynomials<F>&, int, const BlockProfile&);        \
  template Ideal<F> build_J_symmetric<F>(MatrixPolynomials<F>&, int, const std::vector<int>&,  \
                                         const std::vector<int>&, bool);                       \
  template std::vector<NamedIdeal<F>> build_components_symmetric<F>(                           \
      MatrixPolynomials<F>&, int, const std::vector<int>&, const std::vector<int>&);           \
  template Ideal<F> build_J_pfaffian<F>(MatrixPolynomials<F>&, int, const std::vector<int>&,   \
                                        const std::vector<int>&);                              \
  template NamedIdeal<F> pfaffian_block_component<F>(MatrixPolynomials<F>&, int, int);         \
  template std::vector<NamedIdeal<F>> build_components_pfaffian<F>(                            \
      MatrixPolynomials<F>&, int, const std::vector<int>&, const std::vector<int>&);           \
  template Ideal<F> truncated_ideal<F>(const Ideal<F>&, const GradingSpec&, long);             \
  template Ideal<F> truncated_ideal_by_pieces<F>(const Ideal<F>&, const GradingSpec&, long);

DETKIT_INSTANTIATE_DETIDEALS(PrimeField)
DETKIT_INSTANTIATE_DETIDEALS(RationalField)

#undef DETKIT_INSTANTIATE_DETIDEALS

}  // namespace detkit
