#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "detkit/detideals.hpp"
#include "detkit/field.hpp"
#include "detkit/groebner.hpp"
#include "detkit/harness.hpp"
#include "detkit/linalg.hpp"

namespace detkit::harness {

using combinat::MinorIndex;
using combinat::PfaffianIndex;
using combinat::SubsetIx;

namespace {

template <class Fn>
Report with_field(const CaseSpec& cs, Fn&& fn) {
  cs.validate();
  if (cs.field == "qq") return fn(RationalField{});
  return fn(PrimeField(static_cast<std::uint32_t>(std::stoul(cs.field.substr(3)))));
}

Report base_report(const CaseSpec& cs) {
  Report rep;
  rep.case_id = cs.id;
  rep.params = cs.params();
  rep.field = cs.field;
  rep.order = cs.order;
  return rep;
}

MatrixSpec spec_of(const CaseSpec& cs) {
  switch (cs.kind) {
    case CaseKind::minors:
      return MatrixSpec::generic(cs.m, cs.n);
    case CaseKind::symmetric:
      return MatrixSpec::symmetric(cs.n);
    case CaseKind::pfaffian:
      return MatrixSpec::skew(cs.n);
  }
  throw std::logic_error("unreachable");
}

BlockProfile profile_of(const CaseSpec& cs) { return BlockProfile{cs.R, cs.r, cs.C, cs.c}; }

template <CoefficientField F>
Ideal<F> intersect(const RingPtr<F>& ring, const std::vector<const Ideal<F>*>& parts) {
  std::vector<Ideal<F>> kept;
  for (const auto* I : parts) {
    if (I->is_zero()) return Ideal<F>::zero(ring);
    if (!I->is_unit()) kept.push_back(*I);
  }
  if (kept.empty()) return Ideal<F>::unit(ring);
  return ideal_intersect_all<F>(kept);
}

template <CoefficientField F>
Ideal<F> intersect_named(const RingPtr<F>& ring, const std::vector<NamedIdeal<F>>& comps,
                         std::optional<std::size_t> skip = std::nullopt) {
  std::vector<const Ideal<F>*> parts;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (skip && *skip == k) continue;
    parts.push_back(&comps[k].ideal);
  }
  return intersect(ring, parts);
}

template <CoefficientField F>
Ideal<F> drop_generator(const Ideal<F>& I, std::optional<int> which) {
  if (!which || I.generators().empty()) return I;
  auto gens = I.generators();
  gens.erase(gens.begin() + (*which % static_cast<long>(gens.size())));
  return Ideal<F>(I.ring(), std::move(gens));
}

template <CoefficientField F>
struct Decomposition {
  Ideal<F> J;
  std::vector<NamedIdeal<F>> components;
};

template <CoefficientField F>
Decomposition<F> build_decomposition(const CaseSpec& cs, MatrixPolynomials<F>& mp) {
  switch (cs.kind) {
    case CaseKind::minors:
      return {build_J_minors(mp, cs.t, profile_of(cs)),
              build_components_minors(mp, cs.t, profile_of(cs))};
    case CaseKind::symmetric:
      return {build_J_symmetric(mp, cs.t, cs.R, cs.r),
              build_components_symmetric(mp, cs.t, cs.R, cs.r)};
    case CaseKind::pfaffian:
      return {build_J_pfaffian(mp, cs.t, cs.R, cs.r),
              build_components_pfaffian(mp, cs.t, cs.R, cs.r)};
  }
  throw std::logic_error("unreachable");
}

template <CoefficientField F>
std::vector<std::pair<std::string, Polynomial<F>>> labelled_generators(const CaseSpec& cs,
                                                                      MatrixPolynomials<F>& mp) {
  std::vector<std::pair<std::string, Polynomial<F>>> out;
  switch (cs.kind) {
    case CaseKind::minors:
      for (const auto& ix : qualifying_minors(cs.m, cs.n, cs.t, profile_of(cs))) {
        out.emplace_back(ix.to_string(), mp.minor(ix));
      }
      break;
    case CaseKind::symmetric:
      for (const auto& ix : qualifying_minors(cs.n, cs.n, cs.t, BlockProfile{cs.R, cs.r, {}, {}})) {
        out.emplace_back(ix.to_string(), mp.minor(ix));
      }
      break;
    case CaseKind::pfaffian:
      for (const auto& ix : qualifying_pfaffians(cs.n, cs.t, cs.R, cs.r)) {
        out.emplace_back(ix.to_string(), mp.pfaffian(ix));
      }
      break;
  }
  return out;
}

// Locates the failing inclusion of an unequal decomposition.
template <CoefficientField F>
void explain_inequality(Report& rep, const CaseSpec& cs, MatrixPolynomials<F>& mp,
                        const Ideal<F>& J, const std::vector<NamedIdeal<F>>& comps,
                        const Ideal<F>& rhs) {
  const auto gens = labelled_generators(cs, mp);
  Json outside = Json::array();
  std::string first;
  for (const auto& c : comps) {
    for (const auto& [label, g] : gens) {
      if (ideal_member(g, c.ideal)) continue;
      outside.push_back({{"component", c.name}, {"generator", label}});
      if (first.empty()) first = "generator " + label + " of J lies outside " + c.name;
      break;
    }
  }
  const bool rhs_in_J = ideal_contains(J, rhs);
  rep.derived["lhs_outside"] = outside;
  rep.derived["rhs_contained_in_lhs"] = rhs_in_J;

  // a qualifying minor larger than t lies in every component; look for one J misses
  std::string larger;
  if (!rhs_in_J && cs.kind != CaseKind::pfaffian) {
    const BlockProfile b = cs.kind == CaseKind::minors ? profile_of(cs)
                                                       : BlockProfile{cs.R, cs.r, {}, {}};
    for (int s = cs.t + 1; s <= std::min(cs.m, cs.n) && larger.empty(); ++s) {
      for (const auto& ix : qualifying_minors(cs.m, cs.n, s, b)) {
        const auto g = mp.minor(ix);
        if (ideal_member(g, rhs) && !ideal_member(g, J)) {
          larger = ix.to_string();
          break;
        }
      }
    }
    if (!larger.empty()) rep.derived["rhs_outside"] = larger;
  }

  if (!first.empty()) {
    rep.reason = first;
  } else if (!larger.empty()) {
    rep.reason = "qualifying minor " + larger + " lies in the intersection but not in J";
  } else if (!rhs_in_J) {
    rep.reason = "the intersection is not contained in J";
  }
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

template <CoefficientField F>
Report decomposition_in(const CaseSpec& cs, F field) {
  Report rep = base_report(cs);
  const auto spec = spec_of(cs);
  const auto ring = matrix_ring(spec, field, cs.order);
  MatrixPolynomials<F> mp(spec, ring);
  auto dec = build_decomposition(cs, mp);
  const Ideal<F> J = drop_generator(dec.J, cs.drop_generator);
  const Ideal<F> rhs = intersect_named(ring, dec.components);
  rep.lhs_gens = J.generators().size();
  rep.rhs_gb_size = rhs.groebner_basis().size();
  for (const auto& c : dec.components) rep.components.push_back({c.name, std::nullopt});
  rep.verdict = ideal_equal(J, rhs) ? Verdict::equal : Verdict::not_equal;
  if (rep.verdict == Verdict::not_equal) explain_inequality(rep, cs, mp, J, dec.components, rhs);
  if (cs.kind == CaseKind::symmetric) {
    const auto Jd = build_J_symmetric(mp, cs.t, cs.R, cs.r, true);
    const bool same = ideal_equal(dec.J, Jd);
    rep.checks.push_back({"doset_generators_equal", same,
                          std::to_string(Jd.generators().size()) + " doset minors vs " +
                              std::to_string(dec.J.generators().size()) + " minors"});
  }
  return rep;
}

template <CoefficientField F>
Report truncation_in(const CaseSpec& cs, F field) {
  Report rep = base_report(cs);
  const auto spec = spec_of(cs);
  const auto ring = matrix_ring(spec, field, cs.order);
  MatrixPolynomials<F> mp(spec, ring);
  const long p = *cs.p, q = *cs.q, d = *cs.d;
  const long r = truncation_minimum(cs.t, p, q, d);
  rep.derived["r"] = r;

  std::optional<Ideal<F>> I;
  std::optional<NamedIdeal<F>> block;
  std::optional<GradingSpec> grading;
  if (cs.kind == CaseKind::minors) {
    const int a = cs.C.front();
    rep.derived["a"] = a;
    I = minors_ideal(mp, SubsetIx::range(1, cs.m), SubsetIx::range(1, cs.n), cs.t);
    grading = column_block_grading(spec, a, static_cast<unsigned>(p), static_cast<unsigned>(q));
    block = NamedIdeal<F>{"I_" + std::to_string(r) + "(A)",
                          minors_ideal(mp, SubsetIx::range(1, cs.m), SubsetIx::range(1, a),
                                       static_cast<int>(std::clamp<long>(r, -1, cs.m + 1)))};
    rep.components.push_back({"I_" + std::to_string(cs.t) + "(X)", std::nullopt});
  } else {
    const int R = cs.R.front();
    I = pfaffians_ideal(mp, SubsetIx::range(1, cs.n), cs.t);
    grading = skew_block_grading(spec, R, static_cast<unsigned>(p), static_cast<unsigned>(q));
    block = pfaffian_block_component(mp, R, static_cast<int>(std::clamp<long>(r, -1, cs.n + 1)));
    rep.components.push_back({"P_" + std::to_string(cs.t) + "(Z)", std::nullopt});
  }
  rep.components.push_back({block->name, std::nullopt});

  const auto trunc = drop_generator(truncated_ideal(*I, *grading, d), cs.drop_generator);
  const auto pieces = truncated_ideal_by_pieces(*I, *grading, d);
  const auto rhs = intersect<F>(ring, {&*I, &block->ideal});
  rep.lhs_gens = trunc.generators().size();
  rep.rhs_gb_size = rhs.groebner_basis().size();
  rep.checks.push_back({"truncation_constructions_agree", ideal_equal(trunc, pieces),
                        std::to_string(trunc.generators().size()) + " generators vs " +
                            std::to_string(pieces.generators().size()) + " graded basis elements"});
  rep.verdict = ideal_equal(trunc, rhs) ? Verdict::equal : Verdict::not_equal;
  return rep;
}

template <CoefficientField F>
Report heights_in(const CaseSpec& cs, F field) {
  Report rep = base_report(cs);
  const auto spec = spec_of(cs);
  const auto ring = matrix_ring(spec, field, cs.order);
  MatrixPolynomials<F> mp(spec, ring);
  const auto P = pfaffians_ideal(mp, SubsetIx::range(1, cs.n), cs.t);
  rep.components.push_back({"P_" + std::to_string(cs.t) + "(Z)", std::nullopt});
  rep.lhs_gens = P.generators().size();
  rep.rhs_gb_size = P.groebner_basis().size();
  const long nvars = static_cast<long>(ring->size());
  rep.expected_height = pfaffian_height(cs.t / 2, cs.n);
  rep.computed_height = ideal_height(P);
  rep.derived["dimension"] = krull_dimension(P);
  rep.derived["variables"] = nvars;
  rep.verdict = *rep.expected_height == *rep.computed_height ? Verdict::equal : Verdict::not_equal;
  return rep;
}

// ---- irredundancy --------------------------------------------------------

struct Witness {
  std::string label;
  std::optional<MinorIndex> minor;
  std::optional<PfaffianIndex> pfaffian;  // neither set: the constant 1
};

std::optional<SubsetIx> witness_rows(int cut, int min, int size, int bound) {
  const int last = size + cut - min + 1;
  if (min < 1 || last > bound) return std::nullopt;
  return SubsetIx::range(1, min - 1).concat(SubsetIx::range(cut + 1, last));
}

// component order: size, rows, columns
std::vector<std::optional<Witness>> witnesses_for(const CaseSpec& cs) {
  std::vector<std::optional<Witness>> out;
  if (cs.kind == CaseKind::pfaffian) {
    if (cs.t == 2) {
      out.push_back(Witness{"1", std::nullopt, std::nullopt});
    } else {
      PfaffianIndex ix(SubsetIx::range(1, cs.t - 2));
      out.push_back(Witness{ix.to_string(), std::nullopt, ix});
    }
    for (std::size_t i = 0; i < cs.R.size(); ++i) {
      auto rows = witness_rows(cs.R[i], cs.r[i], cs.t, cs.n);
      if (!rows) {
        out.emplace_back();
        continue;
      }
      PfaffianIndex ix(*rows);
      out.push_back(Witness{ix.to_string(), std::nullopt, ix});
    }
    return out;
  }
  if (cs.t == 1) {
    out.push_back(Witness{"1", std::nullopt, std::nullopt});
  } else {
    MinorIndex ix(SubsetIx::range(1, cs.t - 1), SubsetIx::range(1, cs.t - 1));
    out.push_back(Witness{ix.to_string(), ix, std::nullopt});
  }
  const auto lead = SubsetIx::range(1, cs.t);
  for (std::size_t i = 0; i < cs.R.size(); ++i) {
    auto rows = witness_rows(cs.R[i], cs.r[i], cs.t, cs.m);
    if (!rows) {
      out.emplace_back();
      continue;
    }
    // by symmetry the columns 1..t would count as rows of Y_R; take the principal minor
    MinorIndex ix(*rows, cs.kind == CaseKind::symmetric ? *rows : lead);
    out.push_back(Witness{ix.to_string(), ix, std::nullopt});
  }
  for (std::size_t j = 0; j < cs.C.size(); ++j) {
    auto cols = witness_rows(cs.C[j], cs.c[j], cs.t, cs.n);
    if (!cols) {
      out.emplace_back();
      continue;
    }
    MinorIndex ix(lead, *cols);
    out.push_back(Witness{ix.to_string(), ix, std::nullopt});
  }
  return out;
}

template <CoefficientField F>
Polynomial<F> witness_poly(const Witness& w, MatrixPolynomials<F>& mp) {
  if (w.minor) return mp.minor(*w.minor);
  if (w.pfaffian) return mp.pfaffian(*w.pfaffian);
  return Polynomial<F>::constant(mp.ring(), mp.ring()->field().one());
}

template <CoefficientField F>
Report irredundancy_in(const CaseSpec& cs, F field) {
  Report rep = base_report(cs);
  const auto conditions = check_irredundancy_hypotheses(cs);
  std::vector<std::string> failed;
  for (const auto& c : conditions) {
    rep.derived["hypotheses"][c.name] = c.holds;
    if (!c.holds) failed.push_back(c.name);
  }
  const bool hypotheses_hold = failed.empty();
  if (!hypotheses_hold && !cs.force) {
    rep.verdict = Verdict::skipped;
    rep.reason = "hypothesis fails: " + join_names(failed);
    return rep;
  }

  const auto spec = spec_of(cs);
  const auto ring = matrix_ring(spec, field, cs.order);
  MatrixPolynomials<F> mp(spec, ring);
  auto dec = build_decomposition(cs, mp);
  const Ideal<F> J = drop_generator(dec.J, cs.drop_generator);
  const auto& comps = dec.components;
  const Ideal<F> full = intersect_named(ring, comps);
  rep.lhs_gens = J.generators().size();
  rep.rhs_gb_size = full.groebner_basis().size();
  rep.verdict = ideal_equal(J, full) ? Verdict::equal : Verdict::not_equal;
  if (rep.verdict == Verdict::not_equal) explain_inequality(rep, cs, mp, J, comps, full);

  std::vector<bool> drop_irredundant;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto others = intersect_named(ring, comps, k);
    drop_irredundant.push_back(!ideal_equal(others, full));
    rep.components.push_back({comps[k].name, drop_irredundant.back()});
  }

  if (hypotheses_hold) {
    const auto ws = witnesses_for(cs);
    bool all_drop = true, all_witness = true, agree = true;
    std::vector<std::string> disagreements;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      bool separates = false;
      WitnessResult wr;
      wr.certifies = comps[k].name;
      if (ws[k]) {
        wr.element = ws[k]->label;
        const auto w = witness_poly(*ws[k], mp);
        separates = true;
        std::map<std::string, int> seen;
        for (std::size_t j = 0; j < comps.size(); ++j) {
          const bool in = ideal_member(w, comps[j].ideal);
          std::string key = comps[j].name;
          if (seen[key]++ > 0) key += "#" + std::to_string(j);
          wr.memberships.emplace_back(key, in);
          if (in == (j == k)) separates = false;
        }
      } else {
        wr.element = "none";
      }
      rep.witnesses.push_back(std::move(wr));
      all_drop = all_drop && drop_irredundant[k];
      all_witness = all_witness && separates;
      if (separates != drop_irredundant[k]) {
        agree = false;
        disagreements.push_back(comps[k].name);
      }
    }
    rep.checks.push_back({"drop_test_irredundant", all_drop,
                          std::to_string(comps.size()) + " components"});
    rep.checks.push_back({"witness_test_irredundant", all_witness,
                          std::to_string(comps.size()) + " witnesses"});
    rep.checks.push_back({"tests_agree", agree,
                          agree ? "" : "disagree on " + join_names(disagreements)});
  } else {
    const auto predicted = predict_redundancy(cs);
    bool observed = true;
    std::vector<std::string> mechanisms;
    for (std::size_t k = 0; k < comps.size() && k < predicted.size(); ++k) {
      if (predicted[k].empty()) continue;
      rep.derived["predicted_redundant"][comps[k].name] = predicted[k];
      mechanisms.push_back(comps[k].name + ": " + predicted[k]);
      if (drop_irredundant[k]) observed = false;
    }
    if (!mechanisms.empty()) {
      rep.checks.push_back({"predicted_redundancy_observed", observed, join_names(mechanisms)});
    }
  }
  return rep;
}

// ---- standard monomials ----------------------------------------------------

template <CoefficientField F>
Report asl_in(const CaseSpec& cs, F field) {
  Report rep = base_report(cs);
  const auto spec = spec_of(cs);
  const auto ring = matrix_ring(spec, field, cs.order);
  MatrixPolynomials<F> mp(spec, ring);
  const auto poset = combinat::MinorPoset::generic(cs.m, cs.n);
  const auto& elems = poset.elements();
  const long D = *cs.d;

  std::vector<Polynomial<F>> value;
  for (const auto& e : elems) value.push_back(mp.minor(e));

  // standard monomials grouped by degree, each as element positions
  std::map<long, std::vector<std::vector<std::size_t>>> chains;
  std::vector<std::size_t> cur;
  auto extend = [&](auto&& self, long deg) -> void {
    chains[deg].push_back(cur);
    for (std::size_t k = 0; k < elems.size(); ++k) {
      const long nd = deg + static_cast<long>(elems[k].size());
      if (nd > D) continue;
      if (!cur.empty() && !poset.leq(elems[cur.back()], elems[k])) continue;
      cur.push_back(k);
      self(self, nd);
      cur.pop_back();
    }
  };
  extend(extend, 0);

  auto product = [&](const std::vector<std::size_t>& chain) {
    auto p = Polynomial<F>::constant(ring, ring->field().one());
    for (auto k : chain) p = p * value[k];
    return p;
  };

  std::map<long, std::vector<Polynomial<F>>> basis;
  std::size_t count = 0, rank = 0;
  for (const auto& [deg, list] : chains) {
    EchelonSpan<F> span(ring);
    for (const auto& chain : list) {
      check_deadline();
      auto p = product(chain);
      span.insert(p);
      basis[deg].push_back(std::move(p));
    }
    count += list.size();
    rank += span.rank();
  }
  const bool independent = count == rank;
  rep.lhs_gens = count;
  rep.derived["standard_monomials"] = count;
  rep.derived["rank"] = rank;
  rep.checks.push_back({"standard_monomials_independent", independent,
                        std::to_string(count) + " standard monomials, rank " +
                            std::to_string(rank)});

  std::size_t pairs = 0, good = 0;
  if (independent) {
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = a + 1; b < elems.size(); ++b) {
        const long deg = static_cast<long>(elems[a].size() + elems[b].size());
        if (deg > D || poset.leq(elems[a], elems[b]) || poset.leq(elems[b], elems[a])) continue;
        check_deadline();
        ++pairs;
        const auto& B = basis[deg];
        const auto coeffs = express_in_span<F>(B, value[a] * value[b]);
        bool factor_ok = coeffs.has_value();
        if (coeffs) {
          const auto& list = chains[deg];
          for (std::size_t s = 0; s < list.size(); ++s) {
            if (field.is_zero((*coeffs)[s])) continue;
            const bool has = std::any_of(list[s].begin(), list[s].end(), [&](std::size_t z) {
              return poset.leq(elems[z], elems[a]) && poset.leq(elems[z], elems[b]);
            });
            if (!has) factor_ok = false;
          }
        }
        if (factor_ok) ++good;
        rep.witnesses.push_back({elems[a].to_string() + "*" + elems[b].to_string(),
                                 "straightening",
                                 {{"in_span", coeffs.has_value()}, {"factor_below_both", factor_ok}}});
      }
    }
  }
  rep.checks.push_back({"straightening_factor_below_both", independent && good == pairs,
                        std::to_string(good) + " of " + std::to_string(pairs) +
                            " incomparable pairs"});
  rep.verdict = rep.failed() ? Verdict::not_equal : Verdict::equal;
  return rep;
}

}  // namespace

// ---- hypotheses --------------------------------------------------------------

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) return false;
  }
  return true;
}

bool all_below(const std::vector<int>& v, int bound) {
  return std::all_of(v.begin(), v.end(), [&](int x) { return x < bound; });
}

bool bounded_by_cuts(const std::vector<int>& cuts, const std::vector<int>& mins) {
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (mins[i] < 0 || mins[i] > cuts[i]) return false;
  }
  return true;
}

bool gaps_increasing(const std::vector<int>& cuts, const std::vector<int>& mins, int bound) {
  std::vector<int> gaps;
  for (std::size_t i = 0; i < cuts.size(); ++i) gaps.push_back(cuts[i] - mins[i]);
  return strictly_increasing(gaps) && all_below(gaps, bound);
}

bool all_positive(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 1; });
}

}  // namespace

std::vector<Condition> check_irredundancy_hypotheses(const CaseSpec& cs) {
  const int rows = cs.kind == CaseKind::minors ? cs.m : cs.n;
  std::vector<Condition> out;
  out.push_back({"1", strictly_increasing(cs.R) && strictly_increasing(cs.C)});
  out.push_back({"2", strictly_increasing(cs.r) && all_below(cs.r, cs.t) &&
                          strictly_increasing(cs.c) && all_below(cs.c, cs.t)});
  out.push_back({"3", bounded_by_cuts(cs.R, cs.r) && bounded_by_cuts(cs.C, cs.c)});
  out.push_back({"4", gaps_increasing(cs.R, cs.r, rows - cs.t) &&
                          gaps_increasing(cs.C, cs.c, cs.n - cs.t)});
  out.push_back({"minimums_positive", all_positive(cs.r) && all_positive(cs.c)});
  if (cs.kind == CaseKind::pfaffian) {
    out.push_back({"largest_minimum_below_size_minus_one", all_below(cs.r, cs.t - 1)});
  }
  return out;
}

std::vector<std::string> predict_redundancy(const CaseSpec& cs) {
  const bool pf = cs.kind == CaseKind::pfaffian;
  const int rows = cs.kind == CaseKind::minors ? cs.m : cs.n;
  std::vector<std::string> out(1 + cs.R.size() + cs.C.size());

  auto block_zero = [](int cut, int min) { return min > cut; };
  bool any_zero = false;
  for (std::size_t i = 0; i < cs.R.size(); ++i) any_zero = any_zero || block_zero(cs.R[i], cs.r[i]);
  for (std::size_t j = 0; j < cs.C.size(); ++j) any_zero = any_zero || block_zero(cs.C[j], cs.c[j]);

  // size component: contains a block component whose minimum reaches the size
  const int reach = pf ? cs.t - 1 : cs.t;
  for (std::size_t i = 0; i < cs.R.size(); ++i) {
    if (cs.r[i] >= reach) out[0] = "block " + std::to_string(i + 1) + " minimum reaches the size";
  }
  for (std::size_t j = 0; j < cs.C.size(); ++j) {
    if (cs.c[j] >= reach) out[0] = "column block " + std::to_string(j + 1) + " minimum reaches the size";
  }

  auto blocks = [&](const std::vector<int>& cuts, const std::vector<int>& mins, int bound,
                    std::size_t offset) {
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      std::string& why = out[offset + i];
      if (mins[i] <= 0) {
        why = "minimum <= 0 gives the unit ideal";
        continue;
      }
      if (cs.t - (bound - cuts[i]) >= mins[i]) {
        why = "every element of the size has enough entries in the block";
        continue;
      }
      for (std::size_t j = 0; j < cuts.size(); ++j) {
        if (j == i) continue;
        if (mins[i] <= mins[j] - std::max(0, cuts[j] - cuts[i])) {
          why = "implied by block " + std::to_string(j + 1);
          break;
        }
      }
    }
  };
  blocks(cs.R, cs.r, rows, 1);
  blocks(cs.C, cs.c, cs.n, 1 + cs.R.size());

  if (any_zero) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      const bool self_zero =
          k >= 1 && (k <= cs.R.size() ? block_zero(cs.R[k - 1], cs.r[k - 1])
                                      : block_zero(cs.C[k - 1 - cs.R.size()],
                                                   cs.c[k - 1 - cs.R.size()]));
      if (!self_zero && out[k].empty()) out[k] = "another component is zero";
    }
  }
  return out;
}

Report verify_decomposition(const CaseSpec& cs) {
  return with_field(cs, [&](auto f) { return decomposition_in(cs, f); });
}

Report verify_truncation(const CaseSpec& cs) {
  return with_field(cs, [&](auto f) { return truncation_in(cs, f); });
}

Report verify_irredundancy(const CaseSpec& cs) {
  return with_field(cs, [&](auto f) { return irredundancy_in(cs, f); });
}

Report verify_heights(const CaseSpec& cs) {
  return with_field(cs, [&](auto f) { return heights_in(cs, f); });
}

Report verify_standard_monomials(const CaseSpec& cs) {
  return with_field(cs, [&](auto f) { return asl_in(cs, f); });
}

Report run_case(const CaseSpec& cs) {
  cs.validate();
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    ScopedDeadline deadline(start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                        std::chrono::duration<double>(cs.budget_sec)));
    switch (cs.check) {
      case CheckKind::decomposition:
        rep = verify_decomposition(cs);
        break;
      case CheckKind::truncation:
        rep = verify_truncation(cs);
        break;
      case CheckKind::irredundancy:
        rep = verify_irredundancy(cs);
        break;
      case CheckKind::heights:
        rep = verify_heights(cs);
        break;
      case CheckKind::asl:
        rep = verify_standard_monomials(cs);
        break;
    }
  } catch (const BudgetExceeded&) {
    rep = base_report(cs);
    rep.verdict = Verdict::skipped;
    std::ostringstream os;
    os << "budget of " << cs.budget_sec << " s exceeded";
    rep.reason = os.str();
  } catch (const std::exception& e) {
    rep = base_report(cs);
    rep.verdict = Verdict::skipped;
    rep.reason = e.what();
    rep.checks.push_back({"completed", false, e.what()});
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

}  // namespace detkit::harness
