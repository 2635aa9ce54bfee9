#include "detkit/groebner.hpp"

#include <algorithm>
#include <set>

namespace detkit {

namespace {

thread_local std::optional<std::chrono::steady_clock::time_point> t_deadline;

}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::steady_clock::time_point deadline)
    : previous_(t_deadline) {
  if (!t_deadline || deadline < *t_deadline) t_deadline = deadline;
}

ScopedDeadline::~ScopedDeadline() { t_deadline = previous_; }

void check_deadline() {
  if (t_deadline && std::chrono::steady_clock::now() > *t_deadline) throw BudgetExceeded();
}

namespace {

template <CoefficientField F>
using Terms = std::vector<Term<F>>;

/// Reducer view: leading monomial and full term list of one basis element.
template <CoefficientField F>
struct Reducer {
  const Monomial* lm;
  const Terms<F>* terms;
};

template <CoefficientField F>
const Reducer<F>* find_divisor(const std::vector<Reducer<F>>& reducers, const Monomial& m) {
  for (const auto& r : reducers) {
    if (r.lm->divides(m)) return &r;
  }
  return nullptr;
}

/// Fully reduces `p` against `reducers`; polls the deadline every few steps.
template <CoefficientField F>
Terms<F> reduce_terms(const F& k, const MonomialOrder& order, Terms<F> p,
                      const std::vector<Reducer<F>>& reducers) {
  Terms<F> rem;
  std::size_t pos = 0;
  std::size_t steps = 0;
  while (pos < p.size()) {
    const Term<F>& lt = p[pos];
    const Reducer<F>* r = find_divisor(reducers, lt.monomial);
    if (r == nullptr) {
      rem.push_back(std::move(p[pos]));
      ++pos;
      continue;
    }
    if (++steps % 256 == 0) check_deadline();
    const Term<F>& rl = r->terms->front();
    const auto c = k.neg(k.is_one(rl.coeff) ? lt.coeff : k.mul(lt.coeff, k.inv(rl.coeff)));
    const Monomial u = lt.monomial.quotient(rl.monomial);
    p = detail::add_scaled<F>(k, order, std::span<const Term<F>>(p).subspan(pos + 1), c, u,
                              std::span<const Term<F>>(*r->terms).subspan(1));
    pos = 0;
  }
  return rem;
}

template <CoefficientField F>
Terms<F> s_poly_terms(const F& k, const MonomialOrder& order, const Terms<F>& f,
                      const Terms<F>& g) {
  const Monomial l = Monomial::lcm(f.front().monomial, g.front().monomial);
  const Monomial uf = l.quotient(f.front().monomial);
  const Monomial ug = l.quotient(g.front().monomial);
  // lc(g) * uf * f - lc(f) * ug * g, leading terms cancel
  Terms<F> scaled_f;
  scaled_f.reserve(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    scaled_f.push_back({uf * f[i].monomial, k.mul(g.front().coeff, f[i].coeff)});
  }
  return detail::add_scaled<F>(k, order, scaled_f, k.neg(f.front().coeff), ug,
                               std::span<const Term<F>>(g).subspan(1));
}

template <CoefficientField F>
void make_monic(const F& k, Terms<F>& t) {
  if (t.empty() || k.is_one(t.front().coeff)) return;
  const auto inv = k.inv(t.front().coeff);
  for (auto& term : t) term.coeff = k.mul(inv, term.coeff);
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
  std::size_t seq;
};

struct PairLess {
  const MonomialOrder* order;
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (const auto c = order->compare(a.lcm, b.lcm); c != 0) return c < 0;
    return a.seq < b.seq;
  }
};

/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// product and chain criteria, selecting pairs by (sugar, lcm, creation index).
template <CoefficientField F>
class BuchbergerEngine {
 public:
  BuchbergerEngine(RingPtr<F> ring, GroebnerStats* stats)
      : ring_(std::move(ring)),
        k_(ring_->field()),
        order_(ring_->order()),
        pairs_(PairLess{&order_}),
        stats_(stats) {}

  void add_generator(const Polynomial<F>& g) {
    if (unit_) return;
    Terms<F> h = reduce_terms(k_, order_, g.terms(), active_reducers());
    if (h.empty()) return;
    make_monic(k_, h);
    insert(std::move(h), static_cast<unsigned>(g.total_degree()));
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      check_deadline();
      const CriticalPair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Terms<F> s = s_poly_terms(k_, order_, polys_[p.i], polys_[p.j]);
      Terms<F> h = reduce_terms(k_, order_, std::move(s), active_reducers());
      if (stats_) ++stats_->pairs_reduced;
      if (h.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      make_monic(k_, h);
      insert(std::move(h), p.sugar);
    }
  }

  std::vector<Polynomial<F>> reduced_basis() const {
    std::vector<Polynomial<F>> out;
    if (unit_) {
      out.push_back(Polynomial<F>::constant(ring_, k_.one()));
      return out;
    }
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return order_.compare(polys_[a].front().monomial, polys_[b].front().monomial) < 0;
    });
    for (std::size_t a : idx) {
      std::vector<Reducer<F>> others;
      for (std::size_t b : idx) {
        if (b != a) others.push_back({&polys_[b].front().monomial, &polys_[b]});
      }
      Terms<F> tail(polys_[a].begin() + 1, polys_[a].end());
      Terms<F> reduced = reduce_terms(k_, order_, std::move(tail), others);
      reduced.insert(reduced.begin(), polys_[a].front());
      out.push_back(Polynomial<F>::from_sorted_terms(ring_, std::move(reduced)));
    }
    return out;
  }

 private:
  std::vector<Reducer<F>> active_reducers() const {
    std::vector<Reducer<F>> r;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) r.push_back({&polys_[i].front().monomial, &polys_[i]});
    }
    return r;
  }

  void insert(Terms<F> h, unsigned sugar) {
    const std::size_t hi = polys_.size();
    if (h.front().monomial.is_one()) {
      unit_ = true;
      pairs_.clear();
      return;
    }
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    active_.push_back(false);
    const Monomial& lh = polys_[hi].front().monomial;

    // new pairs (g, h) with the chain criterion among themselves
    std::vector<CriticalPair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      candidates.push_back(make_pair(g, hi));
    }
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const CriticalPair& p = candidates[a];
      bool keep = Monomial::coprime(polys_[p.i].front().monomial, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) {
        kept.push_back(p);
      } else if (stats_) {
        ++stats_->pairs_discarded;
      }
    }

    // drop old pairs made superfluous by h
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (lh.divides(it->lcm) &&
          !(Monomial::lcm(polys_[it->i].front().monomial, lh) == it->lcm) &&
          !(Monomial::lcm(polys_[it->j].front().monomial, lh) == it->lcm)) {
        it = pairs_.erase(it);
        if (stats_) ++stats_->pairs_discarded;
      } else {
        ++it;
      }
    }

    for (auto& p : kept) {
      if (Monomial::coprime(polys_[p.i].front().monomial, lh)) {
        if (stats_) ++stats_->pairs_discarded;
        continue;
      }
      pairs_.insert(std::move(p));
    }

    std::size_t live = 1;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].front().monomial)) active_[g] = false;
      if (active_[g]) ++live;
    }
    active_[hi] = true;
    if (stats_) stats_->max_basis_size = std::max(stats_->max_basis_size, live);
  }

  CriticalPair make_pair(std::size_t g, std::size_t h) {
    const Monomial& lg = polys_[g].front().monomial;
    const Monomial& lh = polys_[h].front().monomial;
    CriticalPair p{g, h, Monomial::lcm(lg, lh), 0, next_seq_++};
    const unsigned sg = sugars_[g] + p.lcm.degree() - lg.degree();
    const unsigned sh = sugars_[h] + p.lcm.degree() - lh.degree();
    p.sugar = std::max(sg, sh);
    return p;
  }

  RingPtr<F> ring_;
  const F& k_;
  const MonomialOrder& order_;
  std::vector<Terms<F>> polys_;
  std::vector<unsigned> sugars_;
  std::vector<bool> active_;
  std::set<CriticalPair, PairLess> pairs_;
  std::size_t next_seq_ = 0;
  bool unit_ = false;
  GroebnerStats* stats_;
};

template <CoefficientField F>
const RingPtr<F>& common_ring(std::span<const Polynomial<F>> polys) {
  const RingPtr<F>& ring = polys.front().ring();
  for (const auto& p : polys) {
    if (!same_ring(p.ring(), ring)) {
      throw std::invalid_argument("generators belong to different rings");
    }
  }
  return ring;
}

}  // namespace

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> G) {
  std::vector<Reducer<F>> reducers;
  for (const auto& g : G) {
    f.check_ring(g);
    if (!g.is_zero()) reducers.push_back({&g.leading_monomial(), &g.terms()});
  }
  auto rem = reduce_terms(f.field(), f.order(), f.terms(), reducers);
  return Polynomial<F>::from_sorted_terms(f.ring(), std::move(rem));
}

template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  f.check_ring(g);
  if (f.is_zero() || g.is_zero()) return Polynomial<F>(f.ring());
  return Polynomial<F>::from_sorted_terms(f.ring(),
                                          s_poly_terms(f.field(), f.order(), f.terms(), g.terms()));
}

template <CoefficientField F>
std::vector<Polynomial<F>> buchberger(std::span<const Polynomial<F>> gens, GroebnerStats* stats) {
  if (gens.empty()) return {};
  const RingPtr<F> ring = common_ring(gens);
  std::vector<const Polynomial<F>*> input;
  for (const auto& g : gens) {
    if (!g.is_zero()) input.push_back(&g);
  }
  const auto& order = ring->order();
  std::stable_sort(input.begin(), input.end(), [&](const Polynomial<F>* a, const Polynomial<F>* b) {
    return order.compare(a->leading_monomial(), b->leading_monomial()) < 0;
  });
  BuchbergerEngine<F> engine(ring, stats);
  for (const auto* g : input) engine.add_generator(*g);
  engine.run();
  return engine.reduced_basis();
}

template <CoefficientField F>
bool is_groebner_basis(std::span<const Polynomial<F>> G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
    }
  }
  return true;
}

template <CoefficientField F>
bool is_reduced_basis(std::span<const Polynomial<F>> G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero() || !G[i].field().is_one(G[i].leading_coeff())) return false;
    if (i > 0 && G[i].order().compare(G[i - 1].leading_monomial(), G[i].leading_monomial()) >= 0) {
      return false;
    }
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : G[i].terms()) {
        if (G[j].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

#define DETKIT_INSTANTIATE_GROEBNER(F)                                                        \
  template Polynomial<F> normal_form<F>(const Polynomial<F>&, std::span<const Polynomial<F>>); \
  template Polynomial<F> s_polynomial<F>(const Polynomial<F>&, const Polynomial<F>&);         \
  template std::vector<Polynomial<F>> buchberger<F>(std::span<const Polynomial<F>>,           \
                                                    GroebnerStats*);                           \
  template bool is_groebner_basis<F>(std::span<const Polynomial<F>>);                         \
  template bool is_reduced_basis<F>(std::span<const Polynomial<F>>);

DETKIT_INSTANTIATE_GROEBNER(PrimeField)
DETKIT_INSTANTIATE_GROEBNER(RationalField)

#undef DETKIT_INSTANTIATE_GROEBNER

}  // namespace detkit
