#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace detkit::combinat {

/// Strictly increasing sequence of positive integers (1-based indices).
class SubsetIx {
 public:
  SubsetIx() = default;
  /// Throws std::invalid_argument unless strictly increasing and >= 1.
  explicit SubsetIx(std::vector<int> values);
  SubsetIx(std::initializer_list<int> values) : SubsetIx(std::vector<int>(values)) {}

  /// {lo, lo+1, ..., hi}; empty when lo > hi.
  static SubsetIx range(int lo, int hi);

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  int operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<int>& values() const { return v_; }
  int max() const { return v_.empty() ? 0 : v_.back(); }

  /// Number of entries that are <= bound.
  int count_at_most(int bound) const;
  bool contains(int x) const;

  /// Concatenation; every entry of `tail` must exceed every entry here.
  SubsetIx concat(const SubsetIx& tail) const;
  /// First k entries.
  SubsetIx prefix(std::size_t k) const;
  /// This set with entries at positions `skip` (0-based, sorted) removed.
  SubsetIx without_positions(std::initializer_list<std::size_t> skip) const;

  std::string to_string() const;  // "1,2,3"

  friend auto operator<=>(const SubsetIx&, const SubsetIx&) = default;
  friend bool operator==(const SubsetIx&, const SubsetIx&) = default;

 private:
  std::vector<int> v_;
};

/// A <= B iff |A| >= |B| and a_i <= b_i for i = 1..|B|. The empty set is the maximum.
bool subset_leq(const SubsetIx& a, const SubsetIx& b);

/// Bracket [a1,...,at | b1,...,bt] of a t-minor.
struct MinorIndex {
  SubsetIx rows;
  SubsetIx cols;

  /// Throws std::invalid_argument unless |rows| = |cols| >= 1.
  MinorIndex(SubsetIx r, SubsetIx c);

  std::size_t size() const { return rows.size(); }
  std::string to_string() const;

  friend auto operator<=>(const MinorIndex&, const MinorIndex&) = default;
  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

/// Bracket [a1,...,a2k] of a Pfaffian of even size >= 2.
struct PfaffianIndex {
  SubsetIx rows;

  explicit PfaffianIndex(SubsetIx r);

  std::size_t size() const { return rows.size(); }
  std::string to_string() const;

  friend auto operator<=>(const PfaffianIndex&, const PfaffianIndex&) = default;
  friend bool operator==(const PfaffianIndex&, const PfaffianIndex&) = default;
};

/// Parses "[1,2|1,3]". Throws std::invalid_argument with a position on failure.
MinorIndex parse_minor_index(std::string_view text);
/// Parses "[1,2,3,4]".
PfaffianIndex parse_pfaffian_index(std::string_view text);

bool minor_leq(const MinorIndex& u, const MinorIndex& v);
/// rows_i <= cols_i for every i: the minor's diagonal lies on or above the main diagonal.
bool in_doset(const MinorIndex& u);
/// Preorder on the doset: compares row sets only.
bool doset_leq1(const MinorIndex& u, const MinorIndex& v);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<SubsetIx> subsets_of_size(int n, int k);

/// Finite poset (or preorder) of minors: Δ(X) for an m x n matrix, or the
/// doset Δˢ(Y) of an n x n symmetric matrix under ≤₁.
class MinorPoset {
 public:
  using Element = MinorIndex;
  enum class Kind { minors, doset_minors };

  static MinorPoset generic(int m, int n);
  static MinorPoset doset(int n);

  Kind kind() const { return kind_; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  const std::vector<MinorIndex>& elements() const { return elements_; }
  bool contains(const MinorIndex& e) const;
  bool leq(const MinorIndex& a, const MinorIndex& b) const {
    return kind_ == Kind::minors ? minor_leq(a, b) : doset_leq1(a, b);
  }

 private:
  MinorPoset(Kind kind, int m, int n);
  Kind kind_;
  int m_;
  int n_;
  std::vector<MinorIndex> elements_;
};

/// Π(Z): Pfaffian indices of an n x n skew-symmetric matrix under subset_leq.
class PfaffianPoset {
 public:
  using Element = PfaffianIndex;

  explicit PfaffianPoset(int n);

  int size() const { return n_; }
  const std::vector<PfaffianIndex>& elements() const { return elements_; }
  bool contains(const PfaffianIndex& e) const;
  bool leq(const PfaffianIndex& a, const PfaffianIndex& b) const {
    return subset_leq(a.rows, b.rows);
  }

 private:
  int n_;
  std::vector<PfaffianIndex> elements_;
};

/// {α : α ≤ s for some s in S}, in the poset's enumeration order.
template <class Poset>
std::vector<typename Poset::Element> order_ideal_generated(
    const Poset& poset, std::span<const typename Poset::Element> S) {
  std::vector<typename Poset::Element> out;
  for (const auto& a : poset.elements()) {
    for (const auto& s : S) {
      if (poset.leq(a, s)) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

/// {α : s ≰ α for every s in S}: the largest down-closed subset disjoint from S.
template <class Poset>
std::vector<typename Poset::Element> order_ideal_cogenerated(
    const Poset& poset, std::span<const typename Poset::Element> S) {
  std::vector<typename Poset::Element> out;
  for (const auto& a : poset.elements()) {
    bool above = false;
    for (const auto& s : S) {
      if (poset.leq(s, a)) {
        above = true;
        break;
      }
    }
    if (!above) out.push_back(a);
  }
  return out;
}

/// The printed variant {α : α ≰ s for every s in S}, kept for comparison only.
template <class Poset>
std::vector<typename Poset::Element> order_ideal_not_below(
    const Poset& poset, std::span<const typename Poset::Element> S) {
  std::vector<typename Poset::Element> out;
  for (const auto& a : poset.elements()) {
    bool below = false;
    for (const auto& s : S) {
      if (poset.leq(a, s)) {
        below = true;
        break;
      }
    }
    if (!below) out.push_back(a);
  }
  return out;
}

/// α in the set and β ≤ α imply β in the set.
template <class Poset>
bool is_down_closed(const Poset& poset, std::span<const typename Poset::Element> set) {
  auto in_set = [&](const auto& e) {
    for (const auto& x : set) {
      if (x == e) return true;
    }
    return false;
  };
  for (const auto& a : set) {
    for (const auto& b : poset.elements()) {
      if (poset.leq(b, a) && !in_set(b)) return false;
    }
  }
  return true;
}

/// Elements s such that the order ideal cogenerated by {s} equals `target`
/// (exhaustive search). The empty vector means no single cogenerator exists.
template <class Poset>
std::vector<typename Poset::Element> single_cogenerators(
    const Poset& poset, std::span<const typename Poset::Element> target) {
  std::vector<typename Poset::Element> out;
  for (const auto& s : poset.elements()) {
    const std::vector<typename Poset::Element> S{s};
    if (order_ideal_cogenerated<Poset>(poset, S) ==
        std::vector<typename Poset::Element>(target.begin(), target.end())) {
      out.push_back(s);
    }
  }
  return out;
}

// Explicit generators and cogenerators of the order ideals behind the
// decompositions. std::nullopt stands for "S is empty".

namespace minors {
/// Minors of size >= t in an m x n matrix.
MinorIndex size_generator(int m, int n, int t);
std::optional<MinorIndex> size_cogenerator(int t);
/// Minors with at least r rows among the first R rows.
MinorIndex row_block_generator(int m, int n, int R, int r);
std::optional<MinorIndex> row_block_cogenerator(int m, int n, int R, int r);
/// Minors with at least c columns among the first C columns.
MinorIndex column_block_generator(int m, int n, int C, int c);
std::optional<MinorIndex> column_block_cogenerator(int m, int n, int C, int c);
}  // namespace minors

namespace doset {
MinorIndex size_generator(int n, int t);
std::optional<MinorIndex> size_cogenerator(int t);
MinorIndex row_block_generator(int n, int R, int r);
std::optional<MinorIndex> row_block_cogenerator(int n, int R, int r);
}  // namespace doset

namespace pfaffians {
/// Pfaffians of size >= size2t.
PfaffianIndex size_generator(int n, int size2t);
std::optional<PfaffianIndex> size_cogenerator(int size2t);
/// Pfaffians (any size) with at least r rows among the first R rows; the
/// generator has length r or r + 1, whichever is even.
PfaffianIndex row_block_generator(int n, int R, int r);
/// [1..r-1, R+1..n] or [1..r-1, R+1..n-1], whichever has even length.
std::optional<PfaffianIndex> row_block_cogenerator(int n, int R, int r);
}  // namespace pfaffians

}  // namespace detkit::combinat
