#include "detkit/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace detkit::combinat {

SubsetIx::SubsetIx(std::vector<int> values) : v_(std::move(values)) {
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 1) throw std::invalid_argument("subset entries must be >= 1");
    if (i > 0 && v_[i] <= v_[i - 1]) {
      throw std::invalid_argument("subset entries must be strictly increasing");
    }
  }
}

SubsetIx SubsetIx::range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return SubsetIx(std::move(v));
}

int SubsetIx::count_at_most(int bound) const {
  return static_cast<int>(std::upper_bound(v_.begin(), v_.end(), bound) - v_.begin());
}

bool SubsetIx::contains(int x) const { return std::binary_search(v_.begin(), v_.end(), x); }

SubsetIx SubsetIx::concat(const SubsetIx& tail) const {
  std::vector<int> v = v_;
  v.insert(v.end(), tail.v_.begin(), tail.v_.end());
  return SubsetIx(std::move(v));
}

SubsetIx SubsetIx::prefix(std::size_t k) const {
  return SubsetIx(std::vector<int>(v_.begin(), v_.begin() + static_cast<std::ptrdiff_t>(std::min(k, v_.size()))));
}

SubsetIx SubsetIx::without_positions(std::initializer_list<std::size_t> skip) const {
  std::vector<int> v;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (std::find(skip.begin(), skip.end(), i) == skip.end()) v.push_back(v_[i]);
  }
  return SubsetIx(std::move(v));
}

std::string SubsetIx::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v_[i]);
  }
  return out;
}

bool subset_leq(const SubsetIx& a, const SubsetIx& b) {
  if (a.size() < b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

MinorIndex::MinorIndex(SubsetIx r, SubsetIx c) : rows(std::move(r)), cols(std::move(c)) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("minor index needs as many rows as columns");
  }
  if (rows.empty()) throw std::invalid_argument("minor index must be nonempty");
}

std::string MinorIndex::to_string() const {
  return "[" + rows.to_string() + "|" + cols.to_string() + "]";
}

PfaffianIndex::PfaffianIndex(SubsetIx r) : rows(std::move(r)) {
  if (rows.empty() || rows.size() % 2 != 0) {
    throw std::invalid_argument("Pfaffian index must have even size >= 2");
  }
}

std::string PfaffianIndex::to_string() const { return "[" + rows.to_string() + "]"; }

namespace {

class BracketParser {
 public:
  explicit BracketParser(std::string_view s) : s_(s) {}

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  SubsetIx list() {
    std::vector<int> v;
    skip_space();
    if (pos_ < s_.size() && (s_[pos_] == '|' || s_[pos_] == ']')) return SubsetIx(std::move(v));
    while (true) {
      v.push_back(number());
      if (!peek(',')) break;
      ++pos_;
    }
    try {
      return SubsetIx(std::move(v));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  void finish() {
    skip_space();
    if (pos_ != s_.size()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad bracket '" + std::string(s_) + "' at position " +
                                std::to_string(pos_) + ": " + what);
  }

 private:
  int number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MinorIndex parse_minor_index(std::string_view text) {
  BracketParser p(text);
  p.expect('[');
  SubsetIx rows = p.list();
  p.expect('|');
  SubsetIx cols = p.list();
  p.expect(']');
  p.finish();
  try {
    return MinorIndex(std::move(rows), std::move(cols));
  } catch (const std::invalid_argument& e) {
    p.fail(e.what());
  }
}

PfaffianIndex parse_pfaffian_index(std::string_view text) {
  BracketParser p(text);
  p.expect('[');
  SubsetIx rows = p.list();
  p.expect(']');
  p.finish();
  try {
    return PfaffianIndex(std::move(rows));
  } catch (const std::invalid_argument& e) {
    p.fail(e.what());
  }
}

bool minor_leq(const MinorIndex& u, const MinorIndex& v) {
  return subset_leq(u.rows, v.rows) && subset_leq(u.cols, v.cols);
}

bool in_doset(const MinorIndex& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.rows[i] > u.cols[i]) return false;
  }
  return true;
}

bool doset_leq1(const MinorIndex& u, const MinorIndex& v) { return subset_leq(u.rows, v.rows); }

std::vector<SubsetIx> subsets_of_size(int n, int k) {
  std::vector<SubsetIx> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

MinorPoset::MinorPoset(Kind kind, int m, int n) : kind_(kind), m_(m), n_(n) {
  if (m < 0 || n < 0) throw std::invalid_argument("poset dimensions must be nonnegative");
  for (int s = 1; s <= std::min(m, n); ++s) {
    const auto rs = subsets_of_size(m, s);
    const auto cs = subsets_of_size(n, s);
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        MinorIndex e(r, c);
        if (kind == Kind::doset_minors && !in_doset(e)) continue;
        elements_.push_back(std::move(e));
      }
    }
  }
}

MinorPoset MinorPoset::generic(int m, int n) { return MinorPoset(Kind::minors, m, n); }
MinorPoset MinorPoset::doset(int n) { return MinorPoset(Kind::doset_minors, n, n); }

bool MinorPoset::contains(const MinorIndex& e) const {
  if (e.rows.max() > m_ || e.cols.max() > n_) return false;
  return kind_ == Kind::minors || in_doset(e);
}

PfaffianPoset::PfaffianPoset(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("poset dimension must be nonnegative");
  for (int s = 2; s <= n; s += 2) {
    for (auto& r : subsets_of_size(n, s)) elements_.emplace_back(std::move(r));
  }
}

bool PfaffianPoset::contains(const PfaffianIndex& e) const { return e.rows.max() <= n_; }

namespace minors {

MinorIndex size_generator(int m, int n, int t) {
  return {SubsetIx::range(m - t + 1, m), SubsetIx::range(n - t + 1, n)};
}

std::optional<MinorIndex> size_cogenerator(int t) {
  if (t <= 1) return std::nullopt;
  return MinorIndex(SubsetIx::range(1, t - 1), SubsetIx::range(1, t - 1));
}

MinorIndex row_block_generator(int /*m*/, int n, int R, int r) {
  return {SubsetIx::range(R - r + 1, R), SubsetIx::range(n - r + 1, n)};
}

// rows [1..r-1, R+1..m] with as many leading columns, cut to n entries when
// the row list is longer than the matrix is wide
std::optional<MinorIndex> row_block_cogenerator(int m, int n, int R, int r) {
  if (r <= 0) return std::nullopt;
  const SubsetIx rows = SubsetIx::range(1, r - 1).concat(SubsetIx::range(R + 1, m));
  const auto len = std::min<std::size_t>(rows.size(), static_cast<std::size_t>(n));
  if (len == 0) return std::nullopt;
  return MinorIndex(rows.prefix(len), SubsetIx::range(1, static_cast<int>(len)));
}

MinorIndex column_block_generator(int m, int /*n*/, int C, int c) {
  return {SubsetIx::range(m - c + 1, m), SubsetIx::range(C - c + 1, C)};
}

std::optional<MinorIndex> column_block_cogenerator(int m, int n, int C, int c) {
  const auto t = row_block_cogenerator(n, m, C, c);
  if (!t) return std::nullopt;
  return MinorIndex(t->cols, t->rows);
}

}  // namespace minors

namespace doset {

MinorIndex size_generator(int n, int t) {
  return {SubsetIx::range(n - t + 1, n), SubsetIx::range(n - t + 1, n)};
}

std::optional<MinorIndex> size_cogenerator(int t) { return minors::size_cogenerator(t); }

MinorIndex row_block_generator(int n, int R, int r) {
  return {SubsetIx::range(R - r + 1, R), SubsetIx::range(n - r + 1, n)};
}

std::optional<MinorIndex> row_block_cogenerator(int n, int R, int r) {
  if (r <= 0) return std::nullopt;
  const SubsetIx s = SubsetIx::range(1, r - 1).concat(SubsetIx::range(R + 1, n));
  if (s.empty()) return std::nullopt;
  return MinorIndex(s, s);
}

}  // namespace doset

namespace pfaffians {

PfaffianIndex size_generator(int n, int size2t) {
  return PfaffianIndex(SubsetIx::range(n - size2t + 1, n));
}

std::optional<PfaffianIndex> size_cogenerator(int size2t) {
  if (size2t <= 2) return std::nullopt;
  return PfaffianIndex(SubsetIx::range(1, size2t - 2));
}

PfaffianIndex row_block_generator(int n, int R, int r) {
  if (r % 2 == 0) return PfaffianIndex(SubsetIx::range(R - r + 1, R));
  if (R == n) return PfaffianIndex(SubsetIx::range(n - r, n));
  return PfaffianIndex(SubsetIx::range(R - r + 1, R).concat(SubsetIx{n}));
}

std::optional<PfaffianIndex> row_block_cogenerator(int n, int R, int r) {
  if (r <= 0) return std::nullopt;
  const SubsetIx head = SubsetIx::range(1, r - 1);
  SubsetIx s;
  if (R >= n) {
    // every row lies in the block: the complement is the Pfaffians shorter than r
    s = head.prefix(static_cast<std::size_t>((r - 1) / 2 * 2));
  } else {
    const SubsetIx full = head.concat(SubsetIx::range(R + 1, n));
    s = full.size() % 2 == 0 ? full : head.concat(SubsetIx::range(R + 1, n - 1));
  }
  if (s.empty()) return std::nullopt;
  return PfaffianIndex(s);
}

}  // namespace pfaffians

}  // namespace detkit::combinat
