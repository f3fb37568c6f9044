#include "zrank/snakes.hpp"

#include <algorithm>

#include "zrank/code.hpp"
#include "zrank/error.hpp"

namespace zrank {

std::string SnakeSymbol::to_string() const {
  switch (kind) {
    case Kind::L: return "L" + std::to_string(m);
    case Kind::R: return "R" + std::to_string(m);
    case Kind::O: return "O";
  }
  return "O";
}

namespace {

std::vector<int> positions(const SnakeSequence& seq, SnakeSymbol::Kind kind) {
  std::vector<int> out;
  for (std::size_t i = 0; i < seq.symbols.size(); ++i)
    if (seq.symbols[i].kind == kind) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<Cell> walk(const SkewShape& shape, Cell start, bool left_first) {
  std::vector<Cell> cells;
  Cell c = start;
  bool go_left = left_first;
  while (shape.contains(c)) {
    cells.push_back(c);
    if (go_left)
      --c.col;
    else
      --c.row;
    go_left = !go_left;
  }
  return cells;
}

}  // namespace

std::vector<int> SnakeSequence::left_positions() const { return positions(*this, SnakeSymbol::Kind::L); }
std::vector<int> SnakeSequence::right_positions() const { return positions(*this, SnakeSymbol::Kind::R); }

std::string SnakeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) out += (i ? " " : "") + symbols[i].to_string();
  return out;
}

SnakeSequence snake_sequence(const SkewShape& shape) {
  SnakeSequence seq;
  // (x, y): current corner, x columns from the left edge, y row lines from the top.
  int x = 0;
  int y = shape.rows();
  for (int bit : reduced_code(shape).bottom) {
    const bool right = bit == 0;
    auto cells = right ? walk(shape, {y, x + 1}, true) : walk(shape, {y, x}, false);
    if (right)
      ++x;
    else
      --y;
    SnakeSymbol sym;
    if (cells.size() % 2 == 1)
      sym = {right ? SnakeSymbol::Kind::L : SnakeSymbol::Kind::R, static_cast<int>(cells.size() / 2)};
    seq.symbols.push_back(sym);
    seq.raw.push_back(std::move(cells));
  }
  return seq;
}

std::string IntervalSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out += (i ? ",(" : "(") + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
  return out + "}";
}

IntervalSet noncrossing_interval_set(const SnakeSequence& seq) {
  IntervalSet set;
  std::vector<int> stack;
  for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    switch (seq.symbols[i].kind) {
      case SnakeSymbol::Kind::L: stack.push_back(pos); break;
      case SnakeSymbol::Kind::R:
        if (stack.empty()) throw InvariantError("R symbol at position " + std::to_string(pos) + " has no open L");
        set.pairs.emplace_back(stack.back(), pos);
        stack.pop_back();
        break;
      case SnakeSymbol::Kind::O: break;
    }
  }
  if (!stack.empty()) throw InvariantError("unmatched L symbols in snake sequence");
  std::sort(set.pairs.begin(), set.pairs.end());
  return set;
}

namespace {

struct IntervalWalker {
  std::vector<int> lefts;
  std::vector<int> rights;
  std::vector<bool> used;
  IntervalSet current;
  const std::function<void(const IntervalSet&)>& visit;
  std::int64_t count = 0;

  void run(std::size_t k) {
    if (k == lefts.size()) {
      ++count;
      visit(current);
      return;
    }
    for (std::size_t j = 0; j < rights.size(); ++j) {
      if (used[j] || rights[j] <= lefts[k]) continue;
      used[j] = true;
      current.pairs.emplace_back(lefts[k], rights[j]);
      run(k + 1);
      current.pairs.pop_back();
      used[j] = false;
    }
  }
};

}  // namespace

std::int64_t for_each_interval_set(const SnakeSequence& seq, const std::function<void(const IntervalSet&)>& visit) {
  IntervalWalker w{seq.left_positions(), seq.right_positions(), {}, {}, visit};
  if (w.lefts.size() != w.rights.size()) return 0;
  w.used.assign(w.rights.size(), false);
  w.run(0);
  return w.count;
}

std::vector<IntervalSet> enumerate_interval_sets(const SnakeSequence& seq) {
  std::vector<IntervalSet> out;
  for_each_interval_set(seq, [&](const IntervalSet& s) { out.push_back(s); });
  return out;
}

std::int64_t count_interval_sets(const SnakeSequence& seq) {
  const auto lefts = seq.left_positions();
  const auto rights = seq.right_positions();
  if (lefts.size() != rights.size()) return 0;
  std::int64_t total = 1;
  // Later L positions have a subset of the choices of earlier ones, so
  // assigning from the right gives independent choice counts.
  for (std::size_t k = lefts.size(); k-- > 0;) {
    const auto later_rights = rights.end() - std::upper_bound(rights.begin(), rights.end(), lefts[k]);
    const auto later_lefts = static_cast<std::ptrdiff_t>(lefts.size() - 1 - k);
    const auto choices = later_rights - later_lefts;
    if (choices <= 0) return 0;
    total *= choices;
  }
  return total;
}

int crossings(const IntervalSet& set) {
  int n = 0;
  for (std::size_t i = 0; i < set.pairs.size(); ++i) {
    for (std::size_t j = 0; j < set.pairs.size(); ++j) {
      if (i == j) continue;
      const auto [ui, vi] = set.pairs[i];
      const auto [uj, vj] = set.pairs[j];
      if (ui < uj && uj < vi && vi < vj) ++n;
    }
  }
  return n;
}

IntervalPermutation interval_permutation(const IntervalSet& set, const IntervalSet& base) {
  if (set.pairs.size() != base.pairs.size()) throw InvariantError("interval sets differ in size");
  std::vector<int> ys;
  for (const auto& p : base.pairs) ys.push_back(p.second);
  IntervalPermutation out;
  for (std::size_t i = 0; i < set.pairs.size(); ++i) {
    if (set.pairs[i].first != base.pairs[i].first) throw InvariantError("interval sets differ in L positions");
    auto it = std::find(ys.begin(), ys.end(), set.pairs[i].second);
    if (it == ys.end()) throw InvariantError("interval sets differ in R positions");
    out.sigma.push_back(static_cast<int>(it - ys.begin()) + 1);
  }
  for (std::size_t i = 0; i < out.sigma.size(); ++i)
    for (std::size_t j = i + 1; j < out.sigma.size(); ++j)
      if (out.sigma[i] > out.sigma[j]) ++out.inversions;
  return out;
}

}  // namespace zrank
