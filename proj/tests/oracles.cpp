#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

bool is_ribbon(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  std::set<Cell> s(cells.begin(), cells.end());
  std::set<int> contents;
  for (Cell c : s)
    if (!contents.insert(c.col - c.row).second) return false;
  std::set<Cell> seen{*s.begin()};
  std::vector<Cell> stack{*s.begin()};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell n : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}})
      if (s.count(n) && seen.insert(n).second) stack.push_back(n);
  }
  return seen.size() == s.size();
}

StripCensus strip_census(const SkewShape& shape) {
  const auto cells = shape.cells();
  const int n = static_cast<int>(cells.size());
  StripCensus out;
  if (n == 0) {
    out.decompositions = 1;
    out.minimal.push_back({});
    return out;
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> ribbon(full + 1, 0);
  auto members = [&](std::uint32_t m) {
    std::vector<Cell> v;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) v.push_back(cells[static_cast<std::size_t>(i)]);
    return v;
  };
  for (std::uint32_t m = 1; m <= full; ++m) ribbon[m] = is_ribbon(members(m));

  // best[m], ways[m]: fewest strips covering exactly m, and the number of
  // decompositions of m. The lowest cell of m decides the first block.
  const int inf = 1 << 20;
  std::vector<int> best(full + 1, inf);
  std::vector<std::int64_t> ways(full + 1, 0);
  best[0] = 0;
  ways[0] = 1;
  for (std::uint32_t m = 1; m <= full; ++m) {
    const std::uint32_t low = m & (~m + 1);
    for (std::uint32_t s = m; s; s = (s - 1) & m) {
      if (!(s & low) || !ribbon[s]) continue;
      best[m] = std::min(best[m], best[m ^ s] + 1);
      ways[m] += ways[m ^ s];
    }
  }
  out.min_strips = best[full];
  out.decompositions = ways[full];

  std::vector<std::pair<int, int>> current;
  std::function<void(std::uint32_t)> collect = [&](std::uint32_t m) {
    if (m == 0) {
      auto v = current;
      std::sort(v.begin(), v.end());
      out.minimal.push_back(std::move(v));
      return;
    }
    const std::uint32_t low = m & (~m + 1);
    for (std::uint32_t s = m; s; s = (s - 1) & m) {
      if (!(s & low) || !ribbon[s] || best[m ^ s] + 1 != best[m]) continue;
      int lo = 1 << 20, hi = -(1 << 20);
      for (Cell c : members(s)) {
        lo = std::min(lo, c.col - c.row);
        hi = std::max(hi, c.col - c.row);
      }
      current.push_back({lo, hi});
      collect(m ^ s);
      current.pop_back();
    }
  };
  collect(full);
  return out;
}

namespace {

// Weakly decreasing vectors of length `len` with entries in [0, cap].
void partitions_in_box(int len, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const int hi = cur.empty() ? cap : cur.back();
  for (int v = 0; v <= hi; ++v) {
    cur.push_back(v);
    partitions_in_box(len, cap, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::int64_t count_shapes(int max_cells, int max_rows, int max_cols, bool tight) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  partitions_in_box(max_rows, max_cols, cur, all);
  std::int64_t count = 0;
  for (const auto& lam : all) {
    const int len = static_cast<int>(std::count_if(lam.begin(), lam.end(), [](int x) { return x > 0; }));
    if (len == 0) continue;
    for (const auto& mu : all) {
      bool inside = true;
      int cells = 0;
      for (int i = 0; i < max_rows; ++i) {
        if (mu[i] > lam[i]) inside = false;
        cells += lam[i] - mu[i];
      }
      if (!inside || cells < 1 || cells > max_cells || mu[0] >= lam[0]) continue;
      bool mu_fits = true;
      for (int i = len; i < max_rows; ++i)
        if (mu[i] != 0) mu_fits = false;
      if (!mu_fits) continue;
      if (tight) {
        bool ok = true;
        for (int i = 0; i < len; ++i)
          if (mu[i] == lam[i]) ok = false;
        for (int j = 1; j <= lam[0] && ok; ++j) {
          bool hit = false;
          for (int i = 0; i < len; ++i)
            if (mu[i] < j && j <= lam[i]) hit = true;
          ok = hit;
        }
        if (!ok) continue;
      }
      ++count;
    }
  }
  return count;
}

std::pair<std::vector<int>, std::vector<int>> code_rows(const SkewShape& shape) {
  const int l = shape.rows();
  const int k = shape.cols() + l;
  std::vector<int> top(static_cast<std::size_t>(k), 0), bottom(static_cast<std::size_t>(k), 0);
  for (int i = 1; i <= l; ++i) {
    bottom[static_cast<std::size_t>(shape.lambda_part(l + 1 - i) + i - 1)] = 1;
    top[static_cast<std::size_t>(shape.mu_part(l + 1 - i) + i - 1)] = 1;
  }
  return {top, bottom};
}

zrank::RatPoly hook_content(const std::vector<int>& lambda) {
  std::vector<Rational> poly{1};
  std::vector<int> conj(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda)
    for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      const int hook = lambda[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i - 1;
      const int c = j - i;
      std::vector<Rational> next(poly.size() + 1, 0);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] += poly[d] / hook;
        next[d] += poly[d] * c / hook;
      }
      poly = std::move(next);
    }
  }
  return zrank::RatPoly(poly);
}

Rational leibniz_det(const zrank::RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, p[i]);
    if (term == 0) continue;
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    total += inv % 2 ? Rational(-term) : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

std::vector<std::vector<std::pair<int, int>>> matchings(const std::vector<int>& left, const std::vector<int>& right) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (left.size() != right.size()) return out;
  std::vector<int> r = right;
  std::sort(r.begin(), r.end());
  do {
    std::vector<std::pair<int, int>> m;
    bool ok = true;
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i] >= r[i]) ok = false;
      m.push_back({left[i], r[i]});
    }
    if (ok) {
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

int crossings(const std::vector<std::pair<int, int>>& pairs) {
  int c = 0;
  for (auto [u1, v1] : pairs)
    for (auto [u2, v2] : pairs)
      if (u1 < u2 && u2 < v1 && v1 < v2) ++c;
  return c;
}

int inversions(const std::vector<int>& perm) {
  int c = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++c;
  return c;
}

std::int64_t ssyt_by_columns(const SkewShape& shape, int t) {
  using Column = std::vector<int>;  // entries top to bottom
  std::map<Column, std::int64_t> layer{{Column{}, 1}};
  int prev_top = 0;
  for (int j = 1; j <= shape.cols(); ++j) {
    int top = 0, bot = -1;
    for (int i = 1; i <= shape.rows(); ++i)
      if (shape.contains({i, j})) {
        if (top == 0) top = i;
        bot = i;
      }
    std::vector<Column> fillings;
    const int height = top == 0 ? 0 : bot - top + 1;
    Column cur;
    std::function<void(int)> gen = [&](int lo) {
      if (static_cast<int>(cur.size()) == height) {
        fillings.push_back(cur);
        return;
      }
      for (int v = lo; v <= t; ++v) {
        cur.push_back(v);
        gen(v + 1);
        cur.pop_back();
      }
    };
    gen(1);
    std::map<Column, std::int64_t> next;
    for (const auto& [left, ways] : layer) {
      for (const auto& right : fillings) {
        bool ok = true;
        for (std::size_t r = 0; r < right.size() && ok; ++r) {
          const int row = top + static_cast<int>(r);
          const int li = row - prev_top;
          if (li >= 0 && li < static_cast<int>(left.size()) && left[static_cast<std::size_t>(li)] > right[r]) ok = false;
        }
        if (ok) next[right] += ways;
      }
    }
    layer = std::move(next);
    prev_top = top;
  }
  std::int64_t total = 0;
  for (const auto& [c, w] : layer) total += w;
  return total;
}

}  // namespace oracle
