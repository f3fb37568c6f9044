#include "zrank/strips.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "zrank/code.hpp"
#include "zrank/error.hpp"

namespace zrank {

BorderStrip BorderStrip::from_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return content(a) < content(b); });
  if (!is_border_strip(cells)) throw InvariantError("cells do not form a border strip");
  return BorderStrip{std::move(cells)};
}

Decomposition Decomposition::from_strips(std::vector<BorderStrip> strips) {
  std::sort(strips.begin(), strips.end(), [](const BorderStrip& a, const BorderStrip& b) {
    if (a.init_content() != b.init_content()) return a.init_content() < b.init_content();
    return a.init().row < b.init().row;
  });
  return Decomposition{std::move(strips)};
}

Decomposition Decomposition::from_cell_sets(const std::vector<std::vector<Cell>>& blocks) {
  std::vector<BorderStrip> strips;
  for (const auto& b : blocks) strips.push_back(BorderStrip::from_cells(b));
  return from_strips(std::move(strips));
}

namespace {

// The shape left after deleting the outer rim: row i keeps the cells (i,j)
// with (i+1,j+1) still present.
SkewShape without_rim(const SkewShape& s) {
  std::vector<int> lambda;
  for (int i = 1; i <= s.rows(); ++i) lambda.push_back(std::max(s.mu_part(i), s.lambda_part(i + 1) - 1));
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  std::vector<int> mu(s.mu().parts().begin(), s.mu().parts().end());
  mu.resize(std::min(mu.size(), lambda.size()));
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return SkewShape(Partition(std::move(lambda)), Partition(std::move(mu)));
}

}  // namespace

Decomposition greedy_decomposition(const SkewShape& shape) {
  std::vector<BorderStrip> strips;
  SkewShape current = shape;
  while (!current.empty()) {
    const SkewShape inner = without_rim(current);
    for (const auto& comp : connected_components(current)) {
      std::vector<Cell> rim;
      for (Cell c : comp)
        if (!inner.contains(c)) rim.push_back(c);
      strips.push_back(BorderStrip::from_cells(std::move(rim)));
    }
    current = inner;
  }
  return Decomposition::from_strips(std::move(strips));
}

Decomposition row_decomposition(const SkewShape& shape) {
  std::vector<BorderStrip> strips;
  for (int i = 1; i <= shape.rows(); ++i) {
    std::vector<Cell> row;
    for (int j = shape.mu_part(i) + 1; j <= shape.lambda_part(i); ++j) row.push_back({i, j});
    if (!row.empty()) strips.push_back(BorderStrip::from_cells(std::move(row)));
  }
  return Decomposition::from_strips(std::move(strips));
}

bool validate_decomposition(const SkewShape& shape, const std::vector<std::vector<Cell>>& blocks) {
  std::set<Cell> seen;
  for (const auto& block : blocks) {
    if (!is_border_strip(block)) return false;
    for (Cell c : block)
      if (!shape.contains(c) || !seen.insert(c).second) return false;
  }
  return static_cast<int>(seen.size()) == shape.size();
}

bool validate_decomposition(const SkewShape& shape, const Decomposition& d) {
  std::vector<std::vector<Cell>> blocks;
  for (const auto& s : d.strips) blocks.push_back(s.cells);
  return validate_decomposition(shape, blocks);
}

namespace {

struct DecompositionWalker {
  const SkewShape& shape;
  const std::function<void(const Decomposition&)>& visit;
  int max_strips;
  std::vector<Cell> order;  // cells by (content, row)
  std::set<Cell> assigned;
  Decomposition current;
  std::int64_t count = 0;

  bool free(Cell c) const { return shape.contains(c) && !assigned.contains(c); }

  void next_block(std::size_t from) {
    while (from < order.size() && assigned.contains(order[from])) ++from;
    if (from == order.size()) {
      ++count;
      visit(current);
      return;
    }
    if (max_strips >= 0 && current.size() >= max_strips) return;
    std::vector<Cell> block{order[from]};
    assigned.insert(order[from]);
    grow(block, from);
    assigned.erase(order[from]);
  }

  void grow(std::vector<Cell>& block, std::size_t from) {
    current.strips.push_back(BorderStrip{block});
    next_block(from);
    current.strips.pop_back();
    const Cell end = block.back();
    for (Cell n : {Cell{end.row - 1, end.col}, Cell{end.row, end.col + 1}}) {
      if (!free(n)) continue;
      block.push_back(n);
      assigned.insert(n);
      grow(block, from);
      assigned.erase(n);
      block.pop_back();
    }
  }
};

}  // namespace

std::int64_t for_each_decomposition(const SkewShape& shape, const std::function<void(const Decomposition&)>& visit,
                                    int max_strips, const OracleBounds& bounds) {
  if (shape.size() > bounds.decomposition_cells)
    throw BoundError("decomposition enumeration limited to " + std::to_string(bounds.decomposition_cells) +
                     " cells; shape " + shape.to_string() + " has " + std::to_string(shape.size()));
  DecompositionWalker w{shape, visit, max_strips, shape.cells(), {}, {}};
  std::sort(w.order.begin(), w.order.end(), [](Cell a, Cell b) {
    return content(a) != content(b) ? content(a) < content(b) : a.row < b.row;
  });
  w.next_block(0);
  return w.count;
}

std::vector<Decomposition> enumerate_decompositions(const SkewShape& shape, const OracleBounds& bounds) {
  std::vector<Decomposition> out;
  for_each_decomposition(shape, [&](const Decomposition& d) { out.push_back(d); }, -1, bounds);
  return out;
}

EndpointSets endpoint_content_sets(const Decomposition& d) {
  EndpointSets s;
  for (const auto& b : d.strips) {
    s.p.push_back(b.init_content());
    s.q.push_back(b.fin_content());
  }
  std::sort(s.p.begin(), s.p.end());
  std::sort(s.q.begin(), s.q.end());
  return s;
}

EndpointSets predicted_endpoint_sets(const SkewShape& shape) {
  const auto cols = code_column_sets(reduced_code(shape));
  const int e = code_base_content(shape);
  EndpointSets s;
  for (int w : cols.w) s.p.push_back(e + w - 1);
  for (int y : cols.y) s.q.push_back(e + y - 2);
  return s;
}

IntervalSet interval_set_of(const SkewShape& shape, const Decomposition& d) {
  const int e = code_base_content(shape);
  IntervalSet set;
  for (const auto& b : d.strips) set.pairs.emplace_back(b.init_content() - e + 1, b.fin_content() - e + 2);
  std::sort(set.pairs.begin(), set.pairs.end());
  return set;
}

int z_statistic(const SkewShape& shape) {
  int z = 0;
  for (const auto& b : greedy_decomposition(shape).strips) z += b.height();
  return z;
}

namespace {

// Per diagonal, the direction taken by the cells that are not the fin of
// their strip. Returns nullopt if some diagonal mixes directions.
std::optional<std::map<int, Direction>> diagonal_directions(const Decomposition& d) {
  std::map<int, Direction> dirs;
  for (const auto& b : d.strips) {
    for (std::size_t k = 0; k + 1 < b.cells.size(); ++k) {
      const Direction dir = b.cells[k + 1].row < b.cells[k].row ? Direction::up : Direction::right;
      auto [it, inserted] = dirs.emplace(content(b.cells[k]), dir);
      if (!inserted && it->second != dir) return std::nullopt;
    }
  }
  return dirs;
}

}  // namespace

bool is_outside_decomposition(const SkewShape& shape, const Decomposition& d) {
  for (const auto& b : d.strips) {
    const Cell i = b.init();
    const Cell f = b.fin();
    if (shape.contains({i.row, i.col - 1}) && shape.contains({i.row + 1, i.col})) return false;
    if (shape.contains({f.row, f.col + 1}) && shape.contains({f.row - 1, f.col})) return false;
  }
  return diagonal_directions(d).has_value();
}

CuttingStrip cutting_strip(const SkewShape& shape, const Decomposition& d) {
  if (shape.empty() || !is_connected(shape)) throw InvariantError("cutting strip needs a nonempty connected shape");
  if (!validate_decomposition(shape, d)) throw InvariantError("not a border strip decomposition");
  if (!is_outside_decomposition(shape, d)) throw InvariantError("not an outside decomposition");
  const auto dirs = *diagonal_directions(d);
  const auto diags = diagonals(shape);
  CuttingStrip phi;
  phi.first_content = diags.begin()->first;
  const int last = diags.rbegin()->first;
  int ups = 0;
  for (int c = phi.first_content; c < last; ++c) {
    auto it = dirs.find(c);
    phi.directions.push_back(it == dirs.end() ? Direction::right : it->second);
    if (phi.directions.back() == Direction::up) ++ups;
  }
  Cell cur{ups + 1, phi.first_content + ups + 1};
  phi.cells.push_back(cur);
  for (Direction dir : phi.directions) {
    if (dir == Direction::up)
      --cur.row;
    else
      ++cur.col;
    phi.cells.push_back(cur);
  }
  return phi;
}

Segment strip_segment(const CuttingStrip& phi, int p, int q) {
  if (p > q + 1) return {Segment::Kind::undefined, {}};
  if (p == q + 1) return {Segment::Kind::empty, {}};
  if (p < phi.first_content || q > phi.last_content())
    throw InvariantError("segment [" + std::to_string(p) + "," + std::to_string(q) + "] outside the cutting strip");
  Segment s{Segment::Kind::strip, {}};
  for (int c = p; c <= q; ++c) s.cells.push_back(phi.at_content(c));
  return s;
}

}  // namespace zrank
