#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zrank/config.hpp"
#include "zrank/shape.hpp"
#include "zrank/snakes.hpp"

namespace zrank {

struct BorderStrip {
  /// Cells in increasing content order.
  std::vector<Cell> cells;

  /// Sorts the cells by content. Throws InvariantError unless they pass the
  /// block border-strip test.
  static BorderStrip from_cells(std::vector<Cell> cells);

  Cell init() const { return cells.front(); }
  Cell fin() const { return cells.back(); }
  int init_content() const { return content(init()); }
  int fin_content() const { return content(fin()); }
  int size() const { return static_cast<int>(cells.size()); }
  /// Number of rows minus one.
  int height() const { return init().row - fin().row; }
};

struct Decomposition {
  /// Ordered by init content, init row breaking ties.
  std::vector<BorderStrip> strips;

  int size() const { return static_cast<int>(strips.size()); }
  /// Sorts the strips into canonical order.
  static Decomposition from_strips(std::vector<BorderStrip> strips);
  static Decomposition from_cell_sets(const std::vector<std::vector<Cell>>& blocks);
};

/// Repeatedly peels the outer rim {(i,j) : (i+1,j+1) not in the shape} of
/// every connected component.
Decomposition greedy_decomposition(const SkewShape& shape);

/// Every row of the shape as one strip.
Decomposition row_decomposition(const SkewShape& shape);

/// Blocks are disjoint, cover the shape exactly, and each is a border strip.
bool validate_decomposition(const SkewShape& shape, const std::vector<std::vector<Cell>>& blocks);
bool validate_decomposition(const SkewShape& shape, const Decomposition& d);

/// Visits every border strip decomposition once. The block containing the
/// smallest unassigned cell (by content, then row) is decided first, so that
/// cell is always the block's init. With max_strips >= 0, branches using
/// more strips are pruned. Throws BoundError if the shape has more cells
/// than bounds.decomposition_cells. Returns the number visited.
std::int64_t for_each_decomposition(const SkewShape& shape, const std::function<void(const Decomposition&)>& visit,
                                    int max_strips = -1, const OracleBounds& bounds = OracleBounds::from_env());
std::vector<Decomposition> enumerate_decompositions(const SkewShape& shape,
                                                    const OracleBounds& bounds = OracleBounds::from_env());

struct EndpointSets {
  std::vector<int> p;  // init contents, increasing
  std::vector<int> q;  // fin contents, increasing
  friend bool operator==(const EndpointSets&, const EndpointSets&) = default;
};

EndpointSets endpoint_content_sets(const Decomposition& d);

/// The sets predicted from the code: P = {e + w_i - 1}, Q = {e + y_i - 2}
/// with e = code_base_content(shape).
EndpointSets predicted_endpoint_sets(const SkewShape& shape);

/// Reads the strips of a minimal decomposition as an interval set: a strip
/// from content p to content q becomes the pair (p - e + 1, q - e + 2) with
/// e = code_base_content(shape), i.e. the inverse of the P and Q formulas.
IntervalSet interval_set_of(const SkewShape& shape, const Decomposition& d);

/// Sum of the heights of the greedy decomposition.
int z_statistic(const SkewShape& shape);

/// Each init has no shape cell to its left or none below it, each fin has
/// none to its right or none above it, and on each diagonal every cell that
/// is not the fin of its strip continues in the same direction.
bool is_outside_decomposition(const SkewShape& shape, const Decomposition& d);

enum class Direction { up, right };

/// One ribbon with a cell on every diagonal of a connected shape. Cell k has
/// content first_content + k; coordinates are relative, only contents and
/// the step pattern are meaningful.
struct CuttingStrip {
  int first_content = 0;
  /// Step from the cell of content first_content + k to the next one.
  std::vector<Direction> directions;
  std::vector<Cell> cells;

  int last_content() const { return first_content + static_cast<int>(cells.size()) - 1; }
  const Cell& at_content(int c) const { return cells[static_cast<std::size_t>(c - first_content)]; }
};

/// Throws InvariantError if the shape is not connected, the decomposition is
/// not an outside decomposition, or a diagonal mixes directions. Diagonals
/// holding only fin cells step right.
CuttingStrip cutting_strip(const SkewShape& shape, const Decomposition& d);

struct Segment {
  enum class Kind { strip, empty, undefined };
  Kind kind = Kind::undefined;
  std::vector<Cell> cells;
};

/// [p,q]: the cells of contents p..q when p <= q, empty when p = q + 1,
/// undefined when p > q + 1. Throws InvariantError if p <= q and either end
/// lies outside the strip.
Segment strip_segment(const CuttingStrip& phi, int p, int q);

}  // namespace zrank
