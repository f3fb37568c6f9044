#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zrank {

/// A square of a Young diagram in matrix coordinates: rows grow downward,
/// columns grow rightward, both 1-based.
struct Cell {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Diagonal index of a cell: column minus row.
constexpr int content(Cell c) { return c.col - c.row; }

class Partition {
 public:
  Partition() = default;
  /// Throws InvariantError unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  /// 1-based part; zero past the length.
  int part(int i) const { return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// The skew diagram lambda/mu. mu is treated as zero-padded to length(lambda).
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws InvariantError unless mu is contained in lambda.
  SkewShape(Partition lambda, Partition mu = {});

  const Partition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }
  int rows() const { return lambda_.length(); }
  int cols() const { return lambda_.part(1); }
  int lambda_part(int i) const { return lambda_.part(i); }
  int mu_part(int i) const { return mu_.part(i); }

  bool contains(Cell c) const {
    return c.row >= 1 && c.row <= rows() && c.col > mu_part(c.row) && c.col <= lambda_part(c.row);
  }
  int size() const { return lambda_.weight() - mu_.weight(); }
  bool empty() const { return size() == 0; }
  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  /// Literal form "7,6,6,3/3,1"; "/mu" is omitted when mu is empty, and an
  /// empty lambda renders as "0".
  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition lambda_;
  Partition mu_;
};

/// Parses `parts ("/" parts)?` with `parts ::= int ("," int)*`, positive
/// base-10 integers, no whitespace. Throws ParseError or InvariantError.
SkewShape parse_shape(std::string_view text);

/// Cells grouped by content, each group in increasing row order.
std::map<int, std::vector<Cell>> diagonals(const SkewShape& shape);

/// Edgewise connectivity; the empty shape counts as connected.
bool is_connected(const SkewShape& shape);

/// Connected components (edge adjacency), each sorted by content then row,
/// listed in increasing order of their smallest content.
std::vector<std::vector<Cell>> connected_components(const SkewShape& shape);

/// Connected with no 2x2 block. The empty shape is not a border strip.
bool is_border_strip(const SkewShape& shape);

/// Block test used for decomposition pieces: nonempty, one cell per content,
/// contents contiguous, and consecutive-content cells edge-adjacent.
bool is_border_strip(std::span<const Cell> cells);

/// Re-anchors a cell set that forms a skew diagram into its own bounding box
/// (no empty rows or columns at the border). Throws InvariantError if the
/// cells do not form a skew diagram.
SkewShape shape_from_cells(std::span<const Cell> cells);

// ---------------------------------------------------------------------------
// Enumeration

struct ShapeBounds {
  int max_cells = 1;
  int max_rows = 1;  // bound on length(lambda)
  int max_cols = 1;  // bound on lambda_1

  /// The box max_cells x max_cells, which holds every tight shape.
  static ShapeBounds cells(int n) { return {n, n, n}; }
};

enum class ShapeFamily {
  /// Every lambda/mu inside the box with 1..max_cells cells and mu_1 < lambda_1.
  /// Translates of the same diagram (empty rows or columns) all appear.
  canonical,
  /// The canonical shapes with no empty row and no empty column: one
  /// representative per diagram up to translation of its components.
  tight,
};

/// Calls `visit` for every shape of the family within the bounds, in a fixed
/// order. Returns the number of shapes visited.
std::int64_t for_each_shape(const ShapeBounds& bounds, ShapeFamily family,
                            const std::function<void(const SkewShape&)>& visit);

std::vector<SkewShape> enumerate_shapes(const ShapeBounds& bounds,
                                        ShapeFamily family = ShapeFamily::canonical);
/// Convenience: canonical shapes with at most max_cells cells in the
/// max_cells x max_cells box.
std::vector<SkewShape> enumerate_shapes(int max_cells);

bool is_tight(const SkewShape& shape);

}  // namespace zrank
