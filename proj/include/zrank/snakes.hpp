#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zrank/shape.hpp"

namespace zrank {

struct SnakeSymbol {
  enum class Kind { L, R, O };
  Kind kind = Kind::O;
  int m = 0;  // half-length; meaningful for L and R only

  std::string to_string() const;
  friend bool operator==(const SnakeSymbol&, const SnakeSymbol&) = default;
};

struct SnakeSequence {
  std::vector<SnakeSymbol> symbols;
  /// Cells of each snake in walk order, one list per boundary edge.
  std::vector<std::vector<Cell>> raw;

  int length() const { return static_cast<int>(symbols.size()); }
  /// 1-based positions of the L symbols, increasing.
  std::vector<int> left_positions() const;
  /// 1-based positions of the R symbols, increasing.
  std::vector<int> right_positions() const;
  /// "L0 L1 O ... R0"
  std::string to_string() const;
};

/// Walks the boundary edges of lambda's bounding box path from the bottom-left
/// corner to the top-right corner. A rightward edge takes the cell above it and
/// zigzags left first: (i,j), (i,j-1), (i-1,j-1), (i-1,j-2), ...; an upward
/// edge takes the cell to its left and zigzags up first: (i,j), (i-1,j),
/// (i-1,j-1), (i-2,j-1), ... Each walk stops at the first cell outside the
/// shape. A snake with 2m+1 cells (length 2m) is L_m on a rightward edge and
/// R_m on an upward edge; every other snake is O.
SnakeSequence snake_sequence(const SkewShape& shape);

/// Matching of L positions (u) to R positions (v), stored sorted by u.
struct IntervalSet {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  /// "{(1,12),(3,11),(4,5),(8,9)}"
  std::string to_string() const;
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
};

/// Stack matching; the unique interval set with no crossings. Throws
/// InvariantError if the L and R symbols do not balance.
IntervalSet noncrossing_interval_set(const SnakeSequence& seq);

/// Visits every interval set: each L position (in increasing order) is
/// assigned a distinct later R position. Order is lexicographic in the
/// assignment vector. Returns the number visited.
std::int64_t for_each_interval_set(const SnakeSequence& seq, const std::function<void(const IntervalSet&)>& visit);
std::vector<IntervalSet> enumerate_interval_sets(const SnakeSequence& seq);
/// Number of interval sets, computed without listing them.
std::int64_t count_interval_sets(const SnakeSequence& seq);

/// Pairs (i,j) with u_i < u_j < v_i < v_j.
int crossings(const IntervalSet& set);

struct IntervalPermutation {
  std::vector<int> sigma;  // 1-based values
  int inversions = 0;
};

/// sigma_i = j where v_i (of `set`) equals y_j, the j-th second coordinate of
/// `base` (both sorted by first coordinate). Throws InvariantError if the two
/// sets do not share their L and R positions.
IntervalPermutation interval_permutation(const IntervalSet& set, const IntervalSet& base);

}  // namespace zrank
