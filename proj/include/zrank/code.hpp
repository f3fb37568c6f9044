#pragma once

#include <string>
#include <vector>

#include "zrank/shape.hpp"

namespace zrank {

/// Two-line binary encoding of a skew shape. The bottom row traces the
/// boundary of lambda from the bottom-left corner of its bounding box to the
/// top-right corner (0 = step right, 1 = step up); the top row traces mu,
/// zero-padded to length(lambda), between the same two corners.
struct ReducedCode {
  std::vector<int> top;
  std::vector<int> bottom;
  /// The shape the code describes. Diagnostic only; not part of equality.
  SkewShape origin;

  int length() const { return static_cast<int>(top.size()); }
  /// Two lines of space-separated bits, top first.
  std::string to_string() const;

  friend bool operator==(const ReducedCode& a, const ReducedCode& b) {
    return a.top == b.top && a.bottom == b.bottom;
  }
};

ReducedCode reduced_code(const SkewShape& shape);

/// Number of columns reading 1 over 0.
int rank_of(const ReducedCode& code);
inline int rank_of(const SkewShape& shape) { return rank_of(reduced_code(shape)); }

/// 1-based indices of the 1-over-0 columns (w) and 0-over-1 columns (y),
/// each increasing.
struct ColumnSets {
  std::vector<int> w;
  std::vector<int> y;
};
ColumnSets code_column_sets(const ReducedCode& code);

/// Reads lambda from the bottom row and mu from the top row. Zero parts and
/// trailing right-steps are allowed; throws InvariantError if the rows have
/// different lengths or numbers of ones, or if mu is not inside lambda.
SkewShape decode_code(const std::vector<int>& top, const std::vector<int>& bottom);

/// Turns column i (1-based, 1 over 0) into 1 over 1 and column i+p
/// (0 over 1) into 0 over 0, which removes a border strip of p cells.
/// Throws InvariantError if the columns do not have those forms or the
/// result is not the code of a skew shape.
ReducedCode remove_strip_on_code(const ReducedCode& code, int i, int p);

/// Content of the bottom-left cell of lambda's bounding box, 1 - length(lambda).
int code_base_content(const SkewShape& shape);

}  // namespace zrank
