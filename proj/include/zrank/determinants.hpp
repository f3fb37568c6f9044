#pragma once

#include <vector>

#include "zrank/config.hpp"
#include "zrank/matrix.hpp"
#include "zrank/shape.hpp"
#include "zrank/strips.hpp"

namespace zrank {

/// d_ij = 1/(y_j - w_i) if y_j > w_i, else 0, where (w_i, y_i) are the pairs
/// of the noncrossing interval set in increasing order of w.
struct IntervalMatrix {
  std::vector<int> w;
  std::vector<int> y;
  RationalMatrix d;
};

IntervalMatrix interval_matrix(const SkewShape& shape);

/// (-1)^z det(d_ij).
Rational y_via_determinant(const SkewShape& shape);

/// (-1)^z times the sum over all interval sets I of (-1)^cr(I) / prod(v_i - u_i).
/// Throws BoundError if the shape has more than bounds.interval_sets
/// interval sets.
Rational y_via_interval_expansion(const SkewShape& shape, const OracleBounds& bounds = OracleBounds::from_env());

/// det(s_[init(B_i), fin(B_j)](1^t)) over the strips of an outside
/// decomposition of a connected shape; [p,q] entries are the cutting strip
/// segments, the empty segment counts 1 and an undefined one 0.
RatPoly hamel_goulden_specialized(const SkewShape& shape, const Decomposition& d);

/// The same determinant built on each connected component (re-anchored in
/// its own bounding box) from its greedy or row decomposition, multiplied
/// over components.
enum class DecompositionKind { greedy, rows };
RatPoly hamel_goulden_by_components(const SkewShape& shape, DecompositionKind kind);

/// Row indices of the cutting strip cells that sit on the init and fin
/// contents of the greedy decomposition, and whether their difference of
/// sums has the parity of z. Requires a connected shape.
struct SignCheck {
  std::vector<int> p;
  std::vector<int> q;
  int z = 0;
  bool ok = false;
};
SignCheck thmain_sign_check(const SkewShape& shape);

/// The symbolic Jacobi-Trudi subscripts lambda_i - mu_j - i + j.
Matrix<int> jt_subscripts(const SkewShape& shape);

/// Rows and columns holding a zero subscript (h_0 = 1) are deleted; each
/// remaining subscript s becomes 1/s if positive and 0 if negative.
RationalMatrix jt_deletion_matrix(const SkewShape& shape);

}  // namespace zrank
