#pragma once

#include <cstdint>

#include "zrank/config.hpp"
#include "zrank/matrix.hpp"
#include "zrank/polynomial.hpp"
#include "zrank/shape.hpp"

namespace zrank {

/// h_m(1^t) = C(t+m-1, m) as a polynomial in t; 1 for m = 0, 0 for m < 0.
RatPoly h_specialized(int m);

/// h_m(1^t) at a nonnegative integer t.
Integer h_value(int m, long t);

/// The Jacobi-Trudi matrix (h_{lambda_i - mu_j - i + j}(1^t)) over Q[t].
PolyMatrix jacobi_trudi_matrix(const SkewShape& shape);

/// Jacobi-Trudi determinant at a nonnegative integer t.
Integer jacobi_trudi_value(const SkewShape& shape, long t);

/// s_{lambda/mu}(1^t). The Jacobi-Trudi determinant is a polynomial of
/// degree |lambda/mu|; it is evaluated exactly at t = 0..|lambda/mu| and
/// interpolated through the Newton forward-difference form.
RatPoly skew_schur_specialized(const SkewShape& shape);

/// Multiplicity of t = 0 as a root of s_{lambda/mu}(1^t); 0 for the empty shape.
int zrank_of(const SkewShape& shape);

/// Coefficient of t^rank in s_{lambda/mu}(1^t); 1 for the empty shape.
Rational y_value(const SkewShape& shape);

/// (-1)^(l+1) / (lambda_1 + l - 1) for a border strip, with lambda_1 and l
/// read from the strip's own bounding box. Throws InvariantError if the shape
/// is not a border strip.
Rational ribbon_y(const SkewShape& shape);

/// Brute-force count of semistandard fillings with entries 1..t. Throws
/// BoundError past bounds.ssyt_cells or bounds.ssyt_max_t.
std::int64_t ssyt_count(const SkewShape& shape, int t, const OracleBounds& bounds = OracleBounds::from_env());

}  // namespace zrank
