#include "zrank/determinants.hpp"

#include "zrank/error.hpp"
#include "zrank/snakes.hpp"
#include "zrank/specialization.hpp"

namespace zrank {

IntervalMatrix interval_matrix(const SkewShape& shape) {
  const IntervalSet base = noncrossing_interval_set(snake_sequence(shape));
  IntervalMatrix m;
  for (const auto& [u, v] : base.pairs) {
    m.w.push_back(u);
    m.y.push_back(v);
  }
  const std::size_t r = m.w.size();
  m.d = RationalMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (m.y[j] > m.w[i]) m.d(i, j) = make_rational(1, m.y[j] - m.w[i]);
  return m;
}

Rational y_via_determinant(const SkewShape& shape) {
  Rational det = det_exact(interval_matrix(shape).d);
  return z_statistic(shape) % 2 == 0 ? det : Rational(-det);
}

Rational y_via_interval_expansion(const SkewShape& shape, const OracleBounds& bounds) {
  const SnakeSequence seq = snake_sequence(shape);
  const std::int64_t count = count_interval_sets(seq);
  if (count > bounds.interval_sets)
    throw BoundError(shape.to_string() + " has " + std::to_string(count) + " interval sets, above the limit of " +
                     std::to_string(bounds.interval_sets));
  Rational sum = 0;
  for_each_interval_set(seq, [&](const IntervalSet& set) {
    Integer prod = 1;
    for (const auto& [u, v] : set.pairs) prod *= v - u;
    Rational term(Integer(crossings(set) % 2 == 0 ? 1 : -1), prod);
    term.canonicalize();
    sum += term;
  });
  return z_statistic(shape) % 2 == 0 ? sum : Rational(-sum);
}

RatPoly hamel_goulden_specialized(const SkewShape& shape, const Decomposition& d) {
  const CuttingStrip phi = cutting_strip(shape, d);
  const auto k = static_cast<std::size_t>(d.size());
  PolyMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Segment seg = strip_segment(phi, d.strips[i].init_content(), d.strips[j].fin_content());
      switch (seg.kind) {
        case Segment::Kind::strip: m(i, j) = skew_schur_specialized(shape_from_cells(seg.cells)); break;
        case Segment::Kind::empty: m(i, j) = RatPoly(1); break;
        case Segment::Kind::undefined: break;
      }
    }
  }
  return det_poly(m);
}

RatPoly hamel_goulden_by_components(const SkewShape& shape, DecompositionKind kind) {
  RatPoly out(1);
  for (const auto& comp : connected_components(shape)) {
    const SkewShape part = shape_from_cells(comp);
    const Decomposition d = kind == DecompositionKind::greedy ? greedy_decomposition(part) : row_decomposition(part);
    out *= hamel_goulden_specialized(part, d);
  }
  return out;
}

SignCheck thmain_sign_check(const SkewShape& shape) {
  SignCheck sc;
  if (shape.empty()) {
    sc.ok = true;
    return sc;
  }
  const Decomposition d = greedy_decomposition(shape);
  const CuttingStrip phi = cutting_strip(shape, d);
  int diff = 0;
  for (const auto& b : d.strips) {
    sc.p.push_back(phi.at_content(b.init_content()).row);
    sc.q.push_back(phi.at_content(b.fin_content()).row);
    sc.z += b.height();
    diff += sc.p.back() - sc.q.back();
  }
  sc.ok = (diff - sc.z) % 2 == 0;
  return sc;
}

Matrix<int> jt_subscripts(const SkewShape& shape) {
  const auto n = static_cast<std::size_t>(shape.rows());
  Matrix<int> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int a = static_cast<int>(i) + 1;
      const int b = static_cast<int>(j) + 1;
      m(i, j) = shape.lambda_part(a) - shape.mu_part(b) - a + b;
    }
  }
  return m;
}

RationalMatrix jt_deletion_matrix(const SkewShape& shape) {
  const Matrix<int> s = jt_subscripts(shape);
  const std::size_t n = s.rows();
  std::vector<bool> row_zero(n, false), col_zero(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s(i, j) == 0) row_zero[i] = col_zero[j] = true;
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (!row_zero[i]) rows.push_back(i);
    if (!col_zero[i]) cols.push_back(i);
  }
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (const int v = s(rows[i], cols[j]); v > 0) out(i, j) = make_rational(1, v);
  return out;
}

}  // namespace zrank
