#include "zrank/specialization.hpp"

#include <cstdint>
#include <optional>

#include "zrank/code.hpp"
#include "zrank/error.hpp"

namespace zrank {

RatPoly h_specialized(int m) {
  if (m < 0) return {};
  RatPoly p(1);
  Integer fact = 1;
  for (int i = 0; i < m; ++i) {
    p *= RatPoly(std::vector<Rational>{Rational(i), Rational(1)});
    fact *= i + 1;
  }
  p *= Rational(Integer(1), fact);
  return p;
}

Integer h_value(int m, long t) {
  if (t < 0) throw InvariantError("h_value needs t >= 0");
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (t == 0) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(t + m - 1), static_cast<unsigned long>(m));
  return out;
}

namespace {

int jt_subscript(const SkewShape& s, int i, int j) { return s.lambda_part(i) - s.mu_part(j) - i + j; }

}  // namespace

PolyMatrix jacobi_trudi_matrix(const SkewShape& shape) {
  const auto n = static_cast<std::size_t>(shape.rows());
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = h_specialized(jt_subscript(shape, static_cast<int>(i) + 1, static_cast<int>(j) + 1));
  return m;
}

Integer jacobi_trudi_value(const SkewShape& shape, long t) {
  const auto n = static_cast<std::size_t>(shape.rows());
  Matrix<Integer> big(n, n);
  Matrix<std::int64_t> small(n, n);
  bool fits = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      big(i, j) = h_value(jt_subscript(shape, static_cast<int>(i) + 1, static_cast<int>(j) + 1), t);
      if (fits && big(i, j).fits_slong_p())
        small(i, j) = big(i, j).get_si();
      else
        fits = false;
    }
  }
  if (fits) {
    if (auto d = det_bareiss_i64(std::move(small))) return Integer(static_cast<long>(*d));
  }
  return det_bareiss(std::move(big));
}

namespace {

using i128 = __int128;

std::optional<std::int64_t> h_value_i64(int m, long t) {
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (t == 0) return 0;
  i128 r = 1;
  for (int i = 0; i < m; ++i) {
    r = r * (t + i) / (i + 1);
    if (r > INT64_MAX) return std::nullopt;
  }
  return static_cast<std::int64_t>(r);
}

std::optional<std::int64_t> jacobi_trudi_value_i64(const SkewShape& shape, long t) {
  const auto n = static_cast<std::size_t>(shape.rows());
  Matrix<std::int64_t> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto h = h_value_i64(jt_subscript(shape, static_cast<int>(i) + 1, static_cast<int>(j) + 1), t);
      if (!h) return std::nullopt;
      m(i, j) = *h;
    }
  return det_bareiss_i64(std::move(m));
}

Integer to_integer(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer out(static_cast<unsigned long>(u >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(u & ~0UL);
  return neg ? Integer(-out) : out;
}

// n! times the monomial coefficients of s(1^t). Values at t = 0..n are
// turned into forward differences, then into the falling-factorial basis
// expanded in powers of t. Empty if anything leaves the machine range.
std::optional<std::vector<i128>> scaled_coefficients_fast(const SkewShape& shape) {
  const int n = shape.size();
  const auto N = static_cast<std::size_t>(n) + 1;
  std::vector<i128> diff(N);
  for (long t = 0; t <= n; ++t) {
    auto v = jacobi_trudi_value_i64(shape, t);
    if (!v) return std::nullopt;
    diff[static_cast<std::size_t>(t)] = *v;
  }
  for (int k = 1; k <= n; ++k)
    for (int i = n; i >= k; --i) diff[static_cast<std::size_t>(i)] -= diff[static_cast<std::size_t>(i - 1)];

  std::vector<i128> scales(N);
  i128 scale = 1;
  for (int k = n; k >= 0; --k) {
    scales[static_cast<std::size_t>(k)] = scale;
    if (k > 0 && __builtin_mul_overflow(scale, k, &scale)) return std::nullopt;
  }
  std::vector<i128> acc(N, 0);
  std::vector<i128> falling{1};
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      std::vector<i128> next(falling.size() + 1, 0);
      for (std::size_t j = 0; j < falling.size(); ++j) {
        i128 m;
        if (__builtin_mul_overflow(falling[j], k - 1, &m)) return std::nullopt;
        next[j + 1] += falling[j];
        next[j] -= m;
      }
      falling = std::move(next);
    }
    const i128 d = diff[static_cast<std::size_t>(k)];
    if (d == 0) continue;
    i128 f;
    if (__builtin_mul_overflow(d, scales[static_cast<std::size_t>(k)], &f)) return std::nullopt;
    for (std::size_t j = 0; j < falling.size(); ++j) {
      i128 term;
      if (__builtin_mul_overflow(f, falling[j], &term) || __builtin_add_overflow(acc[j], term, &acc[j]))
        return std::nullopt;
    }
  }
  return acc;
}

std::vector<Integer> scaled_coefficients_exact(const SkewShape& shape) {
  const int n = shape.size();
  // diff[k] becomes the k-th forward difference at t = 0.
  std::vector<Integer> diff;
  diff.reserve(static_cast<std::size_t>(n) + 1);
  for (long t = 0; t <= n; ++t) diff.push_back(jacobi_trudi_value(shape, t));
  for (int k = 1; k <= n; ++k)
    for (int i = n; i >= k; --i) diff[static_cast<std::size_t>(i)] -= diff[static_cast<std::size_t>(i - 1)];

  // sum_k diff[k] * C(t, k), scaled by n! to stay in the integers.
  std::vector<Integer> acc(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Integer> falling{1};  // t (t-1) ... (t-k+1)
  Integer scale = 1;                // n! / k!, built downward
  std::vector<Integer> scales(static_cast<std::size_t>(n) + 1);
  for (int k = n; k >= 0; --k) {
    scales[static_cast<std::size_t>(k)] = scale;
    scale *= k == 0 ? 1 : k;
  }
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      std::vector<Integer> next(falling.size() + 1, 0);
      for (std::size_t j = 0; j < falling.size(); ++j) {
        next[j + 1] += falling[j];
        next[j] -= falling[j] * (k - 1);
      }
      falling = std::move(next);
    }
    const auto& d = diff[static_cast<std::size_t>(k)];
    if (d == 0) continue;
    const Integer f = d * scales[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < falling.size(); ++j) acc[j] += f * falling[j];
  }
  return acc;
}

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

std::vector<Integer> scaled_coefficients(const SkewShape& shape) {
  if (auto fast = scaled_coefficients_fast(shape)) {
    std::vector<Integer> out;
    out.reserve(fast->size());
    for (i128 v : *fast) out.push_back(to_integer(v));
    return out;
  }
  return scaled_coefficients_exact(shape);
}

}  // namespace

RatPoly skew_schur_specialized(const SkewShape& shape) {
  const int n = shape.size();
  if (n == 0) return RatPoly(1);
  const Integer n_fact = factorial(n);
  std::vector<Rational> coeffs;
  for (auto& a : scaled_coefficients(shape)) {
    Rational q{a, n_fact};
    q.canonicalize();
    coeffs.push_back(std::move(q));
  }
  return RatPoly(std::move(coeffs));
}

int zrank_of(const SkewShape& shape) {
  if (shape.empty()) return 0;
  if (auto fast = scaled_coefficients_fast(shape)) {
    for (std::size_t j = 0; j < fast->size(); ++j)
      if ((*fast)[j] != 0) return static_cast<int>(j);
  } else {
    auto v = skew_schur_specialized(shape).valuation();
    if (v) return *v;
  }
  throw InvariantError("s(1^t) vanished identically for " + shape.to_string());
}

Rational y_value(const SkewShape& shape) {
  if (shape.empty()) return 1;
  const auto acc = scaled_coefficients(shape);
  Rational q{acc[static_cast<std::size_t>(rank_of(shape))], factorial(shape.size())};
  q.canonicalize();
  return q;
}

Rational ribbon_y(const SkewShape& shape) {
  if (!is_border_strip(shape)) throw InvariantError(shape.to_string() + " is not a border strip");
  const auto cells = shape.cells();
  const SkewShape box = shape_from_cells(cells);
  const int l = box.rows();
  Rational out(Integer(1), Integer(box.cols() + l - 1));
  out.canonicalize();
  return l % 2 == 1 ? out : Rational(-out);
}

namespace {

struct TableauCounter {
  const SkewShape& shape;
  std::vector<Cell> cells;
  std::vector<std::vector<int>> grid;  // entries by (row, col); 0 = unfilled or outside
  int t;
  std::int64_t count = 0;

  void fill(std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const Cell c = cells[k];
    int lo = 1;
    if (shape.contains({c.row, c.col - 1})) lo = std::max(lo, grid[c.row][c.col - 1]);
    if (shape.contains({c.row - 1, c.col})) lo = std::max(lo, grid[c.row - 1][c.col] + 1);
    for (int v = lo; v <= t; ++v) {
      grid[c.row][c.col] = v;
      fill(k + 1);
    }
    grid[c.row][c.col] = 0;
  }
};

}  // namespace

std::int64_t ssyt_count(const SkewShape& shape, int t, const OracleBounds& bounds) {
  if (t < 0) throw InvariantError("ssyt_count needs t >= 0");
  if (shape.size() > bounds.ssyt_cells || t > bounds.ssyt_max_t)
    throw BoundError("tableau enumeration limited to " + std::to_string(bounds.ssyt_cells) + " cells and t <= " +
                     std::to_string(bounds.ssyt_max_t));
  TableauCounter tc{shape, shape.cells(), {}, t};
  tc.grid.assign(static_cast<std::size_t>(shape.rows()) + 1,
                 std::vector<int>(static_cast<std::size_t>(shape.cols()) + 1, 0));
  tc.fill(0);
  return tc.count;
}

}  // namespace zrank
