#include "zrank/matrix.hpp"

#include <limits>
#include <sstream>

namespace zrank {

namespace {

// Moves a nonzero entry of column k (rows >= k) onto the diagonal.
// Returns false if the column is zero there; flips `sign` on a swap.
template <class T, class IsZero>
bool pivot(Matrix<T>& m, std::size_t k, int& sign, IsZero is_zero) {
  if (!is_zero(m(k, k))) return true;
  for (std::size_t i = k + 1; i < m.rows(); ++i) {
    if (!is_zero(m(i, k))) {
      m.swap_rows(i, k);
      sign = -sign;
      return true;
    }
  }
  return false;
}

void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) throw InvariantError("determinant of a non-square matrix");
}

}  // namespace

Integer det_bareiss(Matrix<Integer> m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign, [](const Integer& x) { return x == 0; })) return 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<std::int64_t> det_bareiss_i64(Matrix<std::int64_t> m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  std::int64_t prev = 1;
  constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign, [](std::int64_t x) { return x == 0; })) return 0;
    const __int128 p = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const __int128 a = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(m(i, j)) * p - a * m(k, j);
        if (prev != 1) v /= prev;
        if (v < lo || v > hi) return std::nullopt;
        m(i, j) = static_cast<std::int64_t>(v);
      }
    }
    prev = m(k, k);
  }
  const std::int64_t last = m(n - 1, n - 1);
  if (sign < 0 && last == std::numeric_limits<std::int64_t>::min()) return std::nullopt;
  return sign * last;
}

Rational det_exact(const RationalMatrix& m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  Matrix<Integer> scaled(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    scale *= row_lcm;
  }
  Rational det{det_bareiss(std::move(scaled)), scale};
  det.canonicalize();
  return det;
}

Rational cofactor(const RationalMatrix& m, std::size_t i, std::size_t j) {
  Rational minor = det_exact(m.minor_matrix(i, j));
  return ((i + j) % 2 == 0) ? minor : Rational(-minor);
}

RatPoly det_poly_cofactor(const PolyMatrix& m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return RatPoly(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  RatPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    RatPoly term = m(0, j) * det_poly_cofactor(m.minor_matrix(0, j));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

RatPoly det_poly_bareiss(PolyMatrix m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return RatPoly(1);
  int sign = 1;
  RatPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign, [](const RatPoly& x) { return x.is_zero(); })) return {};
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        RatPoly v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = RatPoly::divide_exact(v, prev);
      }
    }
    prev = m(k, k);
  }
  RatPoly d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

RatPoly det_poly(const PolyMatrix& m) {
  return m.rows() < 6 ? det_poly_cofactor(m) : det_poly_bareiss(m);
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace zrank
