#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "zrank/config.hpp"
#include "zrank/error.hpp"
#include "zrank/matrix.hpp"
#include "zrank/polynomial.hpp"
#include "zrank/rational.hpp"

using namespace zrank;

TEST_CASE("fraction strings") {
  CHECK(to_fraction_string(make_rational(3)) == "3/1");
  CHECK(to_fraction_string(make_rational(0)) == "0/1");
  CHECK(to_fraction_string(make_rational(2, -4)) == "-1/2");
  CHECK(parse_fraction("6/4") == make_rational(3, 2));
  CHECK(parse_fraction("-7") == make_rational(-7));
  CHECK_THROWS_AS(parse_fraction("1/0"), ParseError);
  CHECK_THROWS_AS(parse_fraction("x"), ParseError);
}

TEST_CASE("polynomial arithmetic") {
  const RatPoly t = RatPoly::t();
  const RatPoly p = t * t - RatPoly(1);
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(3) == 8);
  CHECK(RatPoly::divide_exact(p, t - RatPoly(1)) == t + RatPoly(1));
  CHECK_THROWS_AS(RatPoly::divide_exact(p, t), InvariantError);
  CHECK((t * t * make_rational(1, 2)).valuation() == 2);
  CHECK(!RatPoly().valuation());
  CHECK(RatPoly().to_string() == "0");
}

TEST_CASE("integer and rational determinants") {
  RationalMatrix m{{make_rational(1, 3), make_rational(1, 2)}, {make_rational(1, 2), make_rational(1)}};
  CHECK(det_exact(m) == make_rational(1, 12));
  Matrix<Integer> z{{0, 1}, {1, 0}};
  CHECK(det_bareiss(z) == -1);
  Matrix<std::int64_t> big{{INT64_MAX, 1}, {1, INT64_MAX}};
  CHECK(!det_bareiss_i64(big));
}

TEST_CASE("determinants agree with the permutation expansion") {
  auto g = gen::rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(g, 1, 5));
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = gen::uniform(g, 0, 3) == 0 ? Rational(0) : make_rational(gen::uniform(g, -9, 9), gen::uniform(g, 1, 7));
    CHECK(det_exact(m) == oracle::leibniz_det(m));
    PolyMatrix pm(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) pm(i, j) = RatPoly(std::vector<Rational>{m(i, j), m(j, i)});
    CHECK(det_poly_cofactor(pm) == det_poly_bareiss(pm));
  }
}

TEST_CASE("oracle bound overrides") {
  const auto b = OracleBounds::defaults().with_overrides("ssyt_cells=5,interval_sets=7");
  CHECK(b.ssyt_cells == 5);
  CHECK(b.interval_sets == 7);
  CHECK(b.decomposition_cells == OracleBounds::defaults().decomposition_cells);
  CHECK_THROWS_AS(OracleBounds::defaults().with_overrides("nope=1"), ParseError);
  CHECK_THROWS_AS(OracleBounds::defaults().with_overrides("ssyt_cells=-1"), ParseError);
}
