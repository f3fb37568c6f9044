#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "oracles.hpp"
#include "zrank/code.hpp"
#include "zrank/error.hpp"

using namespace zrank;

namespace {
std::vector<int> bits(const char* s) {
  std::vector<int> v;
  for (; *s; ++s)
    if (*s == '0' || *s == '1') v.push_back(*s - '0');
  return v;
}
}  // namespace

TEST_CASE("reduced code examples") {
  const auto c = reduced_code(parse_shape("5,4,3,2/2,1,1"));
  CHECK(c.top == bits("1 0 1 1 0 1 0 0 0"));
  CHECK(c.bottom == bits("0 0 1 0 1 0 1 0 1"));
  CHECK(c.to_string() == "1 0 1 1 0 1 0 0 0\n0 0 1 0 1 0 1 0 1");
  CHECK(rank_of(c) == 3);
  const auto cols = code_column_sets(c);
  CHECK(cols.w == std::vector<int>{1, 4, 6});
  CHECK(cols.y == std::vector<int>{5, 7, 9});
  CHECK(code_base_content(parse_shape("5,4,3,2/2,1,1")) == -3);

  const auto one = reduced_code(parse_shape("1"));
  CHECK(one.top == bits("10"));
  CHECK(one.bottom == bits("01"));

  const auto sq = reduced_code(parse_shape("2,2"));
  CHECK(sq.top == bits("1100"));
  CHECK(sq.bottom == bits("0011"));
  CHECK(rank_of(sq) == 2);
  CHECK(code_column_sets(sq).w == std::vector<int>{1, 2});
  CHECK(code_column_sets(sq).y == std::vector<int>{3, 4});

  const auto empty = reduced_code(parse_shape("3,2/3,2"));
  CHECK(rank_of(empty) == 0);
  CHECK(code_column_sets(empty).w.empty());
  CHECK(code_column_sets(empty).y.empty());
}

TEST_CASE("removing a strip on the code") {
  const auto sq = reduced_code(parse_shape("2,2"));
  const auto r = remove_strip_on_code(sq, 1, 3);
  CHECK(r.top == bits("1100"));
  CHECK(r.bottom == bits("1010"));
  CHECK(rank_of(r) == 1);
  CHECK(decode_code(r.top, r.bottom).size() == 1);

  const auto one = remove_strip_on_code(reduced_code(parse_shape("1")), 1, 1);
  CHECK(one.top == bits("10"));
  CHECK(one.bottom == bits("10"));
  CHECK(decode_code(one.top, one.bottom).empty());

  CHECK_THROWS_AS(remove_strip_on_code(sq, 3, 1), InvariantError);
  CHECK_THROWS_AS(remove_strip_on_code(sq, 1, 9), InvariantError);
}

TEST_CASE("decode rejects malformed rows") {
  CHECK_THROWS_AS(decode_code(bits("10"), bits("011")), InvariantError);
  CHECK_THROWS_AS(decode_code(bits("11"), bits("01")), InvariantError);
  CHECK_THROWS_AS(decode_code(bits("01"), bits("10")), InvariantError);
  CHECK_THROWS_AS(decode_code({2, 0}, {0, 1}), InvariantError);
}

TEST_CASE("code properties") {
  auto g = gen::rng(2);
  for (int trial = 0; trial < 400; ++trial) {
    const auto s = gen::shape(g, 6, 6);
    CAPTURE(s.to_string());
    const auto c = reduced_code(s);
    const auto [top, bottom] = oracle::code_rows(s);
    CHECK(c.top == top);
    CHECK(c.bottom == bottom);
    CHECK(decode_code(c.top, c.bottom) == s);

    const auto cols = code_column_sets(c);
    const int r = rank_of(c);
    REQUIRE(static_cast<int>(cols.w.size()) == r);
    REQUIRE(static_cast<int>(cols.y.size()) == r);
    // Each prefix holds at least as many w columns as y columns.
    for (int k = 1; k <= c.length(); ++k)
      CHECK(std::count_if(cols.w.begin(), cols.w.end(), [&](int x) { return x <= k; }) >=
            std::count_if(cols.y.begin(), cols.y.end(), [&](int x) { return x <= k; }));
    auto ydesc = cols.y;
    std::reverse(ydesc.begin(), ydesc.end());
    for (int i = 0; i < r; ++i)
      CHECK(ydesc[static_cast<std::size_t>(i)] > cols.w[static_cast<std::size_t>(r - 1 - i)]);

    for (int i : cols.w)
      for (int j : cols.y) {
        if (j <= i) continue;
        try {
          const auto after = remove_strip_on_code(c, i, j - i);
          CHECK(rank_of(after) == r - 1);
          CHECK(decode_code(after.top, after.bottom).size() == s.size() - (j - i));
        } catch (const InvariantError&) {
        }
      }
  }
}

TEST_CASE("rank is the fewest strips in any decomposition") {
  auto g = gen::rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    auto s = gen::shape(g, 4, 5);
    if (s.size() > 9) continue;
    CAPTURE(s.to_string());
    CHECK(rank_of(s) == oracle::strip_census(s).min_strips);
  }
}
