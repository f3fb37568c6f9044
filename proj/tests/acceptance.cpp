// Acceptance runner: one line per criterion, exit status 0 only if every
// selected criterion passes within its time target.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "zrank/cauchy.hpp"
#include "zrank/code.hpp"
#include "zrank/determinants.hpp"
#include "zrank/snakes.hpp"
#include "zrank/specialization.hpp"
#include "zrank/strips.hpp"

using namespace zrank;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Every canonical shape with at most `cells` cells inside the box. When the
// box is narrower than `cells`, the tight shapes (one per diagram up to
// translation, all inside the cells x cells box) are run as well.
struct Scope {
  int cells;
  int box;
};

std::string scoped(const Scope& s, const std::function<void(const SkewShape&)>& visit) {
  std::ostringstream o;
  if (s.box < s.cells) {
    const auto tight = for_each_shape(ShapeBounds::cells(s.cells), ShapeFamily::tight, visit);
    o << tight << " tight shapes <= " << s.cells << " cells + ";
  }
  const auto boxed = for_each_shape({s.cells, s.box, s.box}, ShapeFamily::canonical, visit);
  o << boxed << " canonical shapes <= " << s.cells << " cells with lambda_1, l <= " << s.box;
  return o.str();
}

Outcome criterion1() {
  Outcome o;
  auto expect = [&](const std::string& what, const std::string& got, const std::string& want) {
    if (got != want) o.fail(what + ": got '" + got + "', want '" + want + "'");
  };
  expect("snakes of 7,6,6,3/3,1", snake_sequence(parse_shape("7,6,6,3/3,1")).to_string(),
         "L0 L1 O O O O L2 R2 R1 O R0");
  const auto fig = snake_sequence(parse_shape("8,8,7,4/4,1,1"));
  expect("snakes of 8,8,7,4/4,1,1", fig.to_string(), "L0 O L1 L2 R2 O O L2 R2 O R1 R0");
  const auto base = noncrossing_interval_set(fig);
  expect("I0 of 8,8,7,4/4,1,1", base.to_string(), "{(1,12),(3,11),(4,5),(8,9)}");
  expect("code of 5,4,3,2/2,1,1", reduced_code(parse_shape("5,4,3,2/2,1,1")).to_string(),
         "1 0 1 1 0 1 0 0 0\n0 0 1 0 1 0 1 0 1");
  const IntervalSet i{{{1, 9}, {3, 12}, {4, 5}, {8, 11}}};
  const auto p = interval_permutation(i, base);
  std::string sigma = "[";
  for (std::size_t k = 0; k < p.sigma.size(); ++k) sigma += (k ? "," : "") + std::to_string(p.sigma[k]);
  sigma += "]";
  expect("sigma", sigma, "[4,1,3,2]");
  expect("cr", std::to_string(crossings(i)), "2");
  expect("inv", std::to_string(p.inversions), "4");
  o.detail = "snake sequences, I0, reduced code, sigma = " + sigma + ", cr = 2, inv = 4";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::int64_t shapes = 0, sets = 0;
  const ShapeBounds b{12, 6, 6};
  for_each_shape(b, ShapeFamily::canonical, [&](const SkewShape& s) {
    ++shapes;
    const auto seq = snake_sequence(s);
    const auto base = noncrossing_interval_set(seq);
    for_each_interval_set(seq, [&](const IntervalSet& is) {
      ++sets;
      if ((crossings(is) - interval_permutation(is, base).inversions) % 2 != 0)
        o.fail(s.to_string() + " " + is.to_string());
    });
  });
  o.detail = std::to_string(shapes) + " canonical shapes <= 12 cells in the 6x6 box, " + std::to_string(sets) +
             " interval sets";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::int64_t n = 0;
  const auto scope = scoped({10, 8}, [&](const SkewShape& s) {
    ++n;
    const Rational a = y_value(s), b = y_via_determinant(s), c = y_via_interval_expansion(s);
    if (a != b || b != c)
      o.fail(s.to_string() + ": " + to_fraction_string(a) + " " + to_fraction_string(b) + " " + to_fraction_string(c));
  });
  o.detail = "y three ways on " + scope;
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::int64_t n = 0;
  for_each_shape({14, 8, 8}, ShapeFamily::canonical, [&](const SkewShape& s) {
    ++n;
    if (zrank_of(s) != rank_of(s)) o.fail(s.to_string());
  });
  o.detail = "zrank = rank on " + std::to_string(n) + " canonical shapes <= 14 cells with lambda_1, l <= 8";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::int64_t n = 0;
  const auto scope = scoped({8, 8}, [&](const SkewShape& s) {
    ++n;
    const auto p = skew_schur_specialized(s);
    for (int t = 1; t <= 4; ++t)
      if (p.evaluate(Rational(t)) != Rational(ssyt_count(s, t)))
        o.fail(s.to_string() + " at t = " + std::to_string(t));
  });
  o.detail = "s(1^t) = #SSYT for t = 1..4 on " + scope;
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::int64_t n = 0;
  const auto scope = scoped({10, 8}, [&](const SkewShape& s) {
    if (!is_connected(s)) return;
    ++n;
    const auto p = skew_schur_specialized(s);
    if (hamel_goulden_specialized(s, greedy_decomposition(s)) != p) o.fail(s.to_string() + " (greedy)");
    if (hamel_goulden_specialized(s, row_decomposition(s)) != p) o.fail(s.to_string() + " (rows)");
  });
  o.detail = "greedy and row determinants on " + std::to_string(n) + " connected shapes from " + scope;
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::int64_t n = 0, minimal_total = 0, count_mismatch = 0, pairing_mismatch = 0;
  std::string count_example;
  const auto scope = scoped({9, 9}, [&](const SkewShape& s) {
    ++n;
    const int r = rank_of(s);
    const auto predicted = predicted_endpoint_sets(s);
    std::int64_t minimal = 0;
    std::set<std::vector<std::pair<int, int>>> pairings;
    bool below = false;
    for_each_decomposition(
        s,
        [&](const Decomposition& d) {
          if (d.size() < r) below = true;
          if (d.size() != r) return;
          ++minimal;
          if (endpoint_content_sets(d) != predicted) o.fail(s.to_string() + ": P/Q differ from the code formulas");
          pairings.insert(interval_set_of(s, d).pairs);
        },
        r);
    if (below) o.fail(s.to_string() + ": a decomposition beats the rank");
    minimal_total += minimal;
    const auto seq = snake_sequence(s);
    const auto sets = count_interval_sets(seq);
    std::set<std::vector<std::pair<int, int>>> expected;
    for_each_interval_set(seq, [&](const IntervalSet& is) { expected.insert(is.pairs); });
    if (pairings != expected) ++pairing_mismatch;
    if (minimal != sets) {
      if (count_mismatch++ == 0)
        count_example = s.to_string() + " has " + std::to_string(minimal) + " minimal decompositions and " +
                        std::to_string(sets) + " interval sets";
    }
  });
  if (pairing_mismatch) o.fail(std::to_string(pairing_mismatch) + " shapes where pairings and interval sets differ");
  if (count_mismatch)
    o.fail("minimal-decomposition count != interval-set count on " + std::to_string(count_mismatch) + " shapes, e.g. " +
           count_example);
  o.detail = "P/Q invariance over " + std::to_string(minimal_total) + " minimal decompositions on " + scope +
             "; endpoint pairings match interval sets on " + std::to_string(n - pairing_mismatch) + "/" +
             std::to_string(n) + " shapes; counts equal on " + std::to_string(n - count_mismatch) + "/" +
             std::to_string(n);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto rep = nonsingularity_sweep(4, 10);
  for (const auto& v : rep.violations) o.fail(v.spec + " (" + v.cls + "): " + v.reason);
  // Second route to the determinant for the whole sweep.
  std::int64_t leibniz = 0;
  for (int r = 1; r <= 4; ++r)
    for_each_spec(r, 10, [&](const CauchySpec& s) {
      ++leibniz;
      const Rational d = oracle::leibniz_det(build_matrix(s));
      if (d == 0) o.fail(s.to_string() + ": singular by permutation expansion");
      if (classify(s) == CauchyClass::IV && sign(d) != (r % 2 == 0 ? 1 : -1)) o.fail(s.to_string() + ": class IV sign");
    });
  if (leibniz != rep.total) o.fail("sweep and re-enumeration disagree on the spec count");
  std::ostringstream d;
  d << rep.total << " specs with r <= 4, entries in [0,10]";
  for (const auto& [k, v] : rep.per_class) d << ", " << k << " " << v;
  d << ", min |det| " << (rep.min_abs_det ? to_fraction_string(*rep.min_abs_det) : "-");
  o.detail = d.str();
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto scope = scoped({10, 8}, [&](const SkewShape& s) {
    if (abs_q(det_exact(jt_deletion_matrix(s))) != abs_q(det_exact(interval_matrix(s).d))) o.fail(s.to_string());
  });
  o.detail = "|det| of the deletion and interval matrices on " + scope;
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::int64_t specs = 0;
  for (int r = 1; r <= 3; ++r)
    for_each_spec(r, 8, [&](const CauchySpec& spec) {
      ++specs;
      const auto shape = skew_from_sequences(spec);
      if (rank_of(shape) != r) o.fail(spec.to_string() + ": rank of " + shape.to_string());
      if (abs_q(y_value(shape)) != abs_q(det_exact(build_matrix(spec)))) o.fail(spec.to_string() + ": |y| != |det|");
    });
  const auto scope = scoped({10, 8}, [&](const SkewShape& s) {
    const auto spec = sequences_from_skew(s);
    if (auto why = spec_violation(spec)) {
      o.fail(s.to_string() + ": " + *why);
      return;
    }
    if (spec.order() == 0) return;
    if (abs_q(det_exact(build_matrix(spec))) != abs_q(det_exact(interval_matrix(s).d))) o.fail(s.to_string());
  });
  o.detail = std::to_string(specs) + " specs with r <= 3, entries in [0,8]; converse on " + scope;
  return o;
}

struct Criterion {
  int number;
  double target_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-10"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criteria to run (default: all)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, 1, criterion1},     {2, 300, criterion2}, {3, 600, criterion3}, {4, 1800, criterion4},
      {5, 300, criterion5},   {6, 600, criterion6}, {7, 600, criterion7}, {8, 900, criterion8},
      {9, 300, criterion9},   {10, 600, criterion10},
  };
  if (selected.empty())
    for (const auto& c : all) selected.push_back(c.number);

  bool ok = true;
  for (int n : selected) {
    const auto& c = all[static_cast<std::size_t>(n - 1)];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.target_seconds) o.fail("over the time target");
    ok = ok && o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail;
    if (!o.pass) std::cout << "  [first failure: " << o.first_failure << "]";
    std::cout << std::fixed << std::setprecision(2) << "  (" << secs << " s, target " << std::setprecision(0)
              << c.target_seconds << " s)" << std::endl;
  }
  return ok ? 0 : 1;
}
