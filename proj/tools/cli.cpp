#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

#include "zrank/code.hpp"
#include "zrank/error.hpp"
#include "zrank/snakes.hpp"
#include "zrank/specialization.hpp"
#include "zrank/verify.hpp"

namespace zrank::cli {

namespace {

struct Shard {
  int index = 1;
  int count = 1;
};

Shard parse_shard(const std::string& text) {
  auto slash = text.find('/');
  Shard s;
  auto num = [&](std::string_view v, int& dst) {
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), dst);
    return ec == std::errc{} && p == v.data() + v.size() && !v.empty();
  };
  std::string_view sv = text;
  if (slash == std::string::npos || !num(sv.substr(0, slash), s.index) || !num(sv.substr(slash + 1), s.count) ||
      s.count < 1 || s.index < 1 || s.index > s.count)
    throw ParseError("--shard expects I/N with 1 <= I <= N, got '" + text + "'");
  return s;
}

void print_inspect(const SkewShape& shape, std::ostream& out) {
  const auto code = reduced_code(shape);
  const auto seq = snake_sequence(shape);
  const auto poly = skew_schur_specialized(shape);
  const int rank = rank_of(code);
  out << "shape: " << shape.to_string() << "\n";
  out << "cells: " << shape.size() << (is_connected(shape) ? " (connected)" : " (disconnected)") << "\n";
  out << "code:\n" << code.to_string() << "\n";
  out << "rank: " << rank << "\n";
  out << "zrank: " << (shape.empty() ? 0 : poly.valuation().value_or(-1)) << "\n";
  out << "snakes: " << seq.to_string() << "\n";
  out << "I0: " << noncrossing_interval_set(seq).to_string() << "\n";
  out << "greedy strips:\n";
  for (const auto& b : greedy_decomposition(shape).strips) {
    out << "  ";
    for (Cell c : b.cells) out << "(" << c.row << "," << c.col << ")";
    out << " height " << b.height() << ", contents " << b.init_content() << ".." << b.fin_content() << "\n";
  }
  out << "z: " << z_statistic(shape) << "\n";
  out << "s(1^t): " << poly.to_string() << "\n";
  out << "y: " << to_fraction_string(poly.coefficient(rank)) << "\n";
}

std::vector<VerificationRecord> verify_batch(const std::vector<SkewShape>& shapes, const OracleBounds& bounds,
                                             int jobs) {
  std::vector<VerificationRecord> recs(shapes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < shapes.size(); i = next++) recs[i] = verify_shape(shapes[i], bounds);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(shapes.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return recs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank and zrank checks for skew partitions and restricted Cauchy matrices", "zrank"};
  app.require_subcommand(1);

  std::string shape_text;
  bool json = false;

  auto* inspect = app.add_subcommand("inspect", "Show the code, snakes, strips and s(1^t) of a shape");
  inspect->add_option("shape", shape_text, "Shape literal such as 7,6,6,3/3,1")->required();
  inspect->add_flag("--json", json, "Emit one JSON object");

  auto* verify = app.add_subcommand("verify", "Run every cross-check on one shape and print its record");
  verify->add_option("shape", shape_text, "Shape literal")->required();

  int max_cells = 0, max_rows = 0, max_cols = 0, jobs = 1;
  bool tight = false;
  std::string shard_text = "1/1";
  auto* sweep = app.add_subcommand("sweep-shapes", "Verify every shape up to a size");
  sweep->add_option("--max-cells", max_cells, "Largest number of cells")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--max-rows", max_rows, "Bound on the length of lambda (default: max-cells)");
  sweep->add_option("--max-cols", max_cols, "Bound on lambda_1 (default: max-cells)");
  sweep->add_flag("--tight", tight, "Only shapes without empty rows or columns");
  sweep->add_option("--shard", shard_text, "Process shard I of N");
  sweep->add_flag("--json", json, "Emit JSONL records and a summary object");
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  int max_order = 0;
  long max_value = 0;
  auto* cauchy = app.add_subcommand("sweep-cauchy", "Check nonsingularity of restricted Cauchy matrices");
  cauchy->add_option("--max-order", max_order, "Largest order r")->required()->check(CLI::PositiveNumber);
  cauchy->add_option("--max-value", max_value, "Entries range over 0..V")->required()->check(CLI::NonNegativeNumber);
  cauchy->add_option("--shard", shard_text, "Process shard I of N");

  std::vector<const char*> argv{"zrank"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const OracleBounds bounds = OracleBounds::from_env();

    if (*inspect) {
      const SkewShape shape = parse_shape(shape_text);
      if (json)
        out << inspect_json(shape).dump() << "\n";
      else
        print_inspect(shape, out);
      return 0;
    }

    if (*verify) {
      const auto rec = verify_shape(parse_shape(shape_text), bounds);
      out << to_json(rec).dump() << "\n";
      return rec.status == Status::ok ? 0 : 1;
    }

    if (*sweep) {
      const Shard shard = parse_shard(shard_text);
      const ShapeBounds sb{max_cells, max_rows > 0 ? max_rows : max_cells, max_cols > 0 ? max_cols : max_cells};
      ShapeSweepSummary sum;
      std::vector<SkewShape> batch;
      std::int64_t position = 0;
      auto flush = [&] {
        for (const auto& rec : verify_batch(batch, bounds, jobs)) {
          ++sum.total;
          switch (rec.status) {
            case Status::ok: ++sum.ok; break;
            case Status::counterexample: ++sum.counterexample; break;
            case Status::error: ++sum.error; break;
          }
          if (json)
            out << to_json(rec).dump() << "\n";
          else if (rec.status != Status::ok)
            out << to_string(rec.status) << " " << rec.shape << "\n";
        }
        batch.clear();
      };
      for_each_shape(sb, tight ? ShapeFamily::tight : ShapeFamily::canonical, [&](const SkewShape& s) {
        if (position++ % shard.count != shard.index - 1) return;
        batch.push_back(s);
        if (batch.size() >= 4096) flush();
      });
      flush();
      nlohmann::json summary = {{"summary",
                                 {{"max_cells", sb.max_cells},
                                  {"max_rows", sb.max_rows},
                                  {"max_cols", sb.max_cols},
                                  {"family", tight ? "tight" : "canonical"},
                                  {"shard", shard_text},
                                  {"total", sum.total},
                                  {"ok", sum.ok},
                                  {"counterexample", sum.counterexample},
                                  {"error", sum.error}}}};
      if (json)
        out << summary.dump() << "\n";
      else
        out << "total " << sum.total << ", ok " << sum.ok << ", counterexample " << sum.counterexample
            << ", error " << sum.error << "\n";
      err << "sweep-shapes: shard " << shard_text << " checked " << sum.total << " shapes\n";
      return sum.counterexample == 0 && sum.error == 0 ? 0 : 1;
    }

    if (*cauchy) {
      const Shard shard = parse_shard(shard_text);
      const auto report = nonsingularity_sweep(max_order, max_value, shard.index, shard.count);
      out << to_json(report).dump() << "\n";
      err << "sweep-cauchy: shard " << shard_text << " checked " << report.total << " specs, "
          << report.violations.size() << " violations\n";
      return report.violations.empty() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    // Malformed input, e.g. a shape literal with mu outside lambda.
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace zrank::cli
