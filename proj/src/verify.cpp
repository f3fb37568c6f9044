#include "zrank/verify.hpp"

#include <set>

#include "zrank/code.hpp"
#include "zrank/determinants.hpp"
#include "zrank/snakes.hpp"
#include "zrank/specialization.hpp"

namespace zrank {

std::string to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::counterexample: return "counterexample";
    case Status::error: return "error";
  }
  return "error";
}

namespace {

void check_structures(const SkewShape& shape, int rank, std::vector<std::string>& errors) {
  const auto cols = code_column_sets(reduced_code(shape));
  const auto seq = snake_sequence(shape);
  if (seq.left_positions() != cols.w) errors.push_back("L positions differ from the 1-over-0 columns");
  if (seq.right_positions() != cols.y) errors.push_back("R positions differ from the 0-over-1 columns");
  if (static_cast<int>(cols.w.size()) != rank) errors.push_back("column count differs from rank");
  if (greedy_decomposition(shape).size() != rank) errors.push_back("greedy decomposition size differs from rank");
}

// Minimal decompositions share P and Q, match the code's prediction, and
// their init-to-fin pairings are exactly the interval sets.
bool pq_invariant(const SkewShape& shape, int rank, const SnakeSequence& seq, const OracleBounds& bounds) {
  const EndpointSets predicted = predicted_endpoint_sets(shape);
  std::set<std::vector<std::pair<int, int>>> pairings;
  bool ok = true;
  for_each_decomposition(
      shape,
      [&](const Decomposition& d) {
        if (d.size() < rank) ok = false;
        if (d.size() != rank) return;
        if (endpoint_content_sets(d) != predicted) ok = false;
        pairings.insert(interval_set_of(shape, d).pairs);
      },
      rank, bounds);
  std::set<std::vector<std::pair<int, int>>> expected;
  for_each_interval_set(seq, [&](const IntervalSet& set) { expected.insert(set.pairs); });
  return ok && pairings == expected;
}

}  // namespace

VerificationRecord verify_shape(const SkewShape& shape, const OracleBounds& bounds) {
  VerificationRecord rec;
  rec.shape = shape.to_string();
  try {
    rec.rank = rank_of(shape);
    const RatPoly poly = skew_schur_specialized(shape);
    if (poly.degree() != shape.size()) rec.errors.push_back("s(1^t) has the wrong degree");
    rec.zrank = shape.empty() ? 0 : poly.valuation().value_or(-1);
    rec.y_jacobi_trudi = poly.coefficient(rec.rank);
    rec.y_determinant = y_via_determinant(shape);

    const auto seq = snake_sequence(shape);
    const std::int64_t count = count_interval_sets(seq);
    if (count <= bounds.interval_sets) {
      rec.y_interval_expansion = y_via_interval_expansion(shape, bounds);
      const IntervalSet base = noncrossing_interval_set(seq);
      std::int64_t failures = 0;
      for_each_interval_set(seq, [&](const IntervalSet& set) {
        if ((crossings(set) - interval_permutation(set, base).inversions) % 2 == 0)
          ++rec.parity_checked;
        else
          ++failures;
      });
      if (failures) rec.errors.push_back(std::to_string(failures) + " interval sets break the parity rule");
    }

    check_structures(shape, rec.rank, rec.errors);
    if (shape.size() <= bounds.decomposition_cells) {
      rec.pq_invariant = pq_invariant(shape, rec.rank, seq, bounds);
      if (!*rec.pq_invariant) rec.errors.push_back("minimal decompositions break P/Q invariance");
    }

    rec.hamel_goulden = hamel_goulden_by_components(shape, DecompositionKind::greedy) == poly &&
                        hamel_goulden_by_components(shape, DecompositionKind::rows) == poly;
    if (!*rec.hamel_goulden) rec.errors.push_back("Hamel-Goulden determinant differs from Jacobi-Trudi");
    for (const auto& comp : connected_components(shape))
      if (!thmain_sign_check(shape_from_cells(comp)).ok)
        rec.errors.push_back("cutting strip row parity differs from z");
  } catch (const std::exception& e) {
    rec.errors.push_back(e.what());
  }

  const bool y_agree = rec.y_jacobi_trudi == rec.y_determinant &&
                       (!rec.y_interval_expansion || *rec.y_interval_expansion == rec.y_determinant);
  if (rec.zrank != rec.rank || !y_agree)
    rec.status = Status::counterexample;
  else if (!rec.errors.empty())
    rec.status = Status::error;
  return rec;
}

nlohmann::json to_json(const VerificationRecord& rec) {
  nlohmann::json j;
  j["shape"] = rec.shape;
  j["rank"] = rec.rank;
  j["zrank"] = rec.zrank;
  j["y"] = {{"jacobi_trudi", to_fraction_string(rec.y_jacobi_trudi)},
            {"determinant", to_fraction_string(rec.y_determinant)},
            {"interval_expansion", rec.y_interval_expansion ? nlohmann::json(to_fraction_string(*rec.y_interval_expansion))
                                                            : nlohmann::json(nullptr)}};
  j["parity_checked"] = rec.parity_checked;
  j["pq_invariant"] = rec.pq_invariant ? nlohmann::json(*rec.pq_invariant) : nlohmann::json(nullptr);
  j["hamel_goulden"] = rec.hamel_goulden ? nlohmann::json(*rec.hamel_goulden) : nlohmann::json(nullptr);
  j["errors"] = rec.errors;
  j["status"] = to_string(rec.status);
  return j;
}

nlohmann::json to_json(const Decomposition& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& b : d.strips) {
    nlohmann::json cells = nlohmann::json::array();
    for (Cell c : b.cells) cells.push_back({c.row, c.col});
    out.push_back({{"cells", cells},
                   {"height", b.height()},
                   {"init_content", b.init_content()},
                   {"fin_content", b.fin_content()}});
  }
  return out;
}

nlohmann::json to_json(const CauchySweepReport& r) {
  nlohmann::json j;
  j["bounds"] = {{"max_order", r.max_order}, {"max_value", r.max_value}};
  j["shard"] = std::to_string(r.shard_index) + "/" + std::to_string(r.shard_count);
  j["total"] = r.total;
  j["per_class"] = r.per_class;
  nlohmann::json orders = nlohmann::json::object();
  for (const auto& [k, v] : r.per_order) orders[std::to_string(k)] = v;
  j["per_order"] = orders;
  j["reducible"] = r.reducible;
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& v : r.violations) viol.push_back({{"spec", v.spec}, {"class", v.cls}, {"reason", v.reason}});
  j["violations"] = viol;
  if (r.min_abs_det)
    j["min_abs_det"] = {{"value", to_fraction_string(*r.min_abs_det)}, {"spec", r.min_abs_det_spec}};
  else
    j["min_abs_det"] = nullptr;
  return j;
}

nlohmann::json inspect_json(const SkewShape& shape) {
  nlohmann::json j;
  const auto code = reduced_code(shape);
  const auto seq = snake_sequence(shape);
  const auto base = noncrossing_interval_set(seq);
  const auto poly = skew_schur_specialized(shape);
  const int rank = rank_of(code);
  j["shape"] = shape.to_string();
  j["cells"] = shape.size();
  j["connected"] = is_connected(shape);
  j["code"] = {{"top", code.top}, {"bottom", code.bottom}};
  j["rank"] = rank;
  j["zrank"] = shape.empty() ? 0 : poly.valuation().value_or(-1);
  j["snakes"] = seq.to_string();
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [u, v] : base.pairs) pairs.push_back({u, v});
  j["interval_set"] = pairs;
  j["greedy"] = to_json(greedy_decomposition(shape));
  j["z"] = z_statistic(shape);
  j["polynomial"] = poly.to_fraction_strings();
  j["y"] = to_fraction_string(poly.coefficient(rank));
  return j;
}

}  // namespace zrank
