#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zrank/cauchy.hpp"
#include "zrank/config.hpp"
#include "zrank/rational.hpp"
#include "zrank/shape.hpp"
#include "zrank/strips.hpp"

namespace zrank {

enum class Status { ok, counterexample, error };
std::string to_string(Status s);

struct VerificationRecord {
  std::string shape;
  int rank = 0;
  int zrank = 0;
  Rational y_jacobi_trudi;
  Rational y_determinant;
  /// Absent when the shape has more interval sets than the oracle bound.
  std::optional<Rational> y_interval_expansion;
  /// Interval sets whose crossing number and permutation inversions agree
  /// in parity.
  std::int64_t parity_checked = 0;
  /// Absent when the shape is past the decomposition enumeration bound.
  std::optional<bool> pq_invariant;
  std::optional<bool> hamel_goulden;
  std::vector<std::string> errors;
  Status status = Status::ok;
};

/// Runs every cross-check on one shape. Status is counterexample when
/// zrank != rank or the y values disagree, error when an auxiliary check
/// fails or throws, ok otherwise.
VerificationRecord verify_shape(const SkewShape& shape, const OracleBounds& bounds = OracleBounds::from_env());

nlohmann::json to_json(const VerificationRecord& rec);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const CauchySweepReport& report);

/// Everything `inspect` shows: code, snakes, noncrossing interval set, greedy
/// strips, s(1^t), rank, zrank and y.
nlohmann::json inspect_json(const SkewShape& shape);

struct ShapeSweepSummary {
  std::int64_t total = 0;
  std::int64_t ok = 0;
  std::int64_t counterexample = 0;
  std::int64_t error = 0;
};

}  // namespace zrank
