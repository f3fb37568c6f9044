#pragma once

#include <cstdint>
#include <string>

namespace zrank {

/// Limits for the exponential brute-force oracles.
///
/// Defaults can be overridden with the `ZRANK_ORACLE_BOUNDS` environment
/// variable, a comma separated list such as
/// `decomposition_cells=12,ssyt_cells=9,ssyt_max_t=5,interval_sets=5000000`.
struct OracleBounds {
  int decomposition_cells = 10;
  int ssyt_cells = 8;
  int ssyt_max_t = 4;
  std::int64_t interval_sets = 1'000'000;

  static OracleBounds defaults() { return {}; }
  static OracleBounds from_env();
  // Applies "key=value,..." overrides on top of *this.
  OracleBounds with_overrides(const std::string& text) const;
};

inline constexpr const char* kOracleBoundsEnv = "ZRANK_ORACLE_BOUNDS";

}  // namespace zrank
