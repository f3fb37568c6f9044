#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zrank/matrix.hpp"
#include "zrank/shape.hpp"

namespace zrank {

/// A strictly decreasing and b strictly increasing, same length n, with
/// a_i > b_{n+1-i} and a_i != b_j for all i, j.
struct CauchySpec {
  std::vector<long> a;
  std::vector<long> b;

  int order() const { return static_cast<int>(a.size()); }
  /// "a=9,8,4,3;b=0,1,2,7"
  std::string to_string() const;
  friend bool operator==(const CauchySpec&, const CauchySpec&) = default;
};

/// Describes the first violated condition, or nullopt for a valid spec.
std::optional<std::string> spec_violation(const CauchySpec& spec);

/// Throws InvariantError naming the violated condition.
void require_valid(const CauchySpec& spec);

/// Parses "a=...;b=..." and validates. Throws ParseError or InvariantError.
CauchySpec parse_cauchy_spec(std::string_view text);

/// c_ij = 1/(a_i - b_j) if a_i > b_j, else 0.
RationalMatrix build_matrix(const CauchySpec& spec);

enum class CauchyClass { I, II, III, IV, OTHER };
std::string to_string(CauchyClass c);

/// Exact zero pattern match, tried in the order I, II, III, IV.
CauchyClass classify(const CauchySpec& spec);

/// prod_{i<j}(a_i - a_j)(b_j - b_i) / prod_{i,j}(a_i - b_j). Class I only.
Rational class1_det(const CauchySpec& spec);

/// prod_{i<r} (a_r - a_i)(b_i - b_r) / ((a_r - b_i)(a_i - b_r)). Class II only.
Rational class2_M(const CauchySpec& spec);
/// 1/(a_r - b_r) times the Cauchy product of the leading (r-1)x(r-1) block
/// times (M - 1). Class II only.
Rational class2_det(const CauchySpec& spec);

/// Signed cofactors at (r,r), (r-1,r-1), (r,r-1), (r-1,r) and the determinant.
struct Class3Report {
  Rational c_rr, c_r1r1, c_rr1, c_r1r, det;
  /// c_rr > 0, c_r1r1 < 0, c_rr1 > 0, c_r1r > 0 and det != 0.
  bool ok = false;
};
Class3Report class3_check(const CauchySpec& spec);

/// N = (f(a_1) - f(a_2)) / (a_1 - a_2) with
/// f(x) = prod_{j<r}(x - b_j) / ((x - b_r) prod_{i>=3}(x - a_i)). Class IV only.
Rational class4_N(const CauchySpec& spec);
/// (-1)^(r+1) prod_{i<j}(a_i - a_j) prod_{i<j<r}(b_j - b_i) / prod_{i, j<r}(a_i - b_j) * N.
Rational class4_det(const CauchySpec& spec);
/// +1 if r is even, -1 if r is odd. Class IV only.
int class4_sign(const CauchySpec& spec);

/// lambda_i = a_i - r + i, mu_i = b_{r+1-i} - r + i after shifting both
/// sequences up just enough that every constructed part is nonnegative.
SkewShape skew_from_sequences(const CauchySpec& spec);

/// a = second coordinates of the noncrossing interval set, decreasing;
/// b = first coordinates, increasing.
CauchySpec sequences_from_skew(const SkewShape& shape);

/// Shifts both sequences by the same amount so the smallest entry is 0.
CauchySpec normalized(const CauchySpec& spec);

/// True if some split index I in 2..r has a_I < b_{r+2-I}, which makes the
/// matrix block triangular. Diagnostic only.
bool is_reducible(const CauchySpec& spec);

/// Every valid spec of order r with entries in [0, max_value], a in
/// decreasing and b in increasing lexicographic order of their index sets.
std::int64_t for_each_spec(int r, long max_value, const std::function<void(const CauchySpec&)>& visit);

struct SweepViolation {
  std::string spec;
  std::string cls;
  std::string reason;
};

struct CauchySweepReport {
  int max_order = 0;
  long max_value = 0;
  int shard_index = 1;
  int shard_count = 1;
  std::int64_t total = 0;
  std::map<std::string, std::int64_t> per_class;
  std::map<int, std::int64_t> per_order;
  std::int64_t reducible = 0;
  std::vector<SweepViolation> violations;
  std::optional<Rational> min_abs_det;
  std::string min_abs_det_spec;
};

/// Determinant and class-specific checks for one spec; violations are
/// appended to `report`.
void check_spec(const CauchySpec& spec, CauchySweepReport& report);

/// Runs check_spec on every spec with order 1..max_order and entries in
/// [0, max_value]; shard i of n (1-based) takes every n-th spec.
CauchySweepReport nonsingularity_sweep(int max_order, long max_value, int shard_index = 1, int shard_count = 1);

}  // namespace zrank
