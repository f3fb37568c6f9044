#include "zrank/cauchy.hpp"

#include <algorithm>
#include <charconv>

#include "zrank/error.hpp"
#include "zrank/snakes.hpp"

namespace zrank {

namespace {

std::string join(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }

}  // namespace

std::string CauchySpec::to_string() const { return "a=" + join(a) + ";b=" + join(b); }

std::optional<std::string> spec_violation(const CauchySpec& s) {
  const int n = s.order();
  if (n == 0) return "sequences must be nonempty";
  if (s.b.size() != s.a.size()) return "a and b must have the same length";
  for (int i = 1; i < n; ++i) {
    if (s.a[idx(i)] <= s.a[idx(i + 1)]) return "a must be strictly decreasing (a_" + std::to_string(i) + " <= a_" + std::to_string(i + 1) + ")";
    if (s.b[idx(i)] >= s.b[idx(i + 1)]) return "b must be strictly increasing (b_" + std::to_string(i) + " >= b_" + std::to_string(i + 1) + ")";
  }
  for (int i = 1; i <= n; ++i)
    if (s.a[idx(i)] <= s.b[idx(n + 1 - i)])
      return "a_" + std::to_string(i) + " > b_" + std::to_string(n + 1 - i) + " fails";
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (s.a[idx(i)] == s.b[idx(j)]) return "a_" + std::to_string(i) + " equals b_" + std::to_string(j);
  return std::nullopt;
}

void require_valid(const CauchySpec& spec) {
  if (auto v = spec_violation(spec)) throw InvariantError("invalid restricted Cauchy spec " + spec.to_string() + ": " + *v);
}

namespace {

std::vector<long> parse_list(std::string_view text, std::string_view whole) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    long v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw ParseError("malformed spec literal '" + std::string(whole) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

CauchySpec parse_cauchy_spec(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos || text.substr(0, 2) != "a=" || text.substr(semi + 1, 2) != "b=")
    throw ParseError("spec literal must look like 'a=9,8,4,3;b=0,1,2,7', got '" + std::string(text) + "'");
  CauchySpec s{parse_list(text.substr(2, semi - 2), text), parse_list(text.substr(semi + 3), text)};
  require_valid(s);
  return s;
}

RationalMatrix build_matrix(const CauchySpec& spec) {
  require_valid(spec);
  const auto n = static_cast<std::size_t>(spec.order());
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (spec.a[i] > spec.b[j]) m(i, j) = make_rational(1, spec.a[i] - spec.b[j]);
  return m;
}

std::string to_string(CauchyClass c) {
  switch (c) {
    case CauchyClass::I: return "I";
    case CauchyClass::II: return "II";
    case CauchyClass::III: return "III";
    case CauchyClass::IV: return "IV";
    case CauchyClass::OTHER: return "OTHER";
  }
  return "OTHER";
}

CauchyClass classify(const CauchySpec& spec) {
  const int r = spec.order();
  auto zero = [&](int i, int j) { return spec.a[idx(i)] < spec.b[idx(j)]; };
  auto matches = [&](auto expected_zero) {
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j)
        if (zero(i, j) != expected_zero(i, j)) return false;
    return true;
  };
  if (matches([](int, int) { return false; })) return CauchyClass::I;
  if (matches([&](int i, int j) { return i == r && j == r; })) return CauchyClass::II;
  if (r >= 3 && matches([&](int i, int j) {
        return (i == r && j == r) || (i == r && j == r - 1) || (i == r - 1 && j == r);
      }))
    return CauchyClass::III;
  if (r >= 4 && matches([&](int i, int j) { return j == r && i > 2; })) return CauchyClass::IV;
  return CauchyClass::OTHER;
}

namespace {

void require_class(const CauchySpec& spec, CauchyClass c) {
  if (classify(spec) != c)
    throw InvariantError(spec.to_string() + " is not of class " + to_string(c));
}

// prod_{i<j}(a_i - a_j)(b_j - b_i) / prod_{i,j}(a_i - b_j) on the leading n x n block.
Rational cauchy_product(const CauchySpec& s, int n) {
  Integer num = 1, den = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      num *= s.a[idx(i)] - s.a[idx(j)];
      num *= s.b[idx(j)] - s.b[idx(i)];
    }
    for (int j = 1; j <= n; ++j) den *= s.a[idx(i)] - s.b[idx(j)];
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational class1_det(const CauchySpec& spec) {
  require_class(spec, CauchyClass::I);
  return cauchy_product(spec, spec.order());
}

Rational class2_M(const CauchySpec& spec) {
  require_class(spec, CauchyClass::II);
  const int r = spec.order();
  const long ar = spec.a[idx(r)], br = spec.b[idx(r)];
  Rational m = 1;
  for (int i = 1; i < r; ++i) {
    const long ai = spec.a[idx(i)], bi = spec.b[idx(i)];
    m *= Rational(Integer((ar - ai) * (bi - br)), Integer((ar - bi) * (ai - br)));
  }
  m.canonicalize();
  return m;
}

Rational class2_det(const CauchySpec& spec) {
  const int r = spec.order();
  const Rational m = class2_M(spec);
  Rational out = make_rational(1, spec.a[idx(r)] - spec.b[idx(r)]) * cauchy_product(spec, r - 1) * (m - 1);
  return out;
}

Class3Report class3_check(const CauchySpec& spec) {
  require_class(spec, CauchyClass::III);
  const auto c = build_matrix(spec);
  const auto r = static_cast<std::size_t>(spec.order());
  Class3Report rep;
  rep.c_rr = cofactor(c, r - 1, r - 1);
  rep.c_r1r1 = cofactor(c, r - 2, r - 2);
  rep.c_rr1 = cofactor(c, r - 1, r - 2);
  rep.c_r1r = cofactor(c, r - 2, r - 1);
  rep.det = det_exact(c);
  rep.ok = rep.c_rr > 0 && rep.c_r1r1 < 0 && rep.c_rr1 > 0 && rep.c_r1r > 0 && rep.det != 0;
  return rep;
}

Rational class4_N(const CauchySpec& spec) {
  require_class(spec, CauchyClass::IV);
  const int r = spec.order();
  auto f = [&](long x) {
    Integer num = 1, den = x - spec.b[idx(r)];
    for (int j = 1; j < r; ++j) num *= x - spec.b[idx(j)];
    for (int i = 3; i <= r; ++i) den *= x - spec.a[idx(i)];
    Rational q(num, den);
    q.canonicalize();
    return q;
  };
  const long a1 = spec.a[0], a2 = spec.a[1];
  return (f(a1) - f(a2)) / Rational(a1 - a2);
}

Rational class4_det(const CauchySpec& spec) {
  const Rational n = class4_N(spec);
  const int r = spec.order();
  Integer num = 1, den = 1;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) num *= spec.a[idx(i)] - spec.a[idx(j)];
    for (int j = 1; j < r; ++j) den *= spec.a[idx(i)] - spec.b[idx(j)];
  }
  for (int i = 1; i < r; ++i)
    for (int j = i + 1; j < r; ++j) num *= spec.b[idx(j)] - spec.b[idx(i)];
  Rational out(num, den);
  out.canonicalize();
  out *= n;
  return (r + 1) % 2 == 0 ? out : Rational(-out);
}

int class4_sign(const CauchySpec& spec) {
  require_class(spec, CauchyClass::IV);
  return spec.order() % 2 == 0 ? 1 : -1;
}

SkewShape skew_from_sequences(const CauchySpec& spec) {
  require_valid(spec);
  const int r = spec.order();
  // mu_r = b_1 is the smallest constructed part.
  const long shift = std::max(0L, -spec.b[0]);
  std::vector<int> lambda, mu;
  for (int i = 1; i <= r; ++i) {
    lambda.push_back(static_cast<int>(spec.a[idx(i)] + shift - r + i));
    mu.push_back(static_cast<int>(spec.b[idx(r + 1 - i)] + shift - r + i));
  }
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return SkewShape(Partition(std::move(lambda)), Partition(std::move(mu)));
}

CauchySpec sequences_from_skew(const SkewShape& shape) {
  const IntervalSet base = noncrossing_interval_set(snake_sequence(shape));
  CauchySpec s;
  for (const auto& [u, v] : base.pairs) {
    s.b.push_back(u);
    s.a.push_back(v);
  }
  std::sort(s.a.rbegin(), s.a.rend());
  std::sort(s.b.begin(), s.b.end());
  return s;
}

CauchySpec normalized(const CauchySpec& spec) {
  if (spec.a.empty()) return spec;
  const long lo = std::min(*std::min_element(spec.a.begin(), spec.a.end()),
                           *std::min_element(spec.b.begin(), spec.b.end()));
  CauchySpec s = spec;
  for (auto& x : s.a) x -= lo;
  for (auto& x : s.b) x -= lo;
  return s;
}

bool is_reducible(const CauchySpec& spec) {
  const int r = spec.order();
  for (int i = 2; i <= r; ++i)
    if (spec.a[idx(i)] < spec.b[idx(r + 2 - i)]) return true;
  return false;
}

std::int64_t for_each_spec(int r, long max_value, const std::function<void(const CauchySpec&)>& visit) {
  if (r < 1 || max_value < 0) return 0;
  std::vector<std::vector<long>> subsets;
  std::vector<long> cur;
  auto gen = [&](auto&& self, long next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      subsets.push_back(cur);
      return;
    }
    for (long v = next; v <= max_value; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  gen(gen, 0);
  std::int64_t count = 0;
  CauchySpec spec;
  for (const auto& as : subsets) {
    spec.a.assign(as.rbegin(), as.rend());
    for (const auto& bs : subsets) {
      spec.b = bs;
      if (spec_violation(spec)) continue;
      ++count;
      visit(spec);
    }
  }
  return count;
}

void check_spec(const CauchySpec& spec, CauchySweepReport& report) {
  const RationalMatrix c = build_matrix(spec);
  const Rational det = det_exact(c);
  const CauchyClass cls = classify(spec);
  const std::string tag = to_string(cls);
  ++report.total;
  ++report.per_class[tag];
  ++report.per_order[spec.order()];
  if (is_reducible(spec)) ++report.reducible;
  auto fail = [&](const std::string& why) { report.violations.push_back({spec.to_string(), tag, why}); };
  if (det == 0) {
    fail("singular matrix");
  } else {
    const Rational mag = abs(det);
    if (!report.min_abs_det || mag < *report.min_abs_det) {
      report.min_abs_det = mag;
      report.min_abs_det_spec = spec.to_string();
    }
  }
  switch (cls) {
    case CauchyClass::I:
      if (!(det > 0)) fail("class I determinant is not positive");
      if (det != class1_det(spec)) fail("class I determinant differs from the Cauchy product");
      break;
    case CauchyClass::II:
      if (!(class2_M(spec) > 1)) fail("class II has M <= 1");
      if (!(det < 0)) fail("class II determinant is not negative");
      if (det != class2_det(spec)) fail("class II determinant differs from the closed form");
      break;
    case CauchyClass::III:
      if (!class3_check(spec).ok) fail("class III cofactor signs fail");
      break;
    case CauchyClass::IV:
      if (!(class4_N(spec) < 0)) fail("class IV has N >= 0");
      if (det != class4_det(spec)) fail("class IV determinant differs from the closed form");
      if (sign(det) != class4_sign(spec)) fail("class IV determinant has the wrong sign");
      break;
    case CauchyClass::OTHER: break;
  }
}

CauchySweepReport nonsingularity_sweep(int max_order, long max_value, int shard_index, int shard_count) {
  if (shard_count < 1 || shard_index < 1 || shard_index > shard_count)
    throw InvariantError("shard must satisfy 1 <= i <= n");
  CauchySweepReport report;
  report.max_order = max_order;
  report.max_value = max_value;
  report.shard_index = shard_index;
  report.shard_count = shard_count;
  std::int64_t position = 0;
  for (int r = 1; r <= max_order; ++r) {
    for_each_spec(r, max_value, [&](const CauchySpec& spec) {
      if (position++ % shard_count == shard_index - 1) check_spec(spec, report);
    });
  }
  return report;
}

}  // namespace zrank
