#include "zrank/code.hpp"

#include "zrank/error.hpp"

namespace zrank {

namespace {

// Path from the bottom-left to the top-right corner of a box with `rows`
// rows, bounding the first `rows` parts of p (zero padded).
void trace(const Partition& p, int rows, int width, std::vector<int>& out) {
  int prev = 0;
  for (int i = rows; i >= 1; --i) {
    out.insert(out.end(), static_cast<std::size_t>(p.part(i) - prev), 0);
    out.push_back(1);
    prev = p.part(i);
  }
  out.insert(out.end(), static_cast<std::size_t>(width - prev), 0);
}

std::vector<int> decode_row(const std::vector<int>& bits, int ones) {
  std::vector<int> parts(static_cast<std::size_t>(ones), 0);
  int zeros = 0, seen = 0;
  for (int b : bits) {
    if (b == 0) {
      ++zeros;
    } else {
      parts[static_cast<std::size_t>(ones - 1 - seen)] = zeros;
      ++seen;
    }
  }
  return parts;
}

Partition trimmed(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

}  // namespace

std::string ReducedCode::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < top.size(); ++i) out += (i ? " " : "") + std::to_string(top[i]);
  out += '\n';
  for (std::size_t i = 0; i < bottom.size(); ++i) out += (i ? " " : "") + std::to_string(bottom[i]);
  return out;
}

ReducedCode reduced_code(const SkewShape& shape) {
  ReducedCode code;
  code.origin = shape;
  const int rows = shape.rows();
  const int width = shape.cols();
  trace(shape.lambda(), rows, width, code.bottom);
  trace(shape.mu(), rows, width, code.top);
  return code;
}

int rank_of(const ReducedCode& code) {
  int r = 0;
  for (std::size_t i = 0; i < code.top.size(); ++i)
    if (code.top[i] == 1 && code.bottom[i] == 0) ++r;
  return r;
}

ColumnSets code_column_sets(const ReducedCode& code) {
  ColumnSets s;
  for (std::size_t i = 0; i < code.top.size(); ++i) {
    if (code.top[i] == 1 && code.bottom[i] == 0) s.w.push_back(static_cast<int>(i) + 1);
    if (code.top[i] == 0 && code.bottom[i] == 1) s.y.push_back(static_cast<int>(i) + 1);
  }
  return s;
}

SkewShape decode_code(const std::vector<int>& top, const std::vector<int>& bottom) {
  if (top.size() != bottom.size()) throw InvariantError("code rows differ in length");
  int top_ones = 0, bottom_ones = 0;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if ((top[i] != 0 && top[i] != 1) || (bottom[i] != 0 && bottom[i] != 1))
      throw InvariantError("code entries must be 0 or 1");
    top_ones += top[i];
    bottom_ones += bottom[i];
  }
  if (top_ones != bottom_ones) throw InvariantError("code rows have different numbers of up-steps");
  auto lambda = decode_row(bottom, bottom_ones);
  auto mu = decode_row(top, top_ones);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (mu[i] > lambda[i]) throw InvariantError("code top row is not inside its bottom row");
  return SkewShape(trimmed(std::move(lambda)), trimmed(std::move(mu)));
}

ReducedCode remove_strip_on_code(const ReducedCode& code, int i, int p) {
  const int k = code.length();
  if (i < 1 || p < 1 || i + p > k) throw InvariantError("strip removal columns out of range");
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(i + p - 1);
  if (!(code.top[a] == 1 && code.bottom[a] == 0))
    throw InvariantError("column " + std::to_string(i) + " is not 1 over 0");
  if (!(code.top[b] == 0 && code.bottom[b] == 1))
    throw InvariantError("column " + std::to_string(i + p) + " is not 0 over 1");
  ReducedCode out = code;
  out.bottom[a] = 1;
  out.bottom[b] = 0;
  out.origin = decode_code(out.top, out.bottom);
  return out;
}

int code_base_content(const SkewShape& shape) { return 1 - shape.rows(); }

}  // namespace zrank
