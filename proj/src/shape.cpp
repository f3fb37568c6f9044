#include "zrank/shape.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "zrank/error.hpp"

namespace zrank {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvariantError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvariantError("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// SkewShape

SkewShape::SkewShape(Partition lambda, Partition mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (mu_.length() > lambda_.length()) throw InvariantError("mu has more parts than lambda: " + to_string());
  for (int i = 1; i <= mu_.length(); ++i)
    if (mu_.part(i) > lambda_.part(i)) throw InvariantError("mu is not contained in lambda: " + to_string());
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= rows(); ++i)
    for (int j = mu_part(i) + 1; j <= lambda_part(i); ++j) out.push_back({i, j});
  return out;
}

std::string SkewShape::to_string() const {
  std::string out = lambda_.empty() ? "0" : lambda_.to_string();
  if (!mu_.empty()) out += "/" + mu_.to_string();
  return out;
}

namespace {

Partition parse_parts(std::string_view text, std::string_view whole) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || item[0] == '+' || item[0] == '-' || ec != std::errc{} || ptr != item.data() + item.size())
      throw ParseError("malformed shape literal '" + std::string(whole) + "'");
    if (v < 1) throw ParseError("shape literal parts must be positive: '" + std::string(whole) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw ParseError("shape literal parts must be weakly decreasing: '" + std::string(whole) + "'");
  return Partition(std::move(parts));
}

}  // namespace

SkewShape parse_shape(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos && text.find('/', slash + 1) != std::string_view::npos)
    throw ParseError("malformed shape literal '" + std::string(text) + "'");
  Partition lambda = parse_parts(text.substr(0, slash), text);
  Partition mu = slash == std::string_view::npos ? Partition{} : parse_parts(text.substr(slash + 1), text);
  return SkewShape(std::move(lambda), std::move(mu));
}

std::map<int, std::vector<Cell>> diagonals(const SkewShape& shape) {
  std::map<int, std::vector<Cell>> out;
  for (Cell c : shape.cells()) out[content(c)].push_back(c);
  return out;
}

std::vector<std::vector<Cell>> connected_components(const SkewShape& shape) {
  const auto cells = shape.cells();
  std::set<Cell> unseen(cells.begin(), cells.end());
  std::vector<std::vector<Cell>> comps;
  while (!unseen.empty()) {
    std::vector<Cell> comp;
    std::vector<Cell> stack{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      comp.push_back(c);
      for (Cell n : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}}) {
        auto it = unseen.find(n);
        if (it != unseen.end()) {
          stack.push_back(n);
          unseen.erase(it);
        }
      }
    }
    std::sort(comp.begin(), comp.end(), [](Cell a, Cell b) {
      return content(a) != content(b) ? content(a) < content(b) : a.row < b.row;
    });
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return content(a.front()) < content(b.front()); });
  return comps;
}

bool is_connected(const SkewShape& shape) { return connected_components(shape).size() <= 1; }

bool is_border_strip(const SkewShape& shape) {
  if (shape.empty() || !is_connected(shape)) return false;
  for (Cell c : shape.cells())
    if (shape.contains({c.row + 1, c.col}) && shape.contains({c.row, c.col + 1}) &&
        shape.contains({c.row + 1, c.col + 1}))
      return false;
  return true;
}

bool is_border_strip(std::span<const Cell> cells) {
  if (cells.empty()) return false;
  std::vector<Cell> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end(), [](Cell a, Cell b) { return content(a) < content(b); });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (content(sorted[i]) != content(sorted[i - 1]) + 1) return false;
    const Cell p = sorted[i - 1];
    const Cell c = sorted[i];
    const bool right = c.row == p.row && c.col == p.col + 1;
    const bool up = c.row == p.row - 1 && c.col == p.col;
    if (!right && !up) return false;
  }
  return true;
}

SkewShape shape_from_cells(std::span<const Cell> cells) {
  if (cells.empty()) return {};
  int min_row = cells[0].row, max_row = cells[0].row, min_col = cells[0].col;
  for (Cell c : cells) {
    min_row = std::min(min_row, c.row);
    max_row = std::max(max_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  const int rows = max_row - min_row + 1;
  std::vector<int> lo(static_cast<std::size_t>(rows), 0), hi(static_cast<std::size_t>(rows), 0), count(static_cast<std::size_t>(rows), 0);
  std::set<Cell> seen;
  for (Cell c : cells) {
    if (!seen.insert(c).second) throw InvariantError("duplicate cell in cell set");
    auto r = static_cast<std::size_t>(c.row - min_row);
    int col = c.col - min_col + 1;
    lo[r] = count[r] ? std::min(lo[r], col) : col;
    hi[r] = count[r] ? std::max(hi[r], col) : col;
    ++count[r];
  }
  std::vector<int> lambda, mu;
  for (std::size_t r = 0; r < lo.size(); ++r) {
    if (count[r] == 0 || hi[r] - lo[r] + 1 != count[r]) throw InvariantError("cell set is not a skew diagram");
    lambda.push_back(hi[r]);
    mu.push_back(lo[r] - 1);
  }
  for (std::size_t r = 1; r < lambda.size(); ++r)
    if (lambda[r] > lambda[r - 1] || mu[r] > mu[r - 1]) throw InvariantError("cell set is not a skew diagram");
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return SkewShape(Partition(std::move(lambda)), Partition(std::move(mu)));
}

bool is_tight(const SkewShape& shape) {
  const int l = shape.rows();
  if (l == 0 || shape.mu_part(l) != 0) return false;
  for (int i = 1; i <= l; ++i) {
    if (shape.mu_part(i) >= shape.lambda_part(i)) return false;
    if (i < l && shape.mu_part(i) > shape.lambda_part(i + 1)) return false;
  }
  return true;
}

}  // namespace zrank
