#include <algorithm>

#include "zrank/error.hpp"
#include "zrank/shape.hpp"

namespace zrank {

namespace {

struct Canonical {
  const ShapeBounds& b;
  const std::function<void(const SkewShape&)>& visit;
  std::int64_t count = 0;
  std::vector<int> lambda;
  std::vector<int> mu;

  // Lower bound on the cells of rows after `row` once mu_row is fixed.
  int remaining_floor(std::size_t row, int mu_row) const {
    int s = 0;
    for (std::size_t j = row + 1; j < lambda.size(); ++j) s += std::max(0, lambda[j] - mu_row);
    return s;
  }

  void emit() {
    std::vector<int> m = mu;
    while (!m.empty() && m.back() == 0) m.pop_back();
    visit(SkewShape(Partition(lambda), Partition(std::move(m))));
    ++count;
  }

  void mus(std::size_t row, int cells) {
    if (row == lambda.size()) {
      if (cells >= 1) emit();
      return;
    }
    int hi = std::min(lambda[row], row == 0 ? lambda[0] - 1 : mu[row - 1]);
    // Descending mu_row means ascending cells in this row.
    for (int m = hi; m >= 0; --m) {
      int c = cells + lambda[row] - m;
      if (c > b.max_cells) break;
      if (c + remaining_floor(row, m) > b.max_cells) continue;
      mu.push_back(m);
      mus(row + 1, c);
      mu.pop_back();
    }
  }

  void lambdas(int max_part) {
    if (!lambda.empty()) mus(0, 0);
    if (static_cast<int>(lambda.size()) == b.max_rows) return;
    for (int p = 1; p <= max_part; ++p) {
      lambda.push_back(p);
      lambdas(p);
      lambda.pop_back();
    }
  }
};

struct Tight {
  const ShapeBounds& b;
  const std::function<void(const SkewShape&)>& visit;
  std::int64_t count = 0;
  std::vector<int> lambda;
  std::vector<int> mu;

  void emit() {
    std::vector<int> m = mu;
    while (!m.empty() && m.back() == 0) m.pop_back();
    visit(SkewShape(Partition(lambda), Partition(std::move(m))));
    ++count;
  }

  // Rows below a row ending at mu_prev need at least mu_prev further cells
  // (mu must telescope down to zero) and at least one more row.
  void extend(int cells) {
    const std::size_t row = lambda.size();
    const int mu_prev = row == 0 ? b.max_cols : mu.back();
    const int lam_prev = row == 0 ? b.max_cols : lambda.back();
    if (row > 0 && mu_prev == 0) emit();
    if (static_cast<int>(row) == b.max_rows) return;
    const int mu_hi = row == 0 ? b.max_cols - 1 : mu_prev;
    for (int m = 0; m <= mu_hi; ++m) {
      const int lam_lo = std::max(m + 1, row == 0 ? 1 : mu_prev);
      for (int l = lam_lo; l <= lam_prev; ++l) {
        const int c = cells + l - m;
        if (c > b.max_cells) break;
        if (m > 0 && (c + m > b.max_cells || static_cast<int>(row) + 1 == b.max_rows)) continue;
        lambda.push_back(l);
        mu.push_back(m);
        extend(c);
        lambda.pop_back();
        mu.pop_back();
      }
    }
  }
};

}  // namespace

std::int64_t for_each_shape(const ShapeBounds& bounds, ShapeFamily family,
                            const std::function<void(const SkewShape&)>& visit) {
  if (bounds.max_cells < 1 || bounds.max_rows < 1 || bounds.max_cols < 1)
    throw InvariantError("shape bounds must be positive");
  if (family == ShapeFamily::canonical) {
    Canonical gen{bounds, visit, 0, {}, {}};
    gen.lambdas(bounds.max_cols);
    return gen.count;
  }
  Tight gen{bounds, visit, 0, {}, {}};
  gen.extend(0);
  return gen.count;
}

std::vector<SkewShape> enumerate_shapes(const ShapeBounds& bounds, ShapeFamily family) {
  std::vector<SkewShape> out;
  for_each_shape(bounds, family, [&](const SkewShape& s) { out.push_back(s); });
  return out;
}

std::vector<SkewShape> enumerate_shapes(int max_cells) { return enumerate_shapes(ShapeBounds::cells(max_cells)); }

}  // namespace zrank
