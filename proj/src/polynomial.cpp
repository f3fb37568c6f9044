#include "zrank/polynomial.hpp"

#include <utility>

#include "zrank/error.hpp"

namespace zrank {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

RatPoly RatPoly::monomial(const Rational& c, int power) {
  if (power < 0) throw InvariantError("negative monomial power");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::optional<int> RatPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return std::nullopt;
}

Rational RatPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& o) { return *this = *this * o; }

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw InvariantError("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPoly{}, num};
  std::vector<Rational> rem = num.coeffs_;
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1);
  const Rational& lead = den.leading();
  const int dd = den.degree();
  for (int k = num.degree() - dd; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * den.coeffs_[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::divide_exact(const RatPoly& num, const RatPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw InvariantError("inexact polynomial division");
  return q;
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].get_str();
    if (i == 1)
      out += "*t";
    else if (i > 1)
      out += "*t^" + std::to_string(i);
  }
  return out;
}

std::vector<std::string> RatPoly::to_fraction_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_fraction_string(c));
  return out;
}

}  // namespace zrank
