#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zrank/rational.hpp"

namespace zrank {

/// Univariate polynomial in t with exact rational coefficients.
///
/// Coefficient i multiplies t^i. Trailing zero coefficients are trimmed, so
/// the zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(const Rational& c);  // NOLINT: constants convert implicitly
  RatPoly(long c) : RatPoly(Rational(c)) {}  // NOLINT

  static RatPoly t() { return RatPoly(std::vector<Rational>{0, 1}); }
  static RatPoly monomial(const Rational& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Zero for indices past the degree.
  Rational coefficient(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  // Index of the lowest nonzero coefficient, i.e. the multiplicity of t = 0
  // as a root. Empty for the zero polynomial.
  std::optional<int> valuation() const;

  Rational evaluate(const Rational& x) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);
  RatPoly operator-() const;

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder of Euclidean division; divisor must be nonzero.
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);
  /// Division that must leave no remainder (throws InvariantError otherwise).
  static RatPoly divide_exact(const RatPoly& num, const RatPoly& den);

  /// "c0 + c1*t + c2*t^2" with zero terms omitted; "0" for the zero polynomial.
  std::string to_string() const;
  /// Every coefficient up to the degree as a "num/den" string.
  std::vector<std::string> to_fraction_strings() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace zrank
