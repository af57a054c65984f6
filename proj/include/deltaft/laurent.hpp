#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace deltaft {

using Integer = mpz_class;
using Rational = mpq_class;

/// Laurent polynomial with arbitrary-precision integer coefficients, stored
/// densely from the lowest nonzero exponent. No zero coefficient is stored
/// at either end; the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  static LaurentPoly monomial(const Integer& c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int exponent) const;
  /// (exponent, coefficient) pairs for the nonzero terms, ascending.
  std::vector<std::pair<int, Integer>> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly& operator*=(const Integer& c);

  /// Multiplies by var^n.
  LaurentPoly shifted(int n) const;
  /// Adds c * var^shift * other in place.
  void add_scaled(const LaurentPoly& other, const Integer& c, int shift);
  /// Substitutes var -> var^factor (factor may be negative).
  LaurentPoly rescaled(int factor) const;
  /// Exponents divided by `divisor`; throws DomainError if one is not a multiple.
  LaurentPoly exponents_divided(int divisor) const;

  Integer evaluate_at_one() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "t + t^3 - t^4"; exponents are shown divided by `unit` when the unit is
  /// 2 (half powers print as t^(3/2)).
  std::string to_string(const std::string& var, int unit = 1) const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Exact quotient a / b in Z[t, t^-1]; throws DomainError when b does not
/// divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace deltaft
