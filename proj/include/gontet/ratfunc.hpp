#pragma once

#include <string>

#include "gontet/laurent.hpp"

namespace gontet {

/// Content-free gcd of two Laurent polynomials, returned with lowest
/// exponent 0 and a positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient of Laurent polynomials in lowest terms.
///
/// Normal form: the polynomial gcd of numerator and denominator is removed,
/// the common integer content is removed, the denominator's lowest exponent
/// is 0 and its leading coefficient is positive. Equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) { normalize(); }  // NOLINT
  RatFunc(long c) : RatFunc(LaurentPoly(c)) {}  // NOLINT
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  /// True when the denominator is a unit monomial (+-q^k, k = 0 here).
  bool is_laurent() const;
  LaurentPoly to_laurent() const;  // throws NotDivisible unless is_laurent()

  BigRational eval_at_one() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace gontet
