#pragma once

#include <string>

#include "gontet/bigint.hpp"

namespace gontet {

/// An exact value coeff * sqrt(radicand) with a squarefree radicand.
///
/// Canonical form: radicand >= 1 and squarefree, radicand == 1 exactly when
/// the value is rational, and zero is stored as 0 * sqrt(1). Two surds are
/// equal iff their coefficients and radicands are equal.
class Surd {
 public:
  Surd() = default;
  Surd(long v) : coeff_(v) {}  // NOLINT(google-explicit-constructor)
  Surd(const BigInt& v) : coeff_(v) {}  // NOLINT(google-explicit-constructor)
  Surd(const BigRational& v) : coeff_(v) {}  // NOLINT(google-explicit-constructor)

  /// Pulls square factors of `radicand` into the coefficient (factorizes).
  static Surd normalize(const BigRational& coeff, const BigInt& radicand);

  /// Trusted constructor: `radicand` must already be squarefree.
  static Surd from_squarefree(const BigRational& coeff, const BigInt& radicand);

  /// sqrt(value) for a non-negative rational.
  static Surd sqrt_of(const BigRational& value);

  const BigRational& coeff() const { return coeff_; }
  const BigInt& radicand() const { return radicand_; }

  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return radicand_ == 1; }
  int sign() const { return sgn(coeff_); }

  BigRational squared() const { return coeff_ * coeff_ * radicand_; }
  double to_double() const;

  /// "p/q*sqrt(d)", or just "p/q" when rational.
  std::string to_string() const;

  Surd operator-() const;
  Surd& operator*=(const Surd& rhs);
  Surd& operator/=(const Surd& rhs);
  friend Surd operator*(Surd lhs, const Surd& rhs) { return lhs *= rhs; }
  friend Surd operator/(Surd lhs, const Surd& rhs) { return lhs /= rhs; }

  friend bool operator==(const Surd& lhs, const Surd& rhs) {
    return lhs.coeff_ == rhs.coeff_ && lhs.radicand_ == rhs.radicand_;
  }

 private:
  Surd(const BigRational& coeff, const BigInt& radicand) : coeff_(coeff), radicand_(radicand) {}
  void canonicalize_zero();

  BigRational coeff_{0};
  BigInt radicand_{1};
};

/// Free-function spelling of Surd::normalize.
inline Surd surd_normalize(const BigRational& coeff, const BigInt& radicand) {
  return Surd::normalize(coeff, radicand);
}

}  // namespace gontet
