#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "gontet/bigint.hpp"

namespace gontet {

/// Integer Laurent polynomial in q.
///
/// Stored as the lowest exponent plus a contiguous coefficient vector whose
/// first and last entries are nonzero (the zero polynomial is empty), so the
/// representation is canonical and `==` is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const BigInt& c, int exponent);

  /// Builds from (exponent, coefficient) pairs; repeated exponents add.
  static LaurentPoly from_terms(const std::vector<std::pair<int, BigInt>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t span() const { return coeffs_.size(); }

  BigInt coeff(int exponent) const;

  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, BigInt>> terms() const;

  /// Value at q = 1.
  BigInt eval_at_one() const;

  /// coeff(e) == coeff(-e) for every e.
  bool is_palindromic() const;

  /// Largest absolute coefficient (0 for the zero polynomial).
  BigInt max_abs_coeff() const;

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;

  /// In-place multiplication by the balanced q-integer [n]_q (n >= 0).
  LaurentPoly& mul_qint(int n);

  /// In-place exact division by [n]_q (n >= 1); throws NotDivisible.
  LaurentPoly& div_qint(int n);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  // Raw access for kernels that work on the dense layout.
  const std::vector<BigInt>& dense() const { return coeffs_; }
  static LaurentPoly from_dense(int low, std::vector<BigInt> coeffs);

 private:
  void trim();

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Balanced q-integer [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n); [0]_q = 0.
LaurentPoly qint(int n);

/// [s]!_q = [1]_q [2]_q ... [s]_q; [0]!_q = 1.
LaurentPoly qfactorial(int s);

/// [top]!_q / prod [b]!_q, computed with O(degree) kernels per factor.
/// Requires sum(bottoms) <= top.
LaurentPoly q_multinomial(int top, const std::vector<int>& bottoms);

/// c with b * c == a, or nullopt when no Laurent polynomial quotient exists.
std::optional<LaurentPoly> try_divexact(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient; throws NotDivisible.
LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b);

/// Double-precision evaluation at z != 0: Horner in z^2 after factoring out
/// the lowest power (every q-value in the library has single-parity
/// exponents). Absolute error grows like #terms * max|coeff| * eps, so this is
/// only reliable when the value is not much smaller than the coefficients;
/// use eval_at_root for root-of-unity values.
std::complex<double> laurent_eval(const LaurentPoly& p, std::complex<double> z);

}  // namespace gontet
