#pragma once

#include <utility>
#include <vector>

#include "gontet/bigint.hpp"

namespace gontet {

/// Primes up to and including `limit`, ascending.
std::vector<unsigned long> primes_up_to(unsigned long limit);

/// Prime factorization of n >= 1, ascending primes. Trial division by small
/// primes, then Pollard-Brent rho on the cofactor.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

/// n = root^2 * core with core squarefree.
struct SquareSplit {
  BigInt root;
  BigInt core;
};

SquareSplit square_split(const BigInt& n);

/// Exponent vector over the primes, used for products and quotients of
/// factorials (gon values are multinomials, so their factorizations come
/// straight from Legendre's formula without any trial division).
class PrimeExponents {
 public:
  /// Multiplies the tracked value by (n!)^times; `times` may be negative.
  void add_factorial(unsigned long n, long times = 1);

  /// Multiplies by k^times for a small positive k.
  void add_integer(unsigned long k, long times = 1);

  bool is_integral() const;

  /// Splits the tracked value (must be integral) into root^2 * core.
  SquareSplit square_split() const;

  BigInt value() const;

 private:
  void ensure_primes(unsigned long limit);

  std::vector<unsigned long> primes_;
  std::vector<long> exponents_;
};

}  // namespace gontet
