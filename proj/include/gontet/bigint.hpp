#pragma once

#include <gmpxx.h>

#include <string>

namespace gontet {

// Unbounded integers and reduced rationals. Every classical value in the
// library lives in one of these two types.
using BigInt = mpz_class;
using BigRational = mpq_class;

std::string to_string(const BigInt& v);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const BigRational& v);

BigInt parse_bigint(const std::string& text);

/// Accepts "p" or "p/q"; the result is canonicalized.
BigRational parse_rational(const std::string& text);

BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// (-1)^k for any integer k.
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

/// Returns true and sets `quotient` when `den` divides `num` exactly.
bool divides_exactly(const BigInt& num, const BigInt& den, BigInt& quotient);

}  // namespace gontet
