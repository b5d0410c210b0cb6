#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gontet/bigint.hpp"
#include "gontet/surd.hpp"
#include "gontet/triples.hpp"

namespace gontet {

/// gon(a,b,c) = (m+n+p+1)! / (m! n! p!), or 0 for non-admissible input.
/// Memoized process-wide; safe to call from many threads.
BigInt gon3(int a, int b, int c);
inline BigInt gon3(const Triple& t) { return gon3(t.a, t.b, t.c); }

/// Same value without touching the memo.
BigInt gon3_uncached(int a, int b, int c);

/// Memo maintenance (the CLI cache file seeds and dumps it).
struct Gon3Entry {
  Triple key;  // sorted ascending
  BigInt value;
};
std::vector<Gon3Entry> gon3_memo_snapshot();
void gon3_memo_insert(const Triple& sorted_key, const BigInt& value);
void gon3_memo_clear();
std::size_t gon3_memo_size();

/// Kauffman theta: (-1)^sigma (sigma+1)! m! n! p! / ((m+n)! (m+p)! (n+p)!).
BigRational theta_k(int a, int b, int c);

/// gon of an arbitrary multiset of labels, by repeated triangulation.
/// Memoized on the sorted multiset.
BigInt gon_poly(std::span<const int> xs);

/// Same recursion, but peels the last two entries in the order given and
/// skips the memo. Different orders are different triangulations.
BigInt gon_poly_ordered(std::span<const int> xs);

/// gon(a,a,b,b) from its finite hypergeometric sum.
BigInt gon4_hyper(int a, int b);

/// Clebsch-Gordan coefficient <j1 0 j2 0 | j 0> from gon values. Arguments
/// are doubled spins; odd arguments (half-integer spins) throw NonIntegerSpin.
Surd special_clebsch(int two_j1, int two_j2, int two_j);

/// Signed magnitude held in log space so large asymptotic estimates do not
/// overflow.
struct LogValue {
  int sign = 1;
  double log_abs = 0.0;  // natural log of |value|

  double to_double() const;
  /// Scientific notation with 12 significant digits.
  std::string to_string() const;
};

LogValue log_value(const BigRational& v);

/// |estimate / exact - 1|; exact must be nonzero.
double relative_error(const LogValue& estimate, const BigRational& exact);

/// Stirling estimate of gon(ka, kb, kc). Throws Degenerate when m, n or p is 0.
LogValue gon_asym(int a, int b, int c, int k);

/// Stirling estimate of theta_k(ka, kb, kc), sign (-1)^(k sigma).
LogValue theta_k_asym(int a, int b, int c, int k);

}  // namespace gontet
