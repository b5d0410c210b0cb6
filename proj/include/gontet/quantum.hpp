#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gontet/identities.hpp"
#include "gontet/laurent.hpp"
#include "gontet/ratfunc.hpp"
#include "gontet/root_of_unity.hpp"
#include "gontet/triples.hpp"

namespace gontet {

using OptRoot = std::optional<RootOfUnity>;

/// [sigma+1]!_q / ([m]!_q [n]!_q [p]!_q); 0 when not admissible, or not
/// q-admissible at the given root.
LaurentPoly gon_q(int a, int b, int c, const OptRoot& root = std::nullopt);

/// q-analog of gon_poly; diagonal ranges are truncated at the root if given.
LaurentPoly gon_q_poly(std::span<const int> xs, const OptRoot& root = std::nullopt);

/// Alternating sum of q-multinomials; 0 when not (q-)admissible.
LaurentPoly tet_q(const TetLabels& t, const OptRoot& root = std::nullopt);

/// Real value of tet_q at the root. Throws NotQAdmissible, or
/// NumericInstability when the imaginary residue is not negligible.
double tet_q_at_root(const TetLabels& t, const RootOfUnity& root);

/// TET_q = J_q / E_q * tet_q with the common [k]_q factors cancelled.
struct QFraction {
  LaurentPoly num;
  LaurentPoly den;
  BigRational eval_at_one() const;
  double eval_at_root(const RootOfUnity& root) const;
};
QFraction tet_k_q(const TetLabels& t);

/// tet_q / sqrt(|prod gon_q|) at the root. Throws NotQAdmissible.
double sixj_q(const TetLabels& t, const RootOfUnity& root);

/// Product of q-integers, as exponents of the cyclotomic factors
/// Phi_d(q^2), d >= 2, with the balanced monomial shift implied.
class CycloFactors {
 public:
  /// [n]!_q.
  static CycloFactors qfactorial(int n);
  /// gon_q(a,b,c) for an admissible triple.
  static CycloFactors gon(int a, int b, int c);

  CycloFactors& operator*=(const CycloFactors& rhs);
  /// Exact quotient; throws NotDivisible if an exponent would go negative.
  CycloFactors& operator/=(const CycloFactors& rhs);
  static CycloFactors lcm(const CycloFactors& x, const CycloFactors& y);

  LaurentPoly to_laurent() const;
  const std::map<int, int>& exponents() const { return exps_; }

 private:
  std::map<int, int> exps_;
};

/// Phi_d(x) as a polynomial in x (exponents 0..phi(d)).
LaurentPoly cyclotomic(int d);

struct QIdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, RatFunc>> exact;  // empty in numeric mode
  std::vector<std::pair<std::string, std::complex<double>>> numeric;  // values at the root
  std::vector<std::pair<std::string, std::vector<int>>> witness;
  bool equal = false;
};

/// q-duality channel sums. With a root, ranges are truncated and the
/// channels are compared by value at the root.
QIdentityReport verify_q_duality(int a, int b, int c, int d, const OptRoot& root = std::nullopt);

/// hed_1,q = hed_2,q. Without a root the comparison is exact (all
/// denominators cleared by a cyclotomic lcm) and is limited to labels <= 24;
/// with a root the diagonal is truncated and both sides are compared
/// numerically at the root.
QIdentityReport verify_q_pentagon(const Bipyramid& bp, const OptRoot& root = std::nullopt);

/// Relative tolerance for comparisons at the root.
inline constexpr double kRootTolerance = 1e-9;

}  // namespace gontet
