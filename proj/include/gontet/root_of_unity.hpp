#pragma once

#include <complex>

#include "gontet/laurent.hpp"

namespace gontet {

/// q = exp(i pi / kappa); level = kappa - 2.
class RootOfUnity {
 public:
  explicit RootOfUnity(int kappa);

  int kappa() const { return kappa_; }
  int level() const { return kappa_ - 2; }

  /// Largest allowed triple perimeter, 2 kappa - 4.
  int max_perimeter() const { return 2 * kappa_ - 4; }

  std::complex<double> value() const;

 private:
  int kappa_;
};

/// Evaluates p at the root with MPFR, using enough working precision that
/// cancellation between large coefficients cannot reach the returned
/// double. Powers of q are taken modulo 2 kappa so only exact angles are used.
std::complex<double> eval_at_root(const LaurentPoly& p, const RootOfUnity& root);

/// Closed form [n]_q at the root: sin(n pi / kappa) / sin(pi / kappa).
double qint_at_root(int n, const RootOfUnity& root);

}  // namespace gontet
