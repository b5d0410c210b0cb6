#include "gontet/root_of_unity.hpp"

#include <mpfr.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace gontet {

RootOfUnity::RootOfUnity(int kappa) : kappa_(kappa) {
  if (kappa < 2) throw std::domain_error("root of unity requires kappa >= 2");
}

std::complex<double> RootOfUnity::value() const {
  return std::polar(1.0, std::numbers::pi / kappa_);
}

namespace {

// RAII holder for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

std::complex<double> eval_at_root(const LaurentPoly& p, const RootOfUnity& root) {
  if (p.is_zero()) return 0.0;
  const long period = 2L * root.kappa();
  const auto bits = static_cast<mpfr_prec_t>(mpz_sizeinbase(p.max_abs_coeff().get_mpz_t(), 2));
  const mpfr_prec_t prec = bits + 96 + static_cast<mpfr_prec_t>(std::log2(p.span() + 1.0));

  Mpfr re(prec), im(prec), angle(prec), term(prec), pi(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);

  // cos/sin of r*pi/kappa keyed by the exponent residue r, built lazily.
  std::unordered_map<long, std::pair<std::unique_ptr<Mpfr>, std::unique_ptr<Mpfr>>> trig;

  const auto& coeffs = p.dense();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const long e = p.min_exponent() + static_cast<long>(i);
    const long r = ((e % period) + period) % period;
    auto it = trig.find(r);
    if (it == trig.end()) {
      auto c = std::make_unique<Mpfr>(prec);
      auto s = std::make_unique<Mpfr>(prec);
      mpfr_mul_si(angle.get(), pi.get(), r, MPFR_RNDN);
      mpfr_div_si(angle.get(), angle.get(), root.kappa(), MPFR_RNDN);
      mpfr_sin_cos(s->get(), c->get(), angle.get(), MPFR_RNDN);
      it = trig.emplace(r, std::make_pair(std::move(c), std::move(s))).first;
    }
    mpfr_mul_z(term.get(), it->second.first->get(), coeffs[i].get_mpz_t(), MPFR_RNDN);
    mpfr_add(re.get(), re.get(), term.get(), MPFR_RNDN);
    mpfr_mul_z(term.get(), it->second.second->get(), coeffs[i].get_mpz_t(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), term.get(), MPFR_RNDN);
  }
  return {mpfr_get_d(re.get(), MPFR_RNDN), mpfr_get_d(im.get(), MPFR_RNDN)};
}

double qint_at_root(int n, const RootOfUnity& root) {
  const double step = std::numbers::pi / root.kappa();
  return std::sin(n * step) / std::sin(step);
}

}  // namespace gontet
