#include "gontet/surd.hpp"

#include <cmath>
#include <stdexcept>

#include "gontet/factor.hpp"

namespace gontet {

void Surd::canonicalize_zero() {
  if (coeff_ == 0) radicand_ = 1;
}

Surd Surd::normalize(const BigRational& coeff, const BigInt& radicand) {
  if (radicand < 0) throw std::domain_error("surd radicand must be non-negative");
  if (radicand == 0 || coeff == 0) return Surd();
  const SquareSplit split = square_split(radicand);
  Surd out(coeff * split.root, split.core);
  out.coeff_.canonicalize();
  return out;
}

Surd Surd::from_squarefree(const BigRational& coeff, const BigInt& radicand) {
  if (radicand < 1) throw std::domain_error("surd radicand must be positive");
  Surd out(coeff, radicand);
  out.canonicalize_zero();
  return out;
}

Surd Surd::sqrt_of(const BigRational& value) {
  if (value < 0) throw std::domain_error("sqrt of a negative rational");
  // sqrt(p/q) = sqrt(p*q)/q
  return normalize(BigRational(1, 1) / value.get_den(), value.get_num() * value.get_den());
}

double Surd::to_double() const {
  return coeff_.get_d() * std::sqrt(radicand_.get_d());
}

std::string Surd::to_string() const {
  std::string out = gontet::to_string(coeff_);
  if (!is_rational()) out += "*sqrt(" + gontet::to_string(radicand_) + ")";
  return out;
}

Surd Surd::operator-() const { return Surd(-coeff_, radicand_); }

Surd& Surd::operator*=(const Surd& rhs) {
  // sqrt(d1) sqrt(d2) = g sqrt((d1/g)(d2/g)) with g = gcd(d1, d2); both
  // cofactors are squarefree and coprime, so the product stays squarefree.
  BigInt g;
  mpz_gcd(g.get_mpz_t(), radicand_.get_mpz_t(), rhs.radicand_.get_mpz_t());
  coeff_ *= rhs.coeff_ * g;
  radicand_ = (radicand_ / g) * (rhs.radicand_ / g);
  canonicalize_zero();
  return *this;
}

Surd& Surd::operator/=(const Surd& rhs) {
  if (rhs.is_zero()) throw std::domain_error("surd division by zero");
  // 1/(c sqrt(d)) = (1/(c d)) sqrt(d)
  Surd inv(BigRational(1) / (rhs.coeff_ * rhs.radicand_), rhs.radicand_);
  return *this *= inv;
}

}  // namespace gontet
