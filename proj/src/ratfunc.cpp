#include "gontet/ratfunc.hpp"

#include <stdexcept>
#include <vector>

#include "gontet/errors.hpp"

namespace gontet {

namespace {

using Dense = std::vector<BigInt>;  // ascending coefficients, last entry nonzero

BigInt content(const Dense& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& p) {
  const BigInt g = content(p);
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  if (!p.empty() && p.back() < 0) {
    for (auto& c : p) c = -c;
  }
}

void trim_top(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
Dense pseudo_remainder(Dense a, const Dense& b) {
  const BigInt& lead = b.back();
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const BigInt top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= top * b[j];
    trim_top(a);
  }
  return a;
}

Dense to_dense_poly(const LaurentPoly& p) { return p.dense(); }

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Dense x = to_dense_poly(a), y = to_dense_poly(b);
  if (x.empty()) std::swap(x, y);
  if (y.empty()) {
    make_primitive(x);
    return LaurentPoly::from_dense(0, std::move(x));
  }
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = pseudo_remainder(x, y);
    x = std::move(y);
    if (!r.empty()) make_primitive(r);
    y = std::move(r);
  }
  make_primitive(x);
  return LaurentPoly::from_dense(0, std::move(x));
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const LaurentPoly g = laurent_gcd(num_, den_);
  if (g.span() > 1) {
    num_ = laurent_divexact(num_, g);
    den_ = laurent_divexact(den_, g);
  }
  BigInt c = content(num_.dense());
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), content(den_.dense()).get_mpz_t());
  if (den_.dense().back() < 0) c = -c;
  if (c != 1) {
    num_ = laurent_divexact(num_, LaurentPoly(c));
    den_ = laurent_divexact(den_, LaurentPoly(c));
  }
  const int shift = -den_.min_exponent();
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
}

bool RatFunc::is_laurent() const { return den_ == LaurentPoly(1); }

LaurentPoly RatFunc::to_laurent() const {
  if (!is_laurent()) throw NotDivisible("rational function is not a Laurent polynomial");
  return num_;
}

BigRational RatFunc::eval_at_one() const {
  return make_rational(num_.eval_at_one(), den_.eval_at_one());
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw std::domain_error("RatFunc: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

}  // namespace gontet
