#include "gontet/laurent.hpp"

#include <algorithm>
#include <map>

#include "gontet/errors.hpp"

namespace gontet {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly out(c);
  if (!out.is_zero()) out.low_ = exponent;
  return out;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
  std::map<int, BigInt> acc;
  for (const auto& [e, c] : terms) acc[e] += c;
  if (acc.empty()) return {};
  const int low = acc.begin()->first;
  const int high = acc.rbegin()->first;
  std::vector<BigInt> dense(static_cast<std::size_t>(high - low + 1));
  for (const auto& [e, c] : acc) dense[static_cast<std::size_t>(e - low)] = c;
  return from_dense(low, std::move(dense));
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<BigInt> coeffs) {
  LaurentPoly out;
  out.low_ = low;
  out.coeffs_ = std::move(coeffs);
  out.trim();
  return out;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    low_ += static_cast<int>(first);
  }
}

BigInt LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, BigInt>> LaurentPoly::terms() const {
  std::vector<std::pair<int, BigInt>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

bool LaurentPoly::is_palindromic() const {
  if (is_zero()) return true;
  if (low_ != -max_exponent()) return false;
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

BigInt LaurentPoly::max_abs_coeff() const {
  BigInt best = 0;
  for (const auto& c : coeffs_) {
    if (mpz_cmpabs(c.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(c);
  }
  return best;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

LaurentPoly& LaurentPoly::mul_qint(int n) {
  if (n < 0) throw std::domain_error("mul_qint: negative argument");
  if (n == 0 || is_zero()) {
    *this = LaurentPoly();
    return *this;
  }
  if (n == 1) return *this;
  // [n]_q = q^(1-n) (1 + q^2 + ... + q^(2n-2)); sliding window sum per parity.
  const std::size_t len = coeffs_.size();
  const std::size_t width = 2 * static_cast<std::size_t>(n);
  std::vector<BigInt> out(len + width - 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < len) out[i] = coeffs_[i];
    if (i >= width && i - width < len) out[i] -= coeffs_[i - width];
    if (i >= 2) out[i] += out[i - 2];
  }
  coeffs_ = std::move(out);
  low_ += 1 - n;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::div_qint(int n) {
  if (n < 1) throw NotDivisible("div_qint: [0]_q is zero");
  if (n == 1 || is_zero()) return *this;
  // r [n]_q = c  <=>  r (1 - q^(2n)) = c q^(n-1) (1 - q^2).
  const std::size_t len = coeffs_.size();
  const std::size_t width = 2 * static_cast<std::size_t>(n);
  std::vector<BigInt> f(len + 2);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i < len) f[i] = coeffs_[i];
    if (i >= 2 && i - 2 < len) f[i] -= coeffs_[i - 2];
  }
  if (f.size() < width) throw NotDivisible("div_qint: degree span too small");
  const std::size_t out_len = f.size() - width;
  std::vector<BigInt> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    r[i] = f[i];
    if (i >= width) r[i] += r[i - width];
  }
  for (std::size_t i = out_len; i < f.size(); ++i) {
    if (r[i] != 0) throw NotDivisible("div_qint: nonzero remainder");
  }
  r.resize(out_len);
  coeffs_ = std::move(r);
  low_ += n - 1;
  trim();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int low = std::min(low_, rhs.low_);
  const int high = std::max(max_exponent(), rhs.max_exponent());
  std::vector<BigInt> out(static_cast<std::size_t>(high - low + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[static_cast<std::size_t>(low_ - low) + i] = coeffs_[i];
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    out[static_cast<std::size_t>(rhs.low_ - low) + i] += rhs.coeffs_[i];
  }
  low_ = low;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
    }
  }
  return LaurentPoly::from_dense(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly qint(int n) {
  if (n < 0) throw std::domain_error("qint: negative argument");
  LaurentPoly one(1);
  return one.mul_qint(n);
}

LaurentPoly qfactorial(int s) {
  if (s < 0) throw std::domain_error("qfactorial: negative argument");
  LaurentPoly out(1);
  for (int n = 2; n <= s; ++n) out.mul_qint(n);
  return out;
}

LaurentPoly q_multinomial(int top, const std::vector<int>& bottoms) {
  long total = 0;
  for (int b : bottoms) {
    if (b < 0) throw std::domain_error("q_multinomial: negative part");
    total += b;
  }
  if (top < 0 || total > top) throw std::domain_error("q_multinomial: parts exceed top");
  std::vector<int> parts = bottoms;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  const int largest = parts.empty() ? 0 : parts.front();
  LaurentPoly out(1);
  for (int k = largest + 1; k <= top; ++k) out.mul_qint(k);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    for (int k = 2; k <= parts[i]; ++k) out.div_qint(k);
  }
  return out;
}

std::optional<LaurentPoly> try_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("laurent division by zero");
  if (a.is_zero()) return LaurentPoly();
  const auto& bd = b.dense();
  const std::size_t bl = bd.size();
  if (a.span() < bl) return std::nullopt;
  std::vector<BigInt> rem = a.dense();
  const std::size_t ql = rem.size() - bl + 1;
  std::vector<BigInt> quo(ql);
  const BigInt& lead = bd.back();
  for (std::size_t k = ql; k-- > 0;) {
    BigInt& top = rem[k + bl - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(quo[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    const mpz_srcptr qk = quo[k].get_mpz_t();
    for (std::size_t j = 0; j < bl; ++j) {
      if (bd[j] == 0) continue;
      mpz_submul(rem[k + j].get_mpz_t(), qk, bd[j].get_mpz_t());
    }
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return LaurentPoly::from_dense(a.min_exponent() - b.min_exponent(), std::move(quo));
}

LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_divexact(a, b);
  if (!q) throw NotDivisible("Laurent polynomial is not divisible");
  return *std::move(q);
}

std::complex<double> laurent_eval(const LaurentPoly& p, std::complex<double> z) {
  if (p.is_zero()) return 0.0;
  const auto& c = p.dense();
  bool single_parity = true;
  for (std::size_t i = 1; i < c.size(); i += 2) {
    if (c[i] != 0) {
      single_parity = false;
      break;
    }
  }
  std::complex<double> acc = 0.0;
  if (single_parity) {
    const std::complex<double> z2 = z * z;
    for (std::size_t i = (c.size() - 1) / 2 * 2 + 2; i >= 2; i -= 2) acc = acc * z2 + c[i - 2].get_d();
  } else {
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i].get_d();
  }
  return acc * std::pow(z, p.min_exponent());
}

}  // namespace gontet
