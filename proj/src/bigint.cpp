#include "gontet/bigint.hpp"

#include <stdexcept>

#include "gontet/errors.hpp"

namespace gontet {

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const BigRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

BigInt parse_bigint(const std::string& text) {
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return out;
}

BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_bigint(text));
  return make_rational(parse_bigint(text.substr(0, slash)),
                       parse_bigint(text.substr(slash + 1)));
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool divides_exactly(const BigInt& num, const BigInt& den, BigInt& quotient) {
  if (den == 0) return false;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
  mpz_divexact(quotient.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return true;
}

}  // namespace gontet
