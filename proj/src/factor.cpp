#include "gontet/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gontet {

std::vector<unsigned long> primes_up_to(unsigned long limit) {
  std::vector<unsigned long> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

namespace {

constexpr unsigned long kTrialLimit = 10000;

BigInt pollard_brent(const BigInt& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  BigInt y = 2 + seed, c = 1 + seed, m = 64, g = 1, r = 1, q = 1;
  BigInt x, ys, diff;
  auto step = [&](BigInt& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (BigInt i = 0; i < r; ++i) step(y);
    BigInt k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (BigInt i = 0; i < m && i < r - k; ++i) {
        step(y);
        diff = abs(x - y);
        q = q * diff % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step(ys);
      diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split_cofactor(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<BigInt, unsigned> sub;
    split_cofactor(root, sub);
    for (const auto& [p, e] : sub) out[p] += 2 * e;
    return;
  }
  BigInt d = n;
  for (unsigned long seed = 1; d == n || d == 1; ++seed) d = pollard_brent(n, seed);
  split_cofactor(d, out);
  split_cofactor(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
  static const std::vector<unsigned long> small = primes_up_to(kTrialLimit);
  std::map<BigInt, unsigned> found;
  BigInt rest = n;
  for (unsigned long p : small) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[BigInt(p)];
    }
  }
  split_cofactor(rest, found);
  return {found.begin(), found.end()};
}

SquareSplit square_split(const BigInt& n) {
  SquareSplit out{1, 1};
  for (const auto& [p, e] : factorize(n)) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e / 2);
    out.root *= pw;
    if (e % 2) out.core *= p;
  }
  return out;
}

void PrimeExponents::ensure_primes(unsigned long limit) {
  if (!primes_.empty() && primes_.back() >= limit) return;
  if (limit < 2) return;
  // Grow geometrically so repeated calls stay cheap.
  unsigned long target = std::max(limit, primes_.empty() ? 64UL : 2 * primes_.back());
  primes_ = primes_up_to(target);
  exponents_.resize(primes_.size(), 0);
}

void PrimeExponents::add_factorial(unsigned long n, long times) {
  if (n < 2 || times == 0) return;
  ensure_primes(n);
  for (std::size_t i = 0; i < primes_.size() && primes_[i] <= n; ++i) {
    unsigned long p = primes_[i], e = 0;
    for (unsigned long pk = p; pk <= n; pk *= p) {
      e += n / pk;
      if (pk > n / p) break;
    }
    exponents_[i] += times * static_cast<long>(e);
  }
}

void PrimeExponents::add_integer(unsigned long k, long times) {
  if (k == 0) throw std::domain_error("PrimeExponents: zero factor");
  if (k < 2 || times == 0) return;
  ensure_primes(k);
  for (std::size_t i = 0; i < primes_.size() && k > 1; ++i) {
    while (k % primes_[i] == 0) {
      k /= primes_[i];
      exponents_[i] += times;
    }
  }
}

bool PrimeExponents::is_integral() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](long e) { return e >= 0; });
}

SquareSplit PrimeExponents::square_split() const {
  if (!is_integral()) throw std::domain_error("PrimeExponents: value is not an integer");
  SquareSplit out{1, 1};
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const long e = exponents_[i];
    if (e == 0) continue;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), primes_[i], static_cast<unsigned long>(e / 2));
    out.root *= pw;
    if (e % 2) out.core *= primes_[i];
  }
  return out;
}

BigInt PrimeExponents::value() const {
  if (!is_integral()) throw std::domain_error("PrimeExponents: value is not an integer");
  BigInt out = 1;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), primes_[i], static_cast<unsigned long>(exponents_[i]));
    out *= pw;
  }
  return out;
}

}  // namespace gontet
