#include "gontet/gon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <unordered_map>

#include "gontet/errors.hpp"

namespace gontet {

namespace {

class Gon3Memo {
 public:
  static constexpr int kMaxLabel = (1 << 20) - 1;

  static std::uint64_t key(int a, int b, int c) {
    return (static_cast<std::uint64_t>(a) << 42) | (static_cast<std::uint64_t>(b) << 21) |
           static_cast<std::uint64_t>(c);
  }

  bool find(std::uint64_t k, BigInt& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }

  void insert(std::uint64_t k, const BigInt& v) {
    std::unique_lock lock(mutex_);
    map_.emplace(k, v);
  }

  std::vector<Gon3Entry> snapshot() const {
    std::shared_lock lock(mutex_);
    std::vector<Gon3Entry> out;
    out.reserve(map_.size());
    for (const auto& [k, v] : map_) {
      const int a = static_cast<int>(k >> 42);
      const int b = static_cast<int>((k >> 21) & kMaxLabel);
      const int c = static_cast<int>(k & kMaxLabel);
      out.push_back({Triple{a, b, c}, v});
    }
    std::sort(out.begin(), out.end(),
              [](const Gon3Entry& x, const Gon3Entry& y) { return x.key < y.key; });
    return out;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, BigInt> map_;
};

Gon3Memo& gon3_memo() {
  static Gon3Memo memo;
  return memo;
}

class PolyMemo {
 public:
  bool find(const std::vector<int>& k, BigInt& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const std::vector<int>& k, const BigInt& v) {
    std::unique_lock lock(mutex_);
    map_.emplace(k, v);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::vector<int>, BigInt> map_;
};

PolyMemo& poly_memo() {
  static PolyMemo memo;
  return memo;
}

}  // namespace

BigInt gon3_uncached(int a, int b, int c) {
  if (!is_admissible_triple(a, b, c)) return 0;
  const InternalVars v = internal_vars({a, b, c});
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(v.sigma), static_cast<unsigned long>(v.m));
  BigInt second;
  mpz_bin_uiui(second.get_mpz_t(), static_cast<unsigned long>(v.sigma - v.m),
               static_cast<unsigned long>(v.n));
  out *= second;
  out *= v.sigma + 1;
  return out;
}

BigInt gon3(int a, int b, int c) {
  if (!is_admissible_triple(a, b, c)) return 0;
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  if (s[2] > Gon3Memo::kMaxLabel) return gon3_uncached(a, b, c);
  const auto k = Gon3Memo::key(s[0], s[1], s[2]);
  BigInt out;
  if (gon3_memo().find(k, out)) return out;
  out = gon3_uncached(s[0], s[1], s[2]);
  gon3_memo().insert(k, out);
  return out;
}

std::vector<Gon3Entry> gon3_memo_snapshot() { return gon3_memo().snapshot(); }

void gon3_memo_insert(const Triple& k, const BigInt& value) {
  if (k.c > Gon3Memo::kMaxLabel || !(k.a <= k.b && k.b <= k.c)) return;
  gon3_memo().insert(Gon3Memo::key(k.a, k.b, k.c), value);
}

void gon3_memo_clear() { gon3_memo().clear(); }
std::size_t gon3_memo_size() { return gon3_memo().size(); }

BigRational theta_k(int a, int b, int c) {
  if (!is_admissible_triple(a, b, c)) return 0;
  const InternalVars v = internal_vars({a, b, c});
  const auto f = [](int x) { return factorial(static_cast<unsigned long>(x)); };
  BigInt num = f(v.sigma + 1) * f(v.m) * f(v.n) * f(v.p);
  BigInt den = f(a) * f(b) * f(c);
  BigRational out = make_rational(num, den);
  return parity_sign(v.sigma) < 0 ? BigRational(-out) : out;
}

namespace {

BigInt gon_poly_impl(std::vector<int> xs, bool memo) {
  if (std::any_of(xs.begin(), xs.end(), [](int x) { return x < 0; })) return 0;
  switch (xs.size()) {
    case 0: return 1;
    case 1: return xs[0] == 0 ? 1 : 0;
    case 2: return xs[0] == xs[1] ? BigInt(xs[0] + 1) : BigInt(0);
    case 3: return gon3(xs[0], xs[1], xs[2]);
    default: break;
  }
  BigInt out;
  if (memo && poly_memo().find(xs, out)) return out;

  const int u = xs[xs.size() - 2];
  const int v = xs[xs.size() - 1];
  std::vector<int> rest(xs.begin(), xs.end() - 2);
  const auto range = intersect(fusion_range_multi(rest), fusion_range(u, v));
  out = 0;
  for (int x : range) {
    std::vector<int> sub = rest;
    if (memo) {
      sub.insert(std::upper_bound(sub.begin(), sub.end(), x), x);
    } else {
      sub.push_back(x);
    }
    BigInt term = gon_poly_impl(std::move(sub), memo) * gon3(x, u, v);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(x + 1));
    out += term;
  }
  if (memo) poly_memo().insert(xs, out);
  return out;
}

}  // namespace

BigInt gon_poly(std::span<const int> xs) {
  std::vector<int> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  return gon_poly_impl(std::move(sorted), true);
}

BigInt gon_poly_ordered(std::span<const int> xs) {
  return gon_poly_impl(std::vector<int>(xs.begin(), xs.end()), false);
}

BigInt gon4_hyper(int a, int b) {
  if (a < 0 || b < 0) return 0;
  const auto f = [](long x) { return factorial(static_cast<unsigned long>(x)); };
  BigRational sum = 0;
  for (int j = 0; j <= std::min(a, b); ++j) {
    BigInt num = f(a + j + 1) * f(b + j + 1);
    BigInt jf = f(j);
    BigInt den = BigInt(2 * j + 1) * jf * jf * jf * jf * f(a - j) * f(b - j);
    sum += make_rational(num, den);
  }
  if (sum.get_den() != 1) throw NonIntegral("gon4_hyper: sum is not an integer");
  return sum.get_num();
}

Surd special_clebsch(int two_j1, int two_j2, int two_j) {
  if (two_j1 % 2 != 0 || two_j2 % 2 != 0 || two_j % 2 != 0) {
    throw NonIntegerSpin("special_clebsch: spins must be integers");
  }
  const int j1 = two_j1 / 2, j2 = two_j2 / 2, j = two_j / 2;
  if (!is_admissible_triple(j1, j2, j)) return Surd(0);
  const int sign = parity_sign((j1 + j2 - j) / 2);
  const int sigma_tilde = (j + j1 + j2) / 2;
  BigRational value = make_rational(gon3(j1, j2, j) * sign, BigInt(sigma_tilde + 1));
  // sqrt(2j+1) / sqrt(g) = sqrt((2j+1) g) / g
  const BigInt g = gon3(2 * j1, 2 * j2, 2 * j);
  value /= g;
  return Surd::normalize(value, BigInt(2 * j + 1) * g);
}

double LogValue::to_double() const { return sign * std::exp(log_abs); }

std::string LogValue::to_string() const {
  if (sign == 0) return "0";
  const double l10 = log_abs / std::numbers::ln10;
  double e = std::floor(l10);
  double mant = std::pow(10.0, l10 - e);
  if (mant >= 10.0) {
    mant /= 10.0;
    e += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.11fe%+.0f", sign < 0 ? "-" : "", mant, e);
  return buf;
}

namespace {

double log_abs_bigint(const BigInt& v) {
  long exp2 = 0;
  const double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(exp2) * std::numbers::ln2;
}

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

InternalVars nondegenerate_vars(int a, int b, int c, int k) {
  if (k < 1) throw Degenerate("asymptotic estimate needs k >= 1");
  const InternalVars v = internal_vars({a, b, c});
  if (v.m == 0 || v.n == 0 || v.p == 0) {
    throw Degenerate("asymptotic estimate needs m, n, p all positive");
  }
  return v;
}

}  // namespace

LogValue log_value(const BigRational& v) {
  LogValue out;
  out.sign = sgn(v);
  if (out.sign == 0) return out;
  out.log_abs = log_abs_bigint(v.get_num()) - log_abs_bigint(v.get_den());
  return out;
}

double relative_error(const LogValue& estimate, const BigRational& exact) {
  const LogValue e = log_value(exact);
  if (e.sign == 0) throw Degenerate("relative error against zero");
  const double ratio = std::exp(estimate.log_abs - e.log_abs) * estimate.sign * e.sign;
  return std::fabs(ratio - 1.0);
}

LogValue gon_asym(int a, int b, int c, int k) {
  const InternalVars v = nondegenerate_vars(a, b, c, k);
  const double s = v.sigma, m = v.m, n = v.n, p = v.p;
  const double log_a = 0.5 * std::log(s * m * n * p);
  LogValue out;
  out.log_abs = 2.0 * std::log(s) - std::log(2.0 * std::numbers::pi) - log_a +
                k * (xlogx(s) - xlogx(m) - xlogx(n) - xlogx(p));
  return out;
}

LogValue theta_k_asym(int a, int b, int c, int k) {
  const InternalVars v = nondegenerate_vars(a, b, c, k);
  const double s = v.sigma, m = v.m, n = v.n, p = v.p;
  const double log_a = 0.5 * std::log(s * m * n * p);
  LogValue out;
  out.sign = parity_sign(static_cast<long>(k) * v.sigma);
  out.log_abs = 1.5 * std::log(static_cast<double>(k)) + std::log(s) + log_a +
                0.5 * std::log(2.0 * std::numbers::pi) -
                0.5 * std::log((m + n) * (m + p) * (n + p)) +
                k * (xlogx(s) + xlogx(m) + xlogx(n) + xlogx(p) - xlogx(m + n) - xlogx(n + p) -
                     xlogx(p + m));
  return out;
}

}  // namespace gontet
