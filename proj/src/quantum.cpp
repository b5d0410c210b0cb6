#include "gontet/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "gontet/errors.hpp"
#include "gontet/tet.hpp"

namespace gontet {

namespace {

int root_key(const OptRoot& root) { return root ? root->kappa() : 0; }

bool q_ok(int a, int b, int c, const OptRoot& root) {
  return root ? is_q_admissible_triple(a, b, c, *root) : is_admissible_triple(a, b, c);
}

bool q_ok(const TetLabels& t, const OptRoot& root) {
  return root ? is_q_admissible_tet(t, *root) : is_admissible_tet(t);
}

std::vector<int> q_range(int a, int b, const OptRoot& root) {
  return root ? q_fusion_range(a, b, *root) : fusion_range(a, b);
}

template <class Key>
class LockedMemo {
 public:
  bool find(const Key& k, LaurentPoly& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const Key& k, const LaurentPoly& v) {
    std::unique_lock lock(mutex_);
    map_.emplace(k, v);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, LaurentPoly> map_;
};

// `mass` bounds the size of the summands, so cancellation to zero is judged against it.
bool close(std::complex<double> x, std::complex<double> y, double mass = 0.0) {
  const double scale = std::max({std::abs(x), std::abs(y), mass, 1e-300});
  return std::abs(x - y) <= kRootTolerance * scale;
}

}  // namespace

LaurentPoly gon_q(int a, int b, int c, const OptRoot& root) {
  if (!q_ok(a, b, c, root)) return LaurentPoly();
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  static LockedMemo<std::array<int, 3>> memo;
  LaurentPoly out;
  if (memo.find(s, out)) return out;
  const InternalVars v = internal_vars({a, b, c});
  out = q_multinomial(v.sigma + 1, {v.m, v.n, v.p});
  memo.insert(s, out);
  return out;
}

namespace {

LaurentPoly gon_q_poly_impl(std::vector<int> xs, const OptRoot& root) {
  if (std::any_of(xs.begin(), xs.end(), [](int x) { return x < 0; })) return LaurentPoly();
  switch (xs.size()) {
    case 0: return LaurentPoly(1);
    case 1: return xs[0] == 0 ? LaurentPoly(1) : LaurentPoly();
    case 2: return xs[0] == xs[1] ? qint(xs[0] + 1) : LaurentPoly();
    case 3: return gon_q(xs[0], xs[1], xs[2], root);
    default: break;
  }
  static LockedMemo<std::pair<int, std::vector<int>>> memo;
  const auto key = std::make_pair(root_key(root), xs);
  LaurentPoly out;
  if (memo.find(key, out)) return out;

  const int u = xs[xs.size() - 2];
  const int v = xs[xs.size() - 1];
  std::vector<int> rest(xs.begin(), xs.end() - 2);
  for (int x : intersect(fusion_range_multi(rest), q_range(u, v, root))) {
    std::vector<int> sub = rest;
    sub.insert(std::upper_bound(sub.begin(), sub.end(), x), x);
    LaurentPoly term = gon_q_poly_impl(std::move(sub), root);
    if (term.is_zero()) continue;
    term *= gon_q(x, u, v, root);
    term.div_qint(x + 1);
    out += term;
  }
  memo.insert(key, out);
  return out;
}

}  // namespace

LaurentPoly gon_q_poly(std::span<const int> xs, const OptRoot& root) {
  std::vector<int> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  return gon_q_poly_impl(std::move(sorted), root);
}

LaurentPoly tet_q(const TetLabels& t, const OptRoot& root) {
  if (!q_ok(t, root)) return LaurentPoly();
  const TetPerimeters p = tet_perimeters(t);
  LaurentPoly sum;
  std::vector<int> bottoms(7);
  for (int s = p.m_sigma; s <= p.m_tau; ++s) {
    for (std::size_t i = 0; i < 4; ++i) bottoms[i] = s - p.sigma[i];
    for (std::size_t u = 0; u < 3; ++u) bottoms[4 + u] = p.tau[u] - s;
    LaurentPoly term = q_multinomial(s + 1, bottoms);
    if (s % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

double tet_q_at_root(const TetLabels& t, const RootOfUnity& root) {
  if (!is_q_admissible_tet(t, root)) throw NotQAdmissible("tet_q_at_root: labels are not q-admissible");
  const std::complex<double> z = eval_at_root(tet_q(t), root);
  if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z.real()))) {
    throw NumericInstability("tet_q_at_root: imaginary residue is not negligible");
  }
  return z.real();
}

BigRational QFraction::eval_at_one() const { return make_rational(num.eval_at_one(), den.eval_at_one()); }

double QFraction::eval_at_root(const RootOfUnity& root) const {
  return (gontet::eval_at_root(num, root) / gontet::eval_at_root(den, root)).real();
}

QFraction tet_k_q(const TetLabels& t) {
  QFraction out{LaurentPoly(), LaurentPoly(1)};
  if (!is_admissible_tet(t)) return out;
  const TetPerimeters p = tet_perimeters(t);
  // count[j + 1] tallies factorial arguments equal to j: +1 for E, -1 for J.
  int top = 0;
  for (int x : t.flat()) top = std::max(top, x);
  for (int s : p.sigma) {
    for (int u : p.tau) top = std::max(top, u - s);
  }
  std::vector<int> count(static_cast<std::size_t>(top) + 2, 0);
  for (int s : p.sigma) {
    for (int u : p.tau) count[static_cast<std::size_t>(u - s) + 1] -= 1;
  }
  for (int x : t.flat()) count[static_cast<std::size_t>(x) + 1] += 1;
  out.num = tet_q(t);
  int running = 0;
  for (int k = top; k >= 1; --k) {
    running += count[static_cast<std::size_t>(k) + 1];
    // running = #(E args >= k) - #(J args >= k), minus the exponent of [k].
    for (int r = 0; r < -running; ++r) out.num.mul_qint(k);
    for (int r = 0; r < running; ++r) out.den.mul_qint(k);
  }
  return out;
}

double sixj_q(const TetLabels& t, const RootOfUnity& root) {
  if (!is_q_admissible_tet(t, root)) throw NotQAdmissible("sixj_q: labels are not q-admissible");
  const double num = tet_q_at_root(t, root);
  double prod = 1.0;
  for (const Triple& f : t.faces()) prod *= eval_at_root(gon_q(f.a, f.b, f.c), root).real();
  return num / std::sqrt(std::fabs(prod));
}

LaurentPoly cyclotomic(int d) {
  static std::mutex mutex;
  static std::map<int, LaurentPoly> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
  }
  // x^d - 1 over the product of Phi_e for proper divisors e.
  LaurentPoly out = LaurentPoly::monomial(1, d) - LaurentPoly(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) out = laurent_divexact(out, cyclotomic(e));
  }
  std::lock_guard lock(mutex);
  memo.emplace(d, out);
  return out;
}

CycloFactors CycloFactors::qfactorial(int n) {
  CycloFactors f;
  for (int d = 2; d <= n; ++d) f.exps_[d] = n / d;
  return f;
}

CycloFactors CycloFactors::gon(int a, int b, int c) {
  const InternalVars v = internal_vars({a, b, c});
  CycloFactors f = qfactorial(v.sigma + 1);
  f /= qfactorial(v.m);
  f /= qfactorial(v.n);
  f /= qfactorial(v.p);
  return f;
}

CycloFactors& CycloFactors::operator*=(const CycloFactors& rhs) {
  for (const auto& [d, e] : rhs.exps_) exps_[d] += e;
  return *this;
}

CycloFactors& CycloFactors::operator/=(const CycloFactors& rhs) {
  for (const auto& [d, e] : rhs.exps_) {
    int& mine = exps_[d];
    mine -= e;
    if (mine < 0) throw NotDivisible("CycloFactors: quotient is not a polynomial");
  }
  return *this;
}

CycloFactors CycloFactors::lcm(const CycloFactors& x, const CycloFactors& y) {
  CycloFactors out = x;
  for (const auto& [d, e] : y.exps_) out.exps_[d] = std::max(out.exps_[d], e);
  return out;
}

LaurentPoly CycloFactors::to_laurent() const {
  // Build the polynomial in x = q^2, then spread to even powers of q and
  // centre it.
  LaurentPoly px(1);
  for (const auto& [d, e] : exps_) {
    const LaurentPoly phi = cyclotomic(d);
    for (int i = 0; i < e; ++i) px *= phi;
  }
  const auto& c = px.dense();
  std::vector<BigInt> spread(c.empty() ? 0 : 2 * c.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c.size(); ++i) spread[2 * i] = c[i];
  const int degree_x = c.empty() ? 0 : static_cast<int>(c.size()) - 1;
  return LaurentPoly::from_dense(-degree_x, std::move(spread));
}

QIdentityReport verify_q_duality(int a, int b, int c, int d, const OptRoot& root) {
  QIdentityReport r;
  r.identity = "q-duality";
  const auto channel = [&](const std::vector<int>& range, int p, int q, int u, int v) {
    LaurentPoly sum;
    for (int x : range) {
      LaurentPoly term = gon_q(p, q, x, root) * gon_q(u, v, x, root);
      if (term.is_zero()) continue;
      term.div_qint(x + 1);
      sum += term;
    }
    return sum;
  };
  const auto s = intersect(q_range(a, b, root), q_range(c, d, root));
  const auto t = intersect(q_range(a, d, root), q_range(b, c, root));
  const auto u = intersect(q_range(a, c, root), q_range(b, d, root));
  const LaurentPoly vs = channel(s, a, b, c, d), vt = channel(t, a, d, b, c), vu = channel(u, a, c, b, d);
  r.exact = {{"s", RatFunc(vs)}, {"t", RatFunc(vt)}, {"u", RatFunc(vu)}};
  r.witness = {{"S", s}, {"T", t}, {"U", u}};
  if (root) {
    const auto zs = eval_at_root(vs, *root), zt = eval_at_root(vt, *root), zu = eval_at_root(vu, *root);
    r.numeric = {{"s", zs}, {"t", zt}, {"u", zu}};
    r.equal = close(zs, zt) && close(zs, zu);
  } else {
    r.equal = vs == vt && vs == vu;
  }
  return r;
}

namespace {

int hed2_sign(const Bipyramid& bp, int x) {
  return parity_sign(x + (x + bp.d() + bp.g()) / 2 + (x + bp.f() + bp.k()) / 2 + (x + bp.e() + bp.h()) / 2);
}

std::vector<int> q_diagonals(const Bipyramid& bp, const OptRoot& root) {
  auto xs = intersect(q_range(bp.d(), bp.g(), root), q_range(bp.f(), bp.k(), root));
  return intersect(xs, q_range(bp.h(), bp.e(), root));
}

}  // namespace

QIdentityReport verify_q_pentagon(const Bipyramid& bp, const OptRoot& root) {
  QIdentityReport r;
  r.identity = "q-pentagon";
  if (!q_ok(bp.upper(), root) || !q_ok(bp.lower(), root)) {
    throw NotQAdmissible("verify_q_pentagon: bipyramid is not q-admissible");
  }
  const auto xs = q_diagonals(bp, root);
  r.witness = {{"x", xs}};
  const int sign0 = parity_sign((bp.a() + bp.b() + bp.c()) / 2);

  if (root) {
    const auto at = [&](const LaurentPoly& p) { return eval_at_root(p, *root); };
    const std::complex<double> lhs = at(tet_q(bp.upper(), root)) * at(tet_q(bp.lower(), root)) /
                                     (double(sign0) * at(gon_q(bp.a(), bp.b(), bp.c(), root)));
    std::complex<double> rhs = 0;
    double mass = std::abs(lhs);
    for (int x : xs) {
      const auto tets = bipyramid_split(bp, x);
      std::complex<double> term = double(hed2_sign(bp, x)) * qint_at_root(x + 1, *root);
      for (const auto& t : tets) term *= at(tet_q(t, root));
      term /= at(gon_q(x, bp.d(), bp.g(), root)) * at(gon_q(x, bp.f(), bp.k(), root)) *
              at(gon_q(x, bp.e(), bp.h(), root));
      rhs += term;
      mass += std::abs(term);
    }
    r.numeric = {{"hed1", lhs}, {"hed2", rhs}};
    r.equal = close(lhs, rhs, mass);
    return r;
  }

  const auto labels = bp.labels;
  if (*std::max_element(labels.begin(), labels.end()) > 24) {
    throw SizeLimit("verify_q_pentagon: exact mode is limited to labels <= 24");
  }
  const CycloFactors g0 = CycloFactors::gon(bp.a(), bp.b(), bp.c());
  CycloFactors common = g0;
  std::vector<CycloFactors> dens;
  for (int x : xs) {
    CycloFactors dx = CycloFactors::gon(x, bp.d(), bp.g());
    dx *= CycloFactors::gon(x, bp.f(), bp.k());
    dx *= CycloFactors::gon(x, bp.e(), bp.h());
    common = CycloFactors::lcm(common, dx);
    dens.push_back(std::move(dx));
  }
  CycloFactors cof0 = common;
  cof0 /= g0;
  LaurentPoly lhs = tet_q(bp.upper()) * tet_q(bp.lower()) * cof0.to_laurent();
  if (sign0 < 0) lhs = -lhs;
  LaurentPoly rhs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int x = xs[i];
    const auto tets = bipyramid_split(bp, x);
    LaurentPoly term = tet_q(tets[0]) * tet_q(tets[1]);
    if (term.is_zero()) continue;
    term *= tet_q(tets[2]);
    term.mul_qint(x + 1);
    CycloFactors cof = common;
    cof /= dens[i];
    term *= cof.to_laurent();
    if (hed2_sign(bp, x) < 0) term = -term;
    rhs += term;
  }
  const LaurentPoly den = common.to_laurent();
  r.exact = {{"hed1", RatFunc(lhs, den)}, {"hed2", RatFunc(rhs, den)}};
  r.equal = lhs == rhs;
  return r;
}

}  // namespace gontet
