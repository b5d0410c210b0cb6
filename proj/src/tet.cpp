#include "gontet/tet.hpp"

#include <algorithm>
#include <numeric>

#include "gontet/errors.hpp"
#include "gontet/factor.hpp"
#include "gontet/gon.hpp"

namespace gontet {

TetPerimeters tet_perimeters(const TetLabels& t) {
  const int a = t.a(), b = t.b(), c = t.c(), d = t.d(), e = t.e(), f = t.f();
  TetPerimeters p;
  p.sigma = {(a + b + c) / 2, (b + d + f) / 2, (a + e + f) / 2, (c + d + e) / 2};
  p.tau = {(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2};
  p.m_sigma = *std::max_element(p.sigma.begin(), p.sigma.end());
  p.m_tau = *std::min_element(p.tau.begin(), p.tau.end());
  return p;
}

namespace {

// (s+1)! / (prod (s - sigma_i)! prod (tau_u - s)!), unsigned.
BigInt first_term(const TetPerimeters& p, int s) {
  BigInt out = factorial(static_cast<unsigned long>(s + 1));
  BigInt den = 1;
  for (int x : p.sigma) den *= factorial(static_cast<unsigned long>(s - x));
  for (int x : p.tau) den *= factorial(static_cast<unsigned long>(x - s));
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

BigInt tet(const TetLabels& t) {
  if (!is_admissible_tet(t)) return 0;
  const TetPerimeters p = tet_perimeters(t);
  if (p.m_sigma > p.m_tau) return 0;

  BigInt term = first_term(p, p.m_sigma);
  BigInt sum = parity_sign(p.m_sigma) > 0 ? term : BigInt(-term);
  BigInt den;
  for (int s = p.m_sigma; s < p.m_tau; ++s) {
    // T(s+1) = T(s) (s+2) prod (tau_u - s) / prod (s + 1 - sigma_i)
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(s + 2));
    for (int x : p.tau) mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(x - s));
    den = 1;
    for (int x : p.sigma) mpz_mul_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(s + 1 - x));
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), den.get_mpz_t());
    if (parity_sign(s + 1) > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt tet_reference(const TetLabels& t) {
  if (!is_admissible_tet(t)) return 0;
  const TetPerimeters p = tet_perimeters(t);
  BigRational sum = 0;
  for (int s = p.m_sigma; s <= p.m_tau; ++s) {
    BigInt den = 1;
    for (int x : p.sigma) den *= factorial(static_cast<unsigned long>(s - x));
    for (int x : p.tau) den *= factorial(static_cast<unsigned long>(x - s));
    sum += make_rational(factorial(static_cast<unsigned long>(s + 1)) * parity_sign(s), den);
  }
  if (sum.get_den() != 1) throw NonIntegral("tet_reference: sum is not an integer");
  return sum.get_num();
}

BigInt tet_regular(int two_n) {
  if (two_n < 0 || two_n % 2 != 0) throw OddArgument("tet_regular: argument must be even and >= 0");
  const int n = two_n / 2;
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) {
    const BigInt nk = factorial(static_cast<unsigned long>(n - k));
    const BigInt kf = factorial(static_cast<unsigned long>(k));
    const BigInt nk2 = nk * nk;
    BigInt term = factorial(static_cast<unsigned long>(4 * n + 1 - k));
    BigInt den = nk2 * nk2 * kf * kf * kf;
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), den.get_mpz_t());
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt tet_j_factor(const TetLabels& t) {
  const TetPerimeters p = tet_perimeters(t);
  BigInt j = 1;
  for (int s : p.sigma) {
    for (int u : p.tau) j *= factorial(static_cast<unsigned long>(u - s));
  }
  return j;
}

BigInt tet_j_factor_faces(const TetLabels& t) {
  BigInt j = 1;
  for (const Triple& f : t.faces()) {
    const InternalVars v = internal_vars(f);
    j *= factorial(static_cast<unsigned long>(v.m)) * factorial(static_cast<unsigned long>(v.n)) *
         factorial(static_cast<unsigned long>(v.p));
  }
  return j;
}

BigInt tet_e_factor(const TetLabels& t) {
  BigInt e = 1;
  for (int x : t.flat()) e *= factorial(static_cast<unsigned long>(x));
  return e;
}

BigRational tet_k(const TetLabels& t) {
  if (!is_admissible_tet(t)) return 0;
  return make_rational(tet_j_factor(t) * tet(t), tet_e_factor(t));
}

SquareSplit face_gon_product_split(const TetLabels& t) {
  PrimeExponents pe;
  for (const Triple& f : t.faces()) {
    const InternalVars v = internal_vars(f);
    pe.add_factorial(static_cast<unsigned long>(v.sigma + 1));
    pe.add_factorial(static_cast<unsigned long>(v.m), -1);
    pe.add_factorial(static_cast<unsigned long>(v.n), -1);
    pe.add_factorial(static_cast<unsigned long>(v.p), -1);
  }
  return pe.square_split();
}

Surd sixj(const TetLabels& t) {
  if (!is_admissible_tet(t)) return Surd(0);
  const BigInt value = tet(t);
  if (value == 0) return Surd(0);
  // prod gon = root^2 core, so tet / sqrt(prod gon) = tet / (root core) * sqrt(core).
  const SquareSplit split = face_gon_product_split(t);
  return Surd::from_squarefree(make_rational(value, split.root * split.core), split.core);
}

std::array<TetLabels, 3> regge_images(const TetLabels& t) {
  if (!is_admissible_tet(t)) throw NotAdmissible("regge_images: labels are not admissible");
  const int a = t.a(), b = t.b(), c = t.c(), d = t.d(), e = t.e(), f = t.f();
  const TetPerimeters p = tet_perimeters(t);
  const int p12 = p.tau[0], p31 = p.tau[1], p23 = p.tau[2];
  std::array<TetLabels, 3> out = {
      TetLabels{{p12 - a, p12 - b, c}, {p12 - d, p12 - e, f}},
      TetLabels{{a, p23 - b, p23 - c}, {d, p23 - e, p23 - f}},
      TetLabels{{p31 - a, b, p31 - c}, {p31 - d, e, p31 - f}},
  };
  for (const auto& img : out) {
    if (!is_admissible_tet(img)) throw NotAdmissible("regge_images: image is not admissible");
  }
  return out;
}

Surd racah_cell(const TetLabels& t) {
  if (!is_admissible_tet(t)) throw NotAdmissible("racah_cell: labels are not admissible");
  const Surd s = sixj(t);
  const int sign = parity_sign((t.a() + t.c() + t.d() + t.f()) / 2);
  Surd out = s * Surd::normalize(BigRational(sign), BigInt(t.b() + 1) * (t.e() + 1));
  return out;
}

BiunitarityResult biunitarity_sum(const TetLabels& labels, FreeSlot slot) {
  BiunitarityResult out;
  out.sum = 0;
  const int a = labels.a(), b = labels.b(), c = labels.c();
  const int d = labels.d(), e = labels.e(), f = labels.f();
  if (slot == FreeSlot::B) {
    out.range = intersect(fusion_range(a, c), fusion_range(d, f));
  } else {
    out.range = intersect(fusion_range(a, f), fusion_range(c, d));
  }
  for (int x : out.range) {
    const TetLabels t = slot == FreeSlot::B ? TetLabels{{a, x, c}, {d, e, f}}
                                            : TetLabels{{a, b, c}, {d, x, f}};
    if (!is_admissible_tet(t)) continue;
    const BigInt v = tet(t);
    BigInt den = 1;
    for (const Triple& face : t.faces()) den *= gon3(face);
    out.sum += make_rational(BigInt(t.b() + 1) * (t.e() + 1) * v * v, den);
  }
  return out;
}

}  // namespace gontet
