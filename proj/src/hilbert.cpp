#include "gontet/hilbert.hpp"

#include <algorithm>
#include <utility>

#include "gontet/errors.hpp"
#include "gontet/triples.hpp"

namespace gontet {

namespace {

void divexact_in_place(BigInt& x, const BigInt& d) {
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}
void divexact_in_place(LaurentPoly& x, const LaurentPoly& d) { x = laurent_divexact(x, d); }
bool is_zero(const BigInt& x) { return x == 0; }
bool is_zero(const LaurentPoly& x) { return x.is_zero(); }

// Solves A X = det(A) I over an integral domain with Bareiss elimination.
// Returns det(A) and X = det(A) A^-1; every division is exact.
template <class R>
std::pair<R, SquareMatrix<R>> bareiss_adjugate(SquareMatrix<R> a) {
  const std::size_t n = a.size();
  SquareMatrix<R> b(n, R(0));
  for (std::size_t i = 0; i < n; ++i) b(i, i) = R(1);

  R prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(a(r, k))) ++r;
      if (r == n) throw Singular("matrix is singular");
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(r, j));
        std::swap(b(k, j), b(r, j));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        divexact_in_place(v, prev);
        a(i, j) = std::move(v);
      }
      for (std::size_t j = 0; j < n; ++j) {
        R v = a(k, k) * b(i, j) - a(i, k) * b(k, j);
        divexact_in_place(v, prev);
        b(i, j) = std::move(v);
      }
      a(i, k) = R(0);
    }
    prev = a(k, k);
  }
  // a is upper triangular with a(n-1,n-1) = det of the permuted matrix.
  const R det = a(n - 1, n - 1);
  SquareMatrix<R> x(n, R(0));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      R acc = det * b(ii, col);
      for (std::size_t j = ii + 1; j < n; ++j) acc = acc - a(ii, j) * x(j, col);
      divexact_in_place(acc, a(ii, ii));
      x(ii, col) = std::move(acc);
    }
  }
  // The row swaps were applied to the identity too, so x = det(P A) A^-1.
  return {det, std::move(x)};
}

}  // namespace

RationalMatrix hilbert(int n, int s) {
  RationalMatrix h(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      h(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          make_rational(BigInt(1), BigInt(i + j - 1 + s));
    }
  }
  return h;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  RationalMatrix out(n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RationalMatrix invert_exact(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return m;
  // Clear denominators row by row: A = D m with D = diag(row lcm).
  SquareMatrix<BigInt> a(n, BigInt(0));
  std::vector<BigInt> scale(n, BigInt(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(scale[i].get_mpz_t(), scale[i].get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = m(i, j).get_num() * (scale[i] / m(i, j).get_den());
    }
  }
  auto [det, x] = bareiss_adjugate(std::move(a));
  if (det == 0) throw Singular("matrix is singular");
  // m^-1 = A^-1 D.
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = make_rational(x(i, j) * scale[j], det);
  }
  return out;
}

BigRational trace(const RationalMatrix& m) {
  BigRational t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

BigRational trace_inverse(int n, int s) { return trace(invert_exact(hilbert(n, s))); }

RowSum rowsum_gon(int a, int b, int c) {
  if (!is_admissible_triple(a, b, c)) throw NotAdmissible("rowsum_gon: triple is not admissible");
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  RowSum r;
  r.n = v[0] + 1;
  r.s = v[1] - v[0];
  r.row = (v[2] + v[0] - v[1]) / 2 + 1;
  const RationalMatrix inv = invert_exact(hilbert(r.n, r.s));
  BigRational sum = 0;
  for (std::size_t j = 0; j < inv.size(); ++j) sum += inv(static_cast<std::size_t>(r.row - 1), j);
  if (sum.get_den() != 1) throw NonIntegral("rowsum_gon: row sum is not an integer");
  r.row_sum = sum.get_num();
  r.value = abs(r.row_sum);
  return r;
}

QMatrix q_hilbert(int n, int s) {
  QMatrix h(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      h(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          RatFunc(LaurentPoly(1), qint(i + j - 1 + s));
    }
  }
  return h;
}

namespace {

// Clears denominators row by row: returns the Laurent matrix D m and D.
std::pair<SquareMatrix<LaurentPoly>, std::vector<LaurentPoly>> clear_rows(const QMatrix& m) {
  const std::size_t n = m.size();
  SquareMatrix<LaurentPoly> a(n, LaurentPoly(0));
  std::vector<LaurentPoly> scale(n, LaurentPoly(1));
  for (std::size_t i = 0; i < n; ++i) {
    // Product of distinct denominators in the row.
    std::vector<LaurentPoly> seen;
    for (std::size_t j = 0; j < n; ++j) {
      const LaurentPoly& d = m(i, j).den();
      if (std::find(seen.begin(), seen.end(), d) == seen.end()) {
        seen.push_back(d);
        scale[i] *= d;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = m(i, j).num() * laurent_divexact(scale[i], m(i, j).den());
    }
  }
  return {std::move(a), std::move(scale)};
}

}  // namespace

QMatrix q_invert(const QMatrix& m) {
  const std::size_t n = m.size();
  auto [a, scale] = clear_rows(m);
  auto [det, x] = bareiss_adjugate(std::move(a));
  if (det.is_zero()) throw Singular("matrix is singular");
  QMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = RatFunc(x(i, j) * scale[j], det);
  }
  return out;
}

RatFunc q_trace_inverse(int n, int s) {
  auto [a, scale] = clear_rows(q_hilbert(n, s));
  auto [det, x] = bareiss_adjugate(std::move(a));
  if (det.is_zero()) throw Singular("matrix is singular");
  LaurentPoly num;
  for (std::size_t i = 0; i < x.size(); ++i) num += x(i, i) * scale[i];
  return RatFunc(num, det);
}

}  // namespace gontet
