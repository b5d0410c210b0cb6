#include "doctest.h"
#include "gontet/errors.hpp"
#include "gontet/gon.hpp"
#include "gontet/hilbert.hpp"
#include "gontet/quantum.hpp"

using namespace gontet;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

TEST_CASE("hilbert entries") {
  const RationalMatrix h = hilbert(3);
  CHECK(h(0, 0) == 1);
  CHECK(h(1, 2) == BigRational(1, 4));
  CHECK(h(2, 2) == BigRational(1, 5));
  const RationalMatrix h53 = hilbert(5, 3);
  for (int j = 0; j < 5; ++j) CHECK(h53(0, static_cast<std::size_t>(j)) == BigRational(1, 4 + j));
  CHECK(hilbert(1, 6)(0, 0) == BigRational(1, 7));
}

TEST_CASE("invert_exact") {
  CHECK(invert_exact(hilbert(3)) == from_rows({{9, -36, 30}, {-36, 192, -180}, {30, -180, 180}}));
  const RationalMatrix inv = invert_exact(hilbert(5, 3));
  const long row[] = {19600, -141120, 352800, -369600, 138600};
  for (std::size_t j = 0; j < 5; ++j) CHECK(inv(0, j) == row[j]);
  CHECK(invert_exact(identity_matrix(4)) == identity_matrix(4));
  CHECK_THROWS_AS(invert_exact(from_rows({{1, 2}, {2, 4}})), Singular);
  const RationalMatrix swap = from_rows({{0, 1}, {1, 0}});
  CHECK(invert_exact(swap) == swap);
  for (int n = 1; n <= 8; ++n) {
    for (int s = 0; s <= 3; ++s) {
      const RationalMatrix h = hilbert(n, s);
      CHECK(h * invert_exact(h) == identity_matrix(static_cast<std::size_t>(n)));
    }
  }
}

TEST_CASE("trace_inverse") {
  CHECK(trace_inverse(3) == 381);
  CHECK(trace_inverse(5, 3) == 18066760);
  CHECK(trace_inverse(1) == 1);
  for (int n = 0; n <= 8; ++n) {
    const std::vector<int> xs{n, n, n, n};
    CHECK(trace_inverse(n + 1) == gon_poly(xs));
  }
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      const std::vector<int> xs{a, b, a, b};
      CHECK(trace_inverse(std::min(a, b) + 1, std::abs(a - b)) == gon_poly(xs));
    }
  }
}

TEST_CASE("rowsum_gon") {
  const RowSum r = rowsum_gon(4, 7, 9);
  CHECK(r.value == 9240);
  CHECK(r.row_sum == -9240);
  CHECK(rowsum_gon(9, 4, 7).value == 9240);
  CHECK(rowsum_gon(0, 0, 0).value == 1);
  CHECK(rowsum_gon(2, 2, 2).value == 24);
  CHECK_THROWS_AS(rowsum_gon(1, 1, 1), NotAdmissible);
  for (int a = 0; a <= 10; ++a) {
    for (int b = a; b <= 10; ++b) {
      for (int c : fusion_range(a, b)) {
        if (c < b) continue;
        CHECK(rowsum_gon(a, b, c).value == gon3(a, b, c));
      }
    }
  }
}

TEST_CASE("q_trace_inverse") {
  const RatFunc t = q_trace_inverse(3);
  REQUIRE(t.is_laurent());
  const LaurentPoly p = t.to_laurent();
  const long coeffs[] = {1, 4, 13, 27, 47, 63, 71, 63, 47, 27, 13, 4, 1};
  CHECK(p.min_exponent() == -12);
  CHECK(p.max_exponent() == 12);
  for (int i = 0; i < 13; ++i) {
    CHECK(p.coeff(-12 + 2 * i) == coeffs[i]);
    CHECK(p.coeff(-11 + 2 * i) == 0);
  }
  CHECK(p.eval_at_one() == 381);
  CHECK(q_invert(q_hilbert(1))(0, 0) == RatFunc(1));
  for (int n = 0; n <= 3; ++n) {
    const std::vector<int> xs{n, n, n, n};
    CHECK(q_trace_inverse(n + 1) == RatFunc(gon_q_poly(xs)));
  }
}
