#include <algorithm>

#include "doctest.h"
#include "gontet/errors.hpp"
#include "gontet/gon.hpp"
#include "gontet/identities.hpp"
#include "gontet/random.hpp"
#include "gontet/tet.hpp"

using namespace gontet;

namespace {

// Face naming of the formulas: upper tet (a,b,c),(d,e,f), lower tet (a,b,c),(g,h,k).
const Bipyramid kBig{{28, 6, 26, 23, 31, 19, 39, 17, 33}};
const TetLabels kSmall{{2, 1, 3}, {1, 2, 2}};

}  // namespace

TEST_CASE("verify_duality") {
  IdentityReport r = verify_duality(2, 2, 2, 2);
  CHECK(r.equal);
  REQUIRE(r.sides.size() == 3);
  for (const auto& [name, v] : r.sides) CHECK(v == 381);
  r = verify_duality(4, 7, 4, 7);
  CHECK(r.equal);
  CHECK(r.sides[0].second == 18066760);
  r = verify_duality(1, 0, 0, 0);
  CHECK(r.equal);
  for (const auto& [name, v] : r.sides) CHECK(v == 0);
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      for (int c = 0; c <= 8; ++c) {
        for (int d = 0; d <= 8; ++d) {
          const IdentityReport x = verify_duality(a, b, c, d);
          CHECK(x.equal);
          const std::vector<int> xs{a, b, c, d};
          CHECK(x.sides[0].second == gon_poly(xs));
        }
      }
    }
  }
}

TEST_CASE("duality summands are integers") {
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= 12; ++b) {
      for (int s : fusion_range(a, b)) {
        for (int c = 0; c <= 12; ++c) {
          for (int d : fusion_range(c, s)) {
            const BigInt num = gon3(a, b, s) * gon3(c, d, s);
            CHECK(mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(s + 1)) != 0);
          }
        }
      }
    }
  }
}

TEST_CASE("bipyramid split and range") {
  REQUIRE(kBig.is_admissible());
  std::vector<int> expected;
  for (int x = 16; x <= 48; x += 2) expected.push_back(x);
  CHECK(bipyramid_diagonals(kBig) == expected);
  for (int x : expected) {
    for (const TetLabels& t : bipyramid_split(kBig, x)) CHECK(is_admissible_tet(t));
  }
}

TEST_CASE("hed1 and hed2") {
  const BigInt value("1395161475725373449470726604935680000");
  CHECK(hed1(kBig) == value);
  CHECK(hed2(kBig) == value);
  const Bipyramid zero{};
  CHECK(hed1(zero) == 1);
  CHECK(hed2(zero) == 1);
  const IdentityReport r = verify_pentagon(kBig);
  CHECK(r.equal);

  InstanceGenerator gen(2024);
  for (int i = 0; i < 40; ++i) {
    const Bipyramid bp = gen.bipyramid(16);
    REQUIRE(bp.is_admissible());
    CHECK(BigRational(hed1(bp)) == hed2(bp));
  }
}

TEST_CASE("barycentric_enum") {
  using Row = std::array<int, 3>;
  CHECK(barycentric_enum(kSmall, 0) == std::vector<Row>{{1, 2, 2}});
  CHECK(barycentric_enum(kSmall, 1) ==
        std::vector<Row>{{0, 3, 1}, {2, 1, 1}, {2, 1, 3}, {2, 3, 1}, {2, 3, 3}});
  CHECK(barycentric_enum(kSmall, 2) ==
        std::vector<Row>{{1, 2, 0}, {1, 2, 2}, {1, 4, 2}, {3, 0, 2}, {3, 2, 2}, {3, 2, 4}, {3, 4, 2}, {3, 4, 4}});
  const std::size_t sizes[] = {1, 5, 8, 10, 10, 10};
  for (int delta = 0; delta < 6; ++delta) CHECK(barycentric_enum(kSmall, delta).size() == sizes[delta]);
  CHECK(barycentric_delta_max(kSmall) == 3);
}

TEST_CASE("barycentric_P") {
  const long expected[] = {-24, -96, -216, -384, -600, -864};
  for (int delta = 0; delta < 6; ++delta) {
    const BarycentricResult r = barycentric_P(kSmall, delta);
    CHECK(r.total == expected[delta]);
    CHECK(r.total / ((delta + 1) * (delta + 1)) == -24);
  }
  std::vector<BigRational> terms;
  for (const auto& t : barycentric_P(kSmall, 1).terms) terms.push_back(t.contribution);
  CHECK(terms == std::vector<BigRational>{-24, BigRational(-64, 3), BigRational(-32, 3), BigRational(40, 3),
                                          BigRational(-160, 3)});

  InstanceGenerator gen(77);
  for (int i = 0; i < 10; ++i) {
    const TetLabels t = gen.tet(8);
    const BigInt v = tet(t);
    std::size_t prev = 0;
    for (int delta = 0; delta <= barycentric_delta_max(t) + 2; ++delta) {
      const BarycentricResult r = barycentric_P(t, delta);
      CHECK(r.total == BigRational(v * (delta + 1) * (delta + 1)));
      CHECK(r.terms.size() >= prev);
      prev = r.terms.size();
    }
  }
}

TEST_CASE("cube") {
  const CubeResult c0 = cube(CubeLabels::uniform(0));
  CHECK(c0.value == 1);
  const CubeResult c1 = cube(CubeLabels::uniform(1));
  CHECK(c1.value == -63488);
  CHECK(c1.assignments == 15);
  const CubeResult c2 = cube(CubeLabels::uniform(2));
  CHECK(c2.value == BigInt("5580307647"));
  CHECK(c2.assignments == 127);
  const CubeLabels mixed{{2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1}};
  CHECK(cube(mixed).value == 1994112);
  CHECK(cube_serial(mixed).value == 1994112);
  CHECK(cube_serial(CubeLabels::uniform(2)).value == c2.value);
}

TEST_CASE("dyson_ct") {
  CHECK(dyson_ct(0, 0, 0) == 1);
  CHECK(dyson_ct(1, 1, 1) == 24);
  CHECK(dyson_ct(2, 1, 0) == 12);
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; m + n <= 5; ++n) {
      for (int p = 0; m + n + p <= 5; ++p) CHECK(dyson_ct(m, n, p) == gon3(m + n, n + p, p + m));
    }
  }
  CHECK_THROWS_AS(dyson_ct(5, 5, 5), SizeLimit);
}
