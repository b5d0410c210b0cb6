#include "doctest.h"
#include "gontet/errors.hpp"
#include "gontet/gon.hpp"
#include "gontet/random.hpp"
#include "gontet/tet.hpp"

using namespace gontet;

namespace {

const TetLabels kT1{{8, 20, 24}, {15, 13, 17}};
const TetLabels kT2{{14, 41, 33}, {50, 23, 21}};
const TetLabels kT3{{50, 30, 76}, {92, 48, 84}};
const TetLabels kSmall{{2, 1, 3}, {1, 2, 2}};

}  // namespace

TEST_CASE("tet golden values") {
  CHECK(tet(kT1) == BigInt("332385335268386400"));
  CHECK(tet(kT2) == BigInt("-671777611858249170324639542553600"));
  CHECK(tet(kT3) == BigInt("370574512884046997485176381045189319801237495334758378762795196256000"));
  CHECK(tet({}) == 1);
  CHECK(tet(kSmall) == -24);
  CHECK(tet({{1, 1, 1}, {1, 1, 1}}) == 0);
}

TEST_CASE("tet kernels agree") {
  CHECK(tet_reference(kT3) == tet(kT3));
  InstanceGenerator gen(99);
  for (int i = 0; i < 200; ++i) {
    const TetLabels t = gen.tet(30);
    CHECK(tet(t) == tet_reference(t));
  }
}

TEST_CASE("tet_perimeters") {
  const TetPerimeters p = tet_perimeters(kSmall);
  CHECK(p.sigma == std::array<int, 4>{3, 2, 3, 3});
  CHECK(p.tau == std::array<int, 3>{3, 4, 4});
  CHECK(p.m_sigma == 3);
  CHECK(p.m_tau == 3);
}

TEST_CASE("tet_regular") {
  const char* expected[] = {"1", "96", "-17010", "-20160000", "-5259003750", "2819345937408", "3019973370942528"};
  for (int n = 0; n < 7; ++n) CHECK(tet_regular(2 * n) == BigInt(expected[n]));
  for (int n = 0; n <= 12; ++n) {
    const int x = 2 * n;
    CHECK(tet_regular(x) == tet({{x, x, x}, {x, x, x}}));
  }
  CHECK_THROWS_AS(tet_regular(3), OddArgument);
}

TEST_CASE("tet_k") {
  CHECK(tet_k(kT1) == BigRational(477531, 92176448));
  CHECK(tet_k({}) == 1);
  CHECK(tet_k({{1, 1, 1}, {1, 1, 1}}) == 0);
  InstanceGenerator gen(5);
  for (int i = 0; i < 100; ++i) {
    const TetLabels t = gen.tet(20);
    CHECK(tet_j_factor(t) == tet_j_factor_faces(t));
    CHECK(tet_k(t) == make_rational(tet_j_factor(t) * tet(t), tet_e_factor(t)));
  }
}

TEST_CASE("sixj") {
  const Surd s = sixj(kT1);
  CHECK(s.coeff() == BigRational(53059, 1216870200));
  CHECK(s.radicand() == 50830);
  CHECK(s == Surd::from_squarefree(BigRational(53059, 23940), 50830) / Surd(50830));
  CHECK(sixj({}) == Surd(1));
  CHECK(sixj({{1, 1, 1}, {1, 1, 1}}) == Surd(0));
  for (int a = 1; a <= 5; ++a) {
    const Surd v = sixj({{a, a, 0}, {a, 0, a}});
    const BigRational sq = make_rational(tet({{a, a, 0}, {a, 0, a}}) * tet({{a, a, 0}, {a, 0, a}}),
                                       gon3(a, a, 0) * gon3(a, 0, a) * gon3(a, 0, a) * gon3(0, a, a));
    CHECK(v.squared() == sq);
  }
}

TEST_CASE("sixj against the theta normalization") {
  InstanceGenerator gen(13);
  for (int i = 0; i < 100; ++i) {
    const TetLabels t = gen.tet(20);
    BigRational n2 = 1;
    for (const Triple& f : t.faces()) n2 *= abs(theta_k(f.a, f.b, f.c));
    const Surd s = sixj(t);
    CHECK(s.squared() * n2 == tet_k(t) * tet_k(t));
  }
}

TEST_CASE("regge_images") {
  for (const TetLabels& img : regge_images(kT1)) CHECK(tet(img) == tet(kT1));
  for (const TetLabels& img : regge_images(kSmall)) CHECK(tet(img) == -24);
  CHECK_THROWS_AS(regge_images({{1, 1, 1}, {1, 1, 1}}), NotAdmissible);
  InstanceGenerator gen(21);
  for (int i = 0; i < 200; ++i) {
    const TetLabels t = gen.tet(30);
    const BigInt v = tet(t);
    for (const TetLabels& img : regge_images(t)) {
      CHECK(is_admissible_tet(img));
      CHECK(tet(img) == v);
    }
  }
}

TEST_CASE("tetrahedral symmetry") {
  InstanceGenerator gen(8);
  for (int i = 0; i < 50; ++i) {
    const TetLabels t = gen.tet(30);
    const BigInt v = tet(t);
    for (const TetLabels& img : tet_symmetry_images(t)) CHECK(tet(img) == v);
  }
}

TEST_CASE("racah_cell") {
  CHECK(racah_cell({}) == Surd(1));
  BigRational sum = 0;
  for (int b = 12; b <= 28; b += 2) {
    const Surd c = racah_cell({{8, b, 20}, {15, 17, 13}});
    CHECK(c.squared().get_den() > 0);
    sum += c.squared();
  }
  CHECK(sum == 1);
}

TEST_CASE("biunitarity_sum") {
  const BiunitarityResult rb = biunitarity_sum({{8, 0, 20}, {15, 17, 13}}, FreeSlot::B);
  CHECK(rb.sum == 1);
  CHECK(rb.range.front() == 12);
  CHECK(rb.range.back() == 28);
  const BiunitarityResult re = biunitarity_sum({{8, 24, 20}, {15, 0, 13}}, FreeSlot::E);
  CHECK(re.sum == 1);
  CHECK(re.range.front() == 5);
  CHECK(re.range.back() == 21);
  CHECK(biunitarity_sum({{1, 0, 10}, {1, 0, 1}}, FreeSlot::B).sum == 0);
  InstanceGenerator gen(31);
  for (int i = 0; i < 50; ++i) {
    const TetLabels t = gen.tet(25);
    CHECK(biunitarity_sum(t, FreeSlot::B).sum == 1);
    CHECK(biunitarity_sum(t, FreeSlot::E).sum == 1);
  }
}
