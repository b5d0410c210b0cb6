#include "doctest.h"
#include "gontet/errors.hpp"
#include "gontet/gon.hpp"
#include "gontet/random.hpp"
#include "gontet/spinnet.hpp"
#include "gontet/tet.hpp"

using namespace gontet;

namespace {

BigRational as_rational(const SpinValue& v) {
  const Surd s = to_surd(v);
  REQUIRE(s.is_rational());
  return s.coeff();
}

}  // namespace

TEST_CASE("prescription names") {
  CHECK(parse_prescription("K") == Prescription::K);
  CHECK(std::string(to_string(Prescription::U)) == "U");
  CHECK_THROWS(parse_prescription("X"));
}

TEST_CASE("loop") {
  for (int n = 0; n < 6; ++n) {
    for (Prescription p : {Prescription::Z, Prescription::P, Prescription::K, Prescription::U}) {
      CHECK(as_rational(evaluate(LoopGraph{n}, p)) == (n % 2 == 0 ? n + 1 : -(n + 1)));
    }
    const GraphFactors f = factors(LoopGraph{n});
    CHECK(f.j == 1);
    CHECK(f.e == 1);
    CHECK(f.n == Surd(1));
  }
}

TEST_CASE("theta factors") {
  for (int a = 0; a < 6; ++a) {
    const GraphFactors f = factors(ThetaGraph{{a, a, 0}});
    CHECK(f.j == factorial(a) * factorial(a));
    CHECK(f.e == factorial(a) * factorial(a));
    CHECK(f.n == Surd(a + 1));
  }
  const GraphFactors f = factors(ThetaGraph{{2, 2, 2}});
  CHECK(f.j == 1);
  CHECK(f.e == 8);
  CHECK(f.n == Surd(24));
  CHECK_THROWS_AS(factors(ThetaGraph{{1, 1, 1}}), NotAdmissible);
}

TEST_CASE("theta evaluations") {
  for (int a = 0; a < 8; ++a) {
    CHECK(as_rational(evaluate(ThetaGraph{{a, a, 0}}, Prescription::K)) == (a % 2 == 0 ? a + 1 : -(a + 1)));
  }
  CHECK(as_rational(evaluate(ThetaGraph{{2, 2, 2}}, Prescription::U)) == -1);
  CHECK(as_rational(evaluate(ThetaGraph{{2, 2, 2}}, Prescription::Z)) == -24);
  CHECK_THROWS_AS(evaluate(ThetaGraph{{1, 1, 1}}, Prescription::Z), NotAdmissible);
  InstanceGenerator gen(6);
  for (int i = 0; i < 100; ++i) {
    const Triple t = gen.triple(25);
    const ThetaGraph g{t};
    const int sigma = (t.a + t.b + t.c) / 2;
    CHECK(as_rational(evaluate(g, Prescription::U)) == parity_sign(sigma));
    CHECK(as_rational(evaluate(g, Prescription::K)) == theta_k(t.a, t.b, t.c));
  }
}

TEST_CASE("tetra evaluations") {
  const TetraGraph g{{{8, 20, 24}, {15, 13, 17}}};
  CHECK(as_rational(evaluate(g, Prescription::Z)) == BigRational(BigInt("332385335268386400")));
  CHECK(as_rational(evaluate(g, Prescription::K)) == BigRational(477531, 92176448));
  CHECK(to_surd(evaluate(g, Prescription::U)) == sixj(g.labels));
}

TEST_CASE("cross-prescription identities") {
  InstanceGenerator gen(19);
  for (int i = 0; i < 100; ++i) {
    const ColoredGraph graphs[] = {ThetaGraph{gen.triple(25)}, TetraGraph{gen.tet(25)}};
    for (const ColoredGraph& g : graphs) {
      const GraphFactors f = factors(g);
      const BigRational z = as_rational(evaluate(g, Prescription::Z));
      CHECK(as_rational(evaluate(g, Prescription::P)) == f.j * z);
      CHECK(as_rational(evaluate(g, Prescription::K)) == BigRational(f.j * z) / f.e);
      const Surd u = to_surd(evaluate(g, Prescription::U));
      CHECK((u * f.n).squared() == z * z);
    }
  }
}
