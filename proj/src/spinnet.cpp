#include "gontet/spinnet.hpp"

#include <stdexcept>

#include "gontet/errors.hpp"
#include "gontet/gon.hpp"
#include "gontet/tet.hpp"

namespace gontet {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

BigInt vertex_j(const Triple& t) {
  const InternalVars v = internal_vars(t);
  return factorial(static_cast<unsigned long>(v.m)) * factorial(static_cast<unsigned long>(v.n)) *
         factorial(static_cast<unsigned long>(v.p));
}

// sqrt|theta_v| with theta_v = (-1)^sigma gon.
Surd vertex_n(const Triple& t) { return Surd::sqrt_of(BigRational(gon3(t))); }

void require(const ColoredGraph& g) {
  if (!is_admissible(g)) throw NotAdmissible("spin network colouring is not admissible");
}

// Z value of the graph.
BigInt integer_value(const ColoredGraph& g) {
  return std::visit(Overloaded{
                        [](const LoopGraph& l) { return BigInt(parity_sign(l.n) * (l.n + 1)); },
                        [](const ThetaGraph& t) {
                          return BigInt(gon3(t.colors) * parity_sign(internal_vars(t.colors).sigma));
                        },
                        [](const TetraGraph& t) { return tet(t.labels); },
                    },
                    g);
}

}  // namespace

Prescription parse_prescription(const std::string& s) {
  if (s == "Z") return Prescription::Z;
  if (s == "P") return Prescription::P;
  if (s == "K") return Prescription::K;
  if (s == "U") return Prescription::U;
  throw std::invalid_argument("unknown prescription '" + s + "'");
}

const char* to_string(Prescription p) {
  switch (p) {
    case Prescription::Z: return "Z";
    case Prescription::P: return "P";
    case Prescription::K: return "K";
    case Prescription::U: return "U";
  }
  return "?";
}

bool is_admissible(const ColoredGraph& g) {
  return std::visit(Overloaded{
                        [](const LoopGraph& l) { return l.n >= 0; },
                        [](const ThetaGraph& t) { return gontet::is_admissible(t.colors); },
                        [](const TetraGraph& t) { return is_admissible_tet(t.labels); },
                    },
                    g);
}

GraphFactors factors(const ColoredGraph& g) {
  require(g);
  return std::visit(
      Overloaded{
          [](const LoopGraph&) { return GraphFactors{1, 1, Surd(1)}; },
          [](const ThetaGraph& t) {
            const BigInt jv = vertex_j(t.colors);
            const Surd nv = vertex_n(t.colors);
            BigInt e = factorial(static_cast<unsigned long>(t.colors.a)) *
                       factorial(static_cast<unsigned long>(t.colors.b)) *
                       factorial(static_cast<unsigned long>(t.colors.c));
            return GraphFactors{jv * jv, e, nv * nv};
          },
          [](const TetraGraph& t) {
            GraphFactors f{1, 1, Surd(1)};
            for (const Triple& face : t.labels.faces()) {
              f.j *= vertex_j(face);
              f.n *= vertex_n(face);
            }
            for (int x : t.labels.flat()) f.e *= factorial(static_cast<unsigned long>(x));
            return f;
          },
      },
      g);
}

SpinValue evaluate(const ColoredGraph& g, Prescription p) {
  require(g);
  const BigInt z = integer_value(g);
  if (std::holds_alternative<LoopGraph>(g)) {
    switch (p) {
      case Prescription::Z:
      case Prescription::P: return z;
      case Prescription::K: return BigRational(z);
      case Prescription::U: return Surd(z);
    }
  }
  const GraphFactors f = factors(g);
  switch (p) {
    case Prescription::Z: return z;
    case Prescription::P: return BigInt(f.j * z);
    case Prescription::K: return make_rational(f.j * z, f.e);
    case Prescription::U: return Surd(z) / f.n;
  }
  return z;
}

Surd to_surd(const SpinValue& v) {
  return std::visit([](const auto& x) { return Surd(x); }, v);
}

}  // namespace gontet
