#pragma once

#include <string>
#include <variant>

#include "gontet/bigint.hpp"
#include "gontet/surd.hpp"
#include "gontet/triples.hpp"

namespace gontet {

struct LoopGraph {
  int n = 0;
};
struct ThetaGraph {
  Triple colors;
};
struct TetraGraph {
  TetLabels labels;
};

/// Coloured trivalent graph: a loop, a theta or a tetrahedron.
using ColoredGraph = std::variant<LoopGraph, ThetaGraph, TetraGraph>;

/// Integer, Penrose, Kauffman and unitary evaluations.
enum class Prescription { Z, P, K, U };

Prescription parse_prescription(const std::string& s);  // throws std::invalid_argument
const char* to_string(Prescription p);

struct GraphFactors {
  BigInt j;  // product over vertices of (sigma_v - v_i)!
  BigInt e;  // product over edges of colour!
  Surd n;    // product over vertices of sqrt|theta_v|
};

bool is_admissible(const ColoredGraph& g);

/// Throws NotAdmissible.
GraphFactors factors(const ColoredGraph& g);

/// Exact value of the evaluation; BigInt for Z and P, BigRational for K,
/// Surd for U. Throws NotAdmissible.
using SpinValue = std::variant<BigInt, BigRational, Surd>;
SpinValue evaluate(const ColoredGraph& g, Prescription p);

Surd to_surd(const SpinValue& v);

}  // namespace gontet
