#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gontet/bigint.hpp"
#include "gontet/triples.hpp"

namespace gontet {

/// Outcome of checking an identity: every side (or channel) as an exact
/// value, plus the summation sets that were used.
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, BigRational>> sides;
  std::vector<std::pair<std::string, std::vector<int>>> witness;
  bool equal = false;
};

/// s-, t- and u-channel sums of gon(.,.,x) gon(.,.,x) / (x+1) for the
/// quadrilateral (a,b,c,d).
IdentityReport verify_duality(int a, int b, int c, int d);

/// Nine labels; the bipyramid is the union of ((a,b,c),(d,e,f)) and
/// ((a,b,c),(g,h,k)) glued along (a,b,c).
struct Bipyramid {
  std::array<int, 9> labels{};

  int a() const { return labels[0]; }
  int b() const { return labels[1]; }
  int c() const { return labels[2]; }
  int d() const { return labels[3]; }
  int e() const { return labels[4]; }
  int f() const { return labels[5]; }
  int g() const { return labels[6]; }
  int h() const { return labels[7]; }
  int k() const { return labels[8]; }

  TetLabels upper() const { return {{a(), b(), c()}, {d(), e(), f()}}; }
  TetLabels lower() const { return {{a(), b(), c()}, {g(), h(), k()}}; }
  bool is_admissible() const { return is_admissible_tet(upper()) && is_admissible_tet(lower()); }
};

/// The three tetrahedra of the 3-tet decomposition for diagonal x.
std::array<TetLabels, 3> bipyramid_split(const Bipyramid& bp, int x);

/// Range of the diagonal: fusion(d,g) & fusion(f,k) & fusion(h,e).
std::vector<int> bipyramid_diagonals(const Bipyramid& bp);

/// tet(upper) tet(lower) / ((-1)^sigma gon(a,b,c)); 0 when (a,b,c) is not
/// admissible. Throws NonIntegral if the quotient is not an integer.
BigInt hed1(const Bipyramid& bp);

/// Sum over the diagonal of the three-tetrahedron product.
BigRational hed2(const Bipyramid& bp);

IdentityReport verify_pentagon(const Bipyramid& bp);

struct BarycentricTerm {
  int alpha = 0, beta = 0, gamma = 0;
  BigRational contribution;
};

/// (alpha, beta, gamma) making the six inner faces admissible, ascending.
std::vector<std::array<int, 3>> barycentric_enum(const TetLabels& t, int delta);

struct BarycentricResult {
  BigRational total;
  std::vector<BarycentricTerm> terms;
};

/// P(delta) and its per-triple contributions.
BarycentricResult barycentric_P(const TetLabels& t, int delta);

/// Largest delta that can still enlarge the solution set.
int barycentric_delta_max(const TetLabels& t);

/// Twelve cube edges, in the order 01,13,32,20,45,57,76,64,04,15,26,37.
struct CubeLabels {
  std::array<int, 12> edges{};
  static CubeLabels uniform(int x);
};

struct CubeResult {
  BigInt value;
  std::size_t assignments = 0;
};

/// Five-tetrahedron dissection summed over admissible diagonal assignments.
/// The parallel version splits the assignment list across OpenMP threads.
CubeResult cube(const CubeLabels& edges);
CubeResult cube_serial(const CubeLabels& edges);

/// Constant term of the Dyson-type product in u, v, w. Throws SizeLimit
/// when m + n + p > 12.
BigInt dyson_ct(int m, int n, int p);

}  // namespace gontet
