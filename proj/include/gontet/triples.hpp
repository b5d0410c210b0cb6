#pragma once

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "gontet/bigint.hpp"

namespace gontet {

class RootOfUnity;

/// Three edge labels (twice the spins).
struct Triple {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const Triple&) const = default;
};

/// Internal variables of an admissible triple: a = m + n, b = n + p, c = p + m.
struct InternalVars {
  int m = 0, n = 0, p = 0;
  int sigma = 0;  // m + n + p = (a + b + c) / 2
  bool operator==(const InternalVars&) const = default;
};

bool is_admissible_triple(long a, long b, long c);
inline bool is_admissible(const Triple& t) { return is_admissible_triple(t.a, t.b, t.c); }

/// Throws NotAdmissible.
InternalVars internal_vars(const Triple& t);

Triple from_internal(const InternalVars& v);

/// |a-b|, |a-b|+2, ..., a+b.
std::vector<int> fusion_range(int a, int b);

/// Left fold of fusion_range over the list, with set semantics. The empty
/// list fuses to {0}.
std::vector<int> fusion_range_multi(std::span<const int> xs);

/// Classical fusion range truncated to c with a + b + c <= 2 kappa - 4.
std::vector<int> q_fusion_range(int a, int b, const RootOfUnity& root);

bool is_q_admissible_triple(long a, long b, long c, const RootOfUnity& root);

/// Sorted intersection of sorted ranges.
std::vector<int> intersect(std::span<const int> x, std::span<const int> y);

/// A labelled tetrahedron ((a,b,c),(d,e,f)): (a,b,c) is a face and d, e, f
/// are the edges opposite a, b, c. Faces are (a,b,c), (b,d,f), (a,e,f),
/// (c,d,e). With vertices 1..4 the edges are a=12, b=23, c=13, d=34, e=14,
/// f=24.
struct TetLabels {
  std::array<int, 3> first{};
  std::array<int, 3> second{};

  int a() const { return first[0]; }
  int b() const { return first[1]; }
  int c() const { return first[2]; }
  int d() const { return second[0]; }
  int e() const { return second[1]; }
  int f() const { return second[2]; }

  std::array<int, 6> flat() const { return {a(), b(), c(), d(), e(), f()}; }
  static TetLabels from_flat(const std::array<int, 6>& v) {
    return {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
  }

  std::array<Triple, 4> faces() const;

  auto operator<=>(const TetLabels&) const = default;
};

bool is_admissible_tet(const TetLabels& t);
bool is_q_admissible_tet(const TetLabels& t, const RootOfUnity& root);

/// All 24 relabelings of t under permutations of the four vertices
/// (duplicates kept, one per permutation).
std::array<TetLabels, 24> tet_symmetry_images(const TetLabels& t);

/// Lexicographically least image under the tetrahedral group.
TetLabels canonical_tet(const TetLabels& t);

enum class GeomKind { Euclidean, Minkowskian, Flat };

struct GeomClass {
  GeomKind kind = GeomKind::Flat;
  BigInt delta;  // Cayley-Menger determinant; V = sqrt(delta / 288) when positive
};

/// Exact 5x5 Cayley-Menger determinant of the edge lengths, any labels.
GeomClass cayley_menger(const TetLabels& t);

const char* to_string(GeomKind k);

}  // namespace gontet
