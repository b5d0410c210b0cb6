#pragma once

#include <array>
#include <vector>

#include "gontet/bigint.hpp"
#include "gontet/factor.hpp"
#include "gontet/surd.hpp"
#include "gontet/triples.hpp"

namespace gontet {

/// Face semi-perimeters sigma(1..4), quadrilateral semi-perimeters tau(1..3).
struct TetPerimeters {
  std::array<int, 4> sigma{};
  std::array<int, 3> tau{};
  int m_sigma = 0;  // max sigma
  int m_tau = 0;    // min tau
};

/// Requires even face perimeters (true for admissible labels).
TetPerimeters tet_perimeters(const TetLabels& t);

/// Alternating sum over s in [m_sigma, m_tau] of
/// (-1)^s (s+1)! / (prod (s - sigma_i)! prod (tau_u - s)!); 0 when not admissible.
BigInt tet(const TetLabels& t);

/// Same sum with every term formed from full factorials. Slow; kept as an
/// independent oracle for the incremental kernel.
BigInt tet_reference(const TetLabels& t);

/// tet of the regular tetrahedron with all labels two_n, from the
/// terminating 4F3 series. Throws OddArgument for odd input.
BigInt tet_regular(int two_n);

/// J = prod_{i,u} (tau_u - sigma_i)!.
BigInt tet_j_factor(const TetLabels& t);
/// Same J as the product over faces of m! n! p!.
BigInt tet_j_factor_faces(const TetLabels& t);
/// E = a! b! c! d! e! f!.
BigInt tet_e_factor(const TetLabels& t);

/// Kauffman evaluation TET = J / E * tet.
BigRational tet_k(const TetLabels& t);

/// Wigner 6j {a/2 b/2 c/2; d/2 e/2 f/2} = tet / sqrt(prod of the four face gons).
Surd sixj(const TetLabels& t);

/// Product of the four face gons, as a Surd-ready square split.
SquareSplit face_gon_product_split(const TetLabels& t);

/// The three Regge images (shifts by tau_1, tau_3, tau_2). Each image is
/// checked for admissibility; a failure throws NotAdmissible.
std::array<TetLabels, 3> regge_images(const TetLabels& t);

/// Racah cell (-1)^((a+c+d+f)/2) sqrt((b+1)(e+1)) sixj(t).
Surd racah_cell(const TetLabels& t);

enum class FreeSlot { B, E };

struct BiunitarityResult {
  BigRational sum;
  std::vector<int> range;  // values taken by the free slot
};

/// Sum over the free slot of (b+1)(e+1) tet^2 / prod gon. The value stored
/// in the free slot of `labels` is ignored.
BiunitarityResult biunitarity_sum(const TetLabels& labels, FreeSlot slot);

}  // namespace gontet
