#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "gontet/identities.hpp"
#include "gontet/triples.hpp"

namespace gontet {

/// Seeded generators for admissible inputs. The same seed always yields
/// the same sequence.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  int label(int max) { return std::uniform_int_distribution<int>(0, max)(rng_); }

  /// Uniform over admissible triples with labels <= max.
  Triple triple(int max);
  /// Admissible tetrahedron with labels <= max.
  TetLabels tet(int max);
  /// Admissible bipyramid with labels <= max.
  Bipyramid bipyramid(int max);

 private:
  /// Picks (d,e,f) so ((a,b,c),(d,e,f)) is admissible, if possible.
  std::optional<std::array<int, 3>> complete(const Triple& face, int max);
  int pick(const std::vector<int>& xs);

  std::mt19937_64 rng_;
};

}  // namespace gontet
