#include "gontet/random.hpp"

#include <algorithm>

namespace gontet {

int InstanceGenerator::pick(const std::vector<int>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng_)];
}

Triple InstanceGenerator::triple(int max) {
  for (;;) {
    const int a = label(max), b = label(max), c = label(max);
    if (is_admissible_triple(a, b, c)) return {a, b, c};
  }
}

std::optional<std::array<int, 3>> InstanceGenerator::complete(const Triple& face, int max) {
  const auto capped = [max](std::vector<int> xs) {
    xs.erase(std::remove_if(xs.begin(), xs.end(), [max](int x) { return x > max; }), xs.end());
    return xs;
  };
  const int d = label(max);
  const auto fs = capped(fusion_range(face.b, d));
  if (fs.empty()) return std::nullopt;
  const int f = pick(fs);
  const auto es = capped(intersect(fusion_range(face.a, f), fusion_range(face.c, d)));
  if (es.empty()) return std::nullopt;
  return std::array<int, 3>{d, pick(es), f};
}

TetLabels InstanceGenerator::tet(int max) {
  for (;;) {
    const Triple face = triple(max);
    if (auto rest = complete(face, max)) return TetLabels{{face.a, face.b, face.c}, *rest};
  }
}

Bipyramid InstanceGenerator::bipyramid(int max) {
  for (;;) {
    const Triple face = triple(max);
    auto upper = complete(face, max);
    if (!upper) continue;
    for (int attempt = 0; attempt < 16; ++attempt) {
      if (auto lower = complete(face, max)) {
        return Bipyramid{{face.a, face.b, face.c, (*upper)[0], (*upper)[1], (*upper)[2], (*lower)[0],
                          (*lower)[1], (*lower)[2]}};
      }
    }
  }
}

}  // namespace gontet
