#include "gontet/triples.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <string>

#include "gontet/errors.hpp"
#include "gontet/root_of_unity.hpp"

namespace gontet {

bool is_admissible_triple(long a, long b, long c) {
  return a >= 0 && b >= 0 && c >= 0 && a + b >= c && b + c >= a && c + a >= b &&
         (a + b + c) % 2 == 0;
}

InternalVars internal_vars(const Triple& t) {
  if (!is_admissible(t)) {
    throw NotAdmissible("triple (" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                        std::to_string(t.c) + ") is not admissible");
  }
  InternalVars v;
  v.m = (t.c + t.a - t.b) / 2;
  v.n = (t.a + t.b - t.c) / 2;
  v.p = (t.b + t.c - t.a) / 2;
  v.sigma = v.m + v.n + v.p;
  return v;
}

Triple from_internal(const InternalVars& v) { return {v.m + v.n, v.n + v.p, v.p + v.m}; }

std::vector<int> fusion_range(int a, int b) {
  std::vector<int> out;
  if (a < 0 || b < 0) return out;
  for (int c = std::abs(a - b); c <= a + b; c += 2) out.push_back(c);
  return out;
}

std::vector<int> fusion_range_multi(std::span<const int> xs) {
  std::vector<int> current{0};
  for (int x : xs) {
    if (x < 0) return {};
    const int top = current.back() + x;
    std::vector<bool> hit(static_cast<std::size_t>(top) + 1, false);
    for (int c : current) {
      for (int r = std::abs(c - x); r <= c + x; r += 2) hit[static_cast<std::size_t>(r)] = true;
    }
    current.clear();
    for (int r = 0; r <= top; ++r) {
      if (hit[static_cast<std::size_t>(r)]) current.push_back(r);
    }
  }
  return current;
}

std::vector<int> q_fusion_range(int a, int b, const RootOfUnity& root) {
  std::vector<int> out;
  for (int c : fusion_range(a, b)) {
    if (a + b + c <= root.max_perimeter()) out.push_back(c);
  }
  return out;
}

bool is_q_admissible_triple(long a, long b, long c, const RootOfUnity& root) {
  return is_admissible_triple(a, b, c) && a + b + c <= root.max_perimeter();
}

std::vector<int> intersect(std::span<const int> x, std::span<const int> y) {
  std::vector<int> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::array<Triple, 4> TetLabels::faces() const {
  return {Triple{a(), b(), c()}, Triple{b(), d(), f()}, Triple{a(), e(), f()},
          Triple{c(), d(), e()}};
}

bool is_admissible_tet(const TetLabels& t) {
  const auto fs = t.faces();
  return std::all_of(fs.begin(), fs.end(), [](const Triple& f) { return is_admissible(f); });
}

bool is_q_admissible_tet(const TetLabels& t, const RootOfUnity& root) {
  const auto fs = t.faces();
  return std::all_of(fs.begin(), fs.end(), [&](const Triple& f) {
    return is_q_admissible_triple(f.a, f.b, f.c, root);
  });
}

namespace {

// Edge label between vertices i < j (0-based) in the a=12, b=23, c=13,
// d=34, e=14, f=24 layout.
int edge(const TetLabels& t, int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int kIndex[4][4] = {
      {-1, 0, 2, 4},
      {0, -1, 1, 5},
      {2, 1, -1, 3},
      {4, 5, 3, -1},
  };
  return t.flat()[static_cast<std::size_t>(kIndex[i][j])];
}

}  // namespace

std::array<TetLabels, 24> tet_symmetry_images(const TetLabels& t) {
  std::array<TetLabels, 24> out;
  std::array<int, 4> perm{0, 1, 2, 3};
  std::size_t k = 0;
  do {
    // Vertex v of the image sits where perm[v] was.
    const auto e = [&](int i, int j) { return edge(t, perm[i], perm[j]); };
    out[k++] = TetLabels{{e(0, 1), e(1, 2), e(0, 2)}, {e(2, 3), e(0, 3), e(1, 3)}};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TetLabels canonical_tet(const TetLabels& t) {
  const auto images = tet_symmetry_images(t);
  return *std::min_element(images.begin(), images.end(),
                           [](const TetLabels& x, const TetLabels& y) { return x.flat() < y.flat(); });
}

GeomClass cayley_menger(const TetLabels& t) {
  const auto sq = [](int x) -> BigInt { return BigInt(x) * x; };
  BigInt m[5][5] = {
      {0, sq(t.a()), sq(t.c()), sq(t.e()), 1},
      {sq(t.a()), 0, sq(t.b()), sq(t.f()), 1},
      {sq(t.c()), sq(t.b()), 0, sq(t.d()), 1},
      {sq(t.e()), sq(t.f()), sq(t.d()), 0, 1},
      {1, 1, 1, 1, 0},
  };
  // Fraction-free (Bareiss) elimination with row swaps.
  int sign = 1;
  BigInt prev = 1;
  constexpr int n = 5;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return {GeomKind::Flat, 0};
      for (int c = 0; c < n; ++c) std::swap(m[k][c], m[r][c]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  GeomClass out;
  out.delta = sign * m[n - 1][n - 1];
  out.kind = out.delta > 0 ? GeomKind::Euclidean
                           : (out.delta < 0 ? GeomKind::Minkowskian : GeomKind::Flat);
  return out;
}

const char* to_string(GeomKind k) {
  switch (k) {
    case GeomKind::Euclidean: return "Euclidean";
    case GeomKind::Minkowskian: return "Minkowskian";
    case GeomKind::Flat: return "Flat";
  }
  return "?";
}

}  // namespace gontet
