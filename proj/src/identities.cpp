#include "gontet/identities.hpp"

#include <algorithm>
#include <omp.h>

#include "gontet/errors.hpp"
#include "gontet/gon.hpp"
#include "gontet/tet.hpp"

namespace gontet {

namespace {

BigRational channel(const std::vector<int>& range, int p, int q, int r, int s) {
  BigInt sum = 0;
  for (int x : range) {
    BigInt term = gon3(p, q, x) * gon3(r, s, x);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(x + 1));
    sum += term;
  }
  return BigRational(sum);
}

bool all_equal(const IdentityReport& r) {
  for (const auto& side : r.sides) {
    if (side.second != r.sides.front().second) return false;
  }
  return true;
}

}  // namespace

IdentityReport verify_duality(int a, int b, int c, int d) {
  IdentityReport r;
  r.identity = "duality";
  const auto s = intersect(fusion_range(a, b), fusion_range(c, d));
  const auto t = intersect(fusion_range(a, d), fusion_range(b, c));
  const auto u = intersect(fusion_range(a, c), fusion_range(b, d));
  r.sides = {{"s", channel(s, a, b, c, d)}, {"t", channel(t, a, d, b, c)}, {"u", channel(u, a, c, b, d)}};
  r.witness = {{"S", s}, {"T", t}, {"U", u}};
  r.equal = all_equal(r);
  return r;
}

std::array<TetLabels, 3> bipyramid_split(const Bipyramid& bp, int x) {
  return {TetLabels{{bp.c(), bp.e(), bp.d()}, {x, bp.g(), bp.h()}},
          TetLabels{{bp.b(), bp.d(), bp.f()}, {x, bp.k(), bp.g()}},
          TetLabels{{bp.a(), bp.e(), bp.f()}, {x, bp.k(), bp.h()}}};
}

std::vector<int> bipyramid_diagonals(const Bipyramid& bp) {
  auto xs = intersect(fusion_range(bp.d(), bp.g()), fusion_range(bp.f(), bp.k()));
  return intersect(xs, fusion_range(bp.h(), bp.e()));
}

BigInt hed1(const Bipyramid& bp) {
  const BigInt g = gon3(bp.a(), bp.b(), bp.c());
  if (g == 0) return 0;
  BigInt num = tet(bp.upper()) * tet(bp.lower());
  if (parity_sign((bp.a() + bp.b() + bp.c()) / 2) < 0) num = -num;
  BigInt out;
  if (!divides_exactly(num, g, out)) throw NonIntegral("hed1: quotient is not an integer");
  return out;
}

BigRational hed2(const Bipyramid& bp) {
  BigRational sum = 0;
  for (int x : bipyramid_diagonals(bp)) {
    const auto tets = bipyramid_split(bp, x);
    BigInt num = tet(tets[0]) * tet(tets[1]) * tet(tets[2]) * (x + 1);
    if (num == 0) continue;
    const int sign = parity_sign(x + (x + bp.d() + bp.g()) / 2 + (x + bp.f() + bp.k()) / 2 +
                                 (x + bp.e() + bp.h()) / 2);
    const BigInt den = gon3(x, bp.d(), bp.g()) * gon3(x, bp.f(), bp.k()) * gon3(x, bp.e(), bp.h());
    sum += make_rational(num * sign, den);
  }
  return sum;
}

IdentityReport verify_pentagon(const Bipyramid& bp) {
  IdentityReport r;
  r.identity = "pentagon";
  r.sides = {{"hed1", BigRational(hed1(bp))}, {"hed2", hed2(bp)}};
  r.witness = {{"x", bipyramid_diagonals(bp)}};
  r.equal = all_equal(r);
  return r;
}

std::vector<std::array<int, 3>> barycentric_enum(const TetLabels& t, int delta) {
  const int a = t.a(), b = t.b(), c = t.c(), A = t.d(), B = t.e(), C = t.f();
  std::vector<std::array<int, 3>> out;
  if (delta < 0) return out;
  for (int alpha : fusion_range(A, delta)) {
    for (int beta : fusion_range(B, delta)) {
      if (!is_admissible_triple(alpha, beta, c)) continue;
      for (int gamma : fusion_range(C, delta)) {
        if (is_admissible_triple(a, beta, gamma) && is_admissible_triple(alpha, b, gamma)) {
          out.push_back({alpha, beta, gamma});
        }
      }
    }
  }
  return out;
}

BarycentricResult barycentric_P(const TetLabels& t, int delta) {
  const int a = t.a(), b = t.b(), c = t.c(), A = t.d(), B = t.e(), C = t.f();
  const int dl = delta;
  BarycentricResult out;
  out.total = 0;
  for (const auto& [al, be, ga] : barycentric_enum(t, delta)) {
    const BigInt num = tet({{a, b, c}, {al, be, ga}}) * tet({{a, B, C}, {dl, ga, be}}) *
                       tet({{C, A, b}, {al, ga, dl}}) * tet({{A, B, c}, {be, al, dl}});
    const BigInt den = gon3(a, be, ga) * gon3(A, al, dl) * gon3(al, b, ga) * gon3(be, B, dl) *
                       gon3(al, be, c) * gon3(ga, dl, C);
    const int sign = parity_sign(al + be + ga + dl) *
                     parity_sign((a + be + ga) / 2 + (al + A + dl) / 2 + (al + b + ga) / 2 +
                                 (be + B + dl) / 2 + (al + be + c) / 2 + (ga + C + dl) / 2);
    const BigInt dims = BigInt(al + 1) * (be + 1) * (ga + 1) * (dl + 1);
    BarycentricTerm term{al, be, ga, make_rational(num * dims * sign, den)};
    out.total += term.contribution;
    out.terms.push_back(std::move(term));
  }
  return out;
}

int barycentric_delta_max(const TetLabels& t) {
  // Once delta exceeds every label the three fusion ranges only shift, and
  // the inner faces with the old edges cap alpha, beta, gamma.
  const auto f = t.flat();
  return *std::max_element(f.begin(), f.end());
}

CubeLabels CubeLabels::uniform(int x) {
  CubeLabels c;
  c.edges.fill(x);
  return c;
}

namespace {

// Vertex-pair lookup for the 12 cube edges and 6 diagonals.
struct CubeGraph {
  int label[8][8];

  explicit CubeGraph(const CubeLabels& c) {
    for (auto& row : label) std::fill(std::begin(row), std::end(row), -1);
    static constexpr int kPairs[12][2] = {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7},
                                          {7, 6}, {6, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    for (int i = 0; i < 12; ++i) set(kPairs[i][0], kPairs[i][1], c.edges[static_cast<std::size_t>(i)]);
  }
  void set(int i, int j, int v) { label[i][j] = label[j][i] = v; }
  int operator()(int i, int j) const { return label[i][j]; }
};

struct Assignment {
  int d12, d14, d24, d17, d27, d47;
};

std::array<TetLabels, 5> cube_tets(const CubeGraph& g) {
  const auto tet_of = [&](int i, int j, int k, int l, int m, int n, int o, int p, int q, int r,
                          int s, int u) {
    return TetLabels{{g(i, j), g(k, l), g(m, n)}, {g(o, p), g(q, r), g(s, u)}};
  };
  return {tet_of(0, 1, 1, 2, 2, 0, 2, 4, 0, 4, 1, 4), tet_of(2, 4, 4, 6, 6, 2, 6, 7, 2, 7, 4, 7),
          tet_of(1, 4, 4, 5, 5, 1, 5, 7, 1, 7, 4, 7), tet_of(1, 2, 2, 3, 3, 1, 3, 7, 1, 7, 2, 7),
          tet_of(1, 2, 2, 4, 4, 1, 4, 7, 1, 7, 2, 7)};
}

std::vector<Assignment> cube_assignments(const CubeLabels& c) {
  CubeGraph g(c);
  std::vector<Assignment> out;
  for (int d12 : fusion_range(g(0, 1), g(0, 2))) {
    for (int d14 : fusion_range(g(0, 1), g(0, 4))) {
      for (int d24 : fusion_range(g(0, 2), g(0, 4))) {
        if (!is_admissible_triple(d12, d24, d14)) continue;
        for (int d17 : fusion_range(g(1, 3), g(3, 7))) {
          for (int d27 : fusion_range(g(2, 3), g(3, 7))) {
            if (!is_admissible_triple(d12, d27, d17)) continue;
            for (int d47 : fusion_range(g(4, 6), g(6, 7))) {
              if (!is_admissible_triple(d14, d47, d17) || !is_admissible_triple(d24, d47, d27)) continue;
              g.set(1, 2, d12);
              g.set(1, 4, d14);
              g.set(2, 4, d24);
              g.set(1, 7, d17);
              g.set(2, 7, d27);
              g.set(4, 7, d47);
              const auto tets = cube_tets(g);
              if (std::all_of(tets.begin(), tets.end(), [](const TetLabels& t) { return is_admissible_tet(t); })) {
                out.push_back({d12, d14, d24, d17, d27, d47});
              }
            }
          }
        }
      }
    }
  }
  return out;
}

BigRational cube_term(const CubeLabels& c, const Assignment& x) {
  CubeGraph g(c);
  g.set(1, 2, x.d12);
  g.set(1, 4, x.d14);
  g.set(2, 4, x.d24);
  g.set(1, 7, x.d17);
  g.set(2, 7, x.d27);
  g.set(4, 7, x.d47);
  BigInt num = 1;
  for (const auto& t : cube_tets(g)) num *= tet(t);
  for (int d : {x.d12, x.d14, x.d24, x.d17, x.d27, x.d47}) num *= d + 1;
  const BigInt den = gon3(x.d12, x.d24, x.d14) * gon3(x.d12, x.d27, x.d17) *
                     gon3(x.d14, x.d47, x.d17) * gon3(x.d24, x.d47, x.d27);
  return make_rational(num, den);
}

CubeResult finish_cube(const BigRational& total, std::size_t count) {
  if (total.get_den() != 1) throw NonIntegral("cube: sum is not an integer");
  return {total.get_num(), count};
}

}  // namespace

CubeResult cube_serial(const CubeLabels& edges) {
  const auto list = cube_assignments(edges);
  BigRational total = 0;
  for (const auto& x : list) total += cube_term(edges, x);
  return finish_cube(total, list.size());
}

CubeResult cube(const CubeLabels& edges) {
  const auto list = cube_assignments(edges);
  const long n = static_cast<long>(list.size());
  std::vector<BigRational> partial(static_cast<std::size_t>(omp_get_max_threads()), BigRational(0));
#pragma omp parallel
  {
    BigRational local = 0;
#pragma omp for schedule(dynamic)
    for (long i = 0; i < n; ++i) local += cube_term(edges, list[static_cast<std::size_t>(i)]);
    partial[static_cast<std::size_t>(omp_get_thread_num())] = local;
  }
  BigRational total = 0;
  for (const auto& p : partial) total += p;
  return finish_cube(total, list.size());
}

BigInt dyson_ct(int m, int n, int p) {
  if (m < 0 || n < 0 || p < 0) throw NotAdmissible("dyson_ct: exponents must be non-negative");
  if (m + n + p > 12) throw SizeLimit("dyson_ct: m + n + p must be at most 12");
  struct Factor {
    int du, dv, dw, power;
  };
  const Factor factors[] = {{0, 0, -1, 1}, {1, 0, 0, m},   {-1, 0, 0, n},  {0, 1, 0, n},
                            {0, -1, 0, p}, {0, 0, 1, p},   {0, -1, -1, 1}, {1, 1, 0, m},
                            {0, 1, 1, n},  {-1, -1, 0, p}, {-1, -1, -1, 1}, {1, 1, 1, m}};
  // Exponent box for each variable.
  int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
  for (const auto& f : factors) {
    const int d[3] = {f.du, f.dv, f.dw};
    for (int i = 0; i < 3; ++i) {
      if (d[i] < 0) lo[i] += d[i] * f.power;
      if (d[i] > 0) hi[i] += d[i] * f.power;
    }
  }
  const int nu = hi[0] - lo[0] + 1, nv = hi[1] - lo[1] + 1, nw = hi[2] - lo[2] + 1;
  const auto index = [&](int u, int v, int w) {
    return (static_cast<std::size_t>(u - lo[0]) * static_cast<std::size_t>(nv) +
            static_cast<std::size_t>(v - lo[1])) *
               static_cast<std::size_t>(nw) +
           static_cast<std::size_t>(w - lo[2]);
  };
  std::vector<BigInt> cur(static_cast<std::size_t>(nu) * nv * nw, BigInt(0));
  cur[index(0, 0, 0)] = 1;
  // Reachable box so far; grows as factors are applied.
  int rlo[3] = {0, 0, 0}, rhi[3] = {0, 0, 0};
  for (const auto& f : factors) {
    const int d[3] = {f.du, f.dv, f.dw};
    for (int rep = 0; rep < f.power; ++rep) {
      // Multiply by (1 - mono) in place, iterating so sources are read before
      // they are overwritten.
      const int su = d[0] > 0 ? -1 : 1, sv = d[1] > 0 ? -1 : 1, sw = d[2] > 0 ? -1 : 1;
      int nlo[3], nhi[3];
      for (int i = 0; i < 3; ++i) {
        nlo[i] = std::min(rlo[i], rlo[i] + d[i]);
        nhi[i] = std::max(rhi[i], rhi[i] + d[i]);
      }
      for (int u = su < 0 ? nhi[0] : nlo[0]; su < 0 ? u >= nlo[0] : u <= nhi[0]; u += su) {
        for (int v = sv < 0 ? nhi[1] : nlo[1]; sv < 0 ? v >= nlo[1] : v <= nhi[1]; v += sv) {
          for (int w = sw < 0 ? nhi[2] : nlo[2]; sw < 0 ? w >= nlo[2] : w <= nhi[2]; w += sw) {
            const int pu = u - d[0], pv = v - d[1], pw = w - d[2];
            if (pu < rlo[0] || pu > rhi[0] || pv < rlo[1] || pv > rhi[1] || pw < rlo[2] || pw > rhi[2]) continue;
            cur[index(u, v, w)] -= cur[index(pu, pv, pw)];
          }
        }
      }
      for (int i = 0; i < 3; ++i) {
        rlo[i] = nlo[i];
        rhi[i] = nhi[i];
      }
    }
  }
  return cur[index(0, 0, 0)];
}

}  // namespace gontet
