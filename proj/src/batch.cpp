#include "gontet/batch.hpp"

#include <algorithm>
#include <omp.h>
#include <stdexcept>

#include "gontet/gon.hpp"
#include "gontet/identities.hpp"
#include "gontet/quantum.hpp"
#include "gontet/random.hpp"
#include "gontet/spinnet.hpp"
#include "gontet/tet.hpp"

namespace gontet {

namespace {

int thread_count(Jobs jobs) { return jobs.count > 0 ? jobs.count : omp_get_max_threads(); }

template <class Out, class In, class Fn>
std::vector<Out> map_parallel(std::span<const In> in, Jobs jobs, Fn fn) {
  std::vector<Out> out(in.size());
  const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(jobs))
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(in[static_cast<std::size_t>(i)]);
  return out;
}

template <class Out, class In, class Fn>
std::vector<Out> map_serial(std::span<const In> in, Fn fn) {
  std::vector<Out> out;
  out.reserve(in.size());
  for (const In& x : in) out.push_back(fn(x));
  return out;
}

constexpr std::size_t kMaxFailures = 8;

std::string show(const TetLabels& t) {
  const auto f = t.flat();
  return "((" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]) + "),(" +
         std::to_string(f[3]) + "," + std::to_string(f[4]) + "," + std::to_string(f[5]) + "))";
}

std::string show(std::initializer_list<int> xs) {
  std::string s = "(";
  for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

std::vector<Triple> admissible_triples(int max) {
  std::vector<Triple> out;
  for (int a = 0; a <= max; ++a) {
    for (int b = 0; b <= max; ++b) {
      for (int c = 0; c <= max; ++c) {
        if (is_admissible_triple(a, b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BigInt> gon3_batch(std::span<const Triple> in, Jobs jobs) {
  return map_parallel<BigInt>(in, jobs, [](const Triple& t) { return gon3(t); });
}
std::vector<BigInt> gon3_batch_serial(std::span<const Triple> in) {
  return map_serial<BigInt>(in, [](const Triple& t) { return gon3(t); });
}
std::vector<BigInt> tet_batch(std::span<const TetLabels> in, Jobs jobs) {
  return map_parallel<BigInt>(in, jobs, [](const TetLabels& t) { return tet(t); });
}
std::vector<BigInt> tet_batch_serial(std::span<const TetLabels> in) {
  return map_serial<BigInt>(in, [](const TetLabels& t) { return tet(t); });
}
std::vector<Surd> sixj_batch(std::span<const TetLabels> in, Jobs jobs) {
  return map_parallel<Surd>(in, jobs, [](const TetLabels& t) { return sixj(t); });
}
std::vector<Surd> sixj_batch_serial(std::span<const TetLabels> in) {
  return map_serial<Surd>(in, [](const TetLabels& t) { return sixj(t); });
}

SuiteResult& SuiteResult::operator+=(const SuiteResult& rhs) {
  passed += rhs.passed;
  failed += rhs.failed;
  for (const auto& f : rhs.failures) {
    if (failures.size() < kMaxFailures) failures.push_back(f);
  }
  return *this;
}

SuiteResult run_checks(const std::string& name, std::size_t n,
                       const std::function<bool(std::size_t, std::string&)>& check, Jobs jobs,
                       bool serial) {
  std::vector<char> ok(n, 0);
  std::vector<std::string> notes(n);
  if (serial) {
    for (std::size_t i = 0; i < n; ++i) ok[i] = check(i, notes[i]) ? 1 : 0;
  } else {
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(jobs))
    for (long i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      ok[k] = check(k, notes[k]) ? 1 : 0;
    }
  }
  SuiteResult r;
  r.name = name;
  for (std::size_t i = 0; i < n; ++i) {
    if (ok[i]) {
      ++r.passed;
    } else {
      ++r.failed;
      if (r.failures.size() < kMaxFailures) r.failures.push_back(notes[i]);
    }
  }
  return r;
}

SuiteResult duality_exhaustive_suite(const SuiteOptions& o) {
  const std::size_t side = static_cast<std::size_t>(o.max) + 1;
  const std::size_t n = side * side * side * side;
  return run_checks(
      "duality-exhaustive", n,
      [&](std::size_t i, std::string& note) {
        const int a = static_cast<int>(i % side), b = static_cast<int>(i / side % side);
        const int c = static_cast<int>(i / side / side % side), d = static_cast<int>(i / side / side / side);
        if (verify_duality(a, b, c, d).equal) return true;
        note = show({a, b, c, d});
        return false;
      },
      o.jobs, o.serial);
}

SuiteResult duality_random_suite(const SuiteOptions& o) {
  InstanceGenerator gen(o.seed);
  std::vector<std::array<int, 4>> quads(o.count);
  for (auto& q : quads) q = {gen.label(o.max), gen.label(o.max), gen.label(o.max), gen.label(o.max)};
  return run_checks(
      "duality", quads.size(),
      [&](std::size_t i, std::string& note) {
        const auto& [a, b, c, d] = quads[i];
        if (verify_duality(a, b, c, d).equal) return true;
        note = show({a, b, c, d});
        return false;
      },
      o.jobs, o.serial);
}

SuiteResult pascal_suite(const SuiteOptions& o) {
  const auto triples = admissible_triples(o.max);
  return run_checks(
      "pascal", triples.size(),
      [&](std::size_t i, std::string& note) {
        const auto [a, b, c] = triples[i];
        if (!is_admissible_triple(a - 1, b, c - 1) || !is_admissible_triple(a - 1, b - 1, c) ||
            !is_admissible_triple(a, b - 1, c - 1)) {
          return true;  // relation not applicable
        }
        const int sigma = (a + b + c) / 2;
        const BigInt lhs = gon3(a - 1, b, c - 1) + gon3(a - 1, b - 1, c) + gon3(a, b - 1, c - 1);
        if (BigRational(lhs) == make_rational(gon3(a, b, c) * sigma, BigInt(sigma + 1))) return true;
        note = show({a, b, c});
        return false;
      },
      o.jobs, o.serial);
}

SuiteResult beta_suite(const SuiteOptions& o) {
  const auto triples = admissible_triples(o.max);
  return run_checks(
      "beta", triples.size(),
      [&](std::size_t i, std::string& note) {
        const auto [a, b, c] = triples[i];
        const int sigma = (a + b + c) / 2;
        const BigRational lhs = make_rational(1, gon3(a + 1, b, c + 1)) +
                                make_rational(1, gon3(a + 1, b + 1, c)) +
                                make_rational(1, gon3(a, b + 1, c + 1));
        const BigRational rhs = make_rational(BigInt(sigma + 3), gon3(a, b, c) * (sigma + 2));
        if (lhs == rhs) return true;
        note = show({a, b, c});
        return false;
      },
      o.jobs, o.serial);
}

SuiteResult divisibility_suite(const SuiteOptions& o) {
  const auto triples = admissible_triples(o.max);
  return run_checks(
      "divisibility", triples.size(),
      [&](std::size_t i, std::string& note) {
        const auto [a, b, c] = triples[i];
        const BigInt g = gon3(a, b, c);
        for (int x : {a, b, c}) {
          if (!mpz_divisible_ui_p(g.get_mpz_t(), static_cast<unsigned long>(x + 1))) {
            note = show({a, b, c});
            return false;
          }
        }
        return true;
      },
      o.jobs, o.serial);
}

namespace {

std::vector<TetLabels> random_tets(const SuiteOptions& o) {
  InstanceGenerator gen(o.seed);
  std::vector<TetLabels> out(o.count);
  for (auto& t : out) t = gen.tet(o.max);
  return out;
}

}  // namespace

SuiteResult regge_suite(const SuiteOptions& o) {
  const auto tets = random_tets(o);
  return run_checks(
      "regge", tets.size(),
      [&](std::size_t i, std::string& note) {
        const BigInt v = tet(tets[i]);
        for (const auto& img : regge_images(tets[i])) {
          if (tet(img) != v) {
            note = show(tets[i]);
            return false;
          }
        }
        return true;
      },
      o.jobs, o.serial);
}

SuiteResult symmetry_suite(const SuiteOptions& o) {
  const auto tets = random_tets(o);
  return run_checks(
      "tet-symmetry", tets.size(),
      [&](std::size_t i, std::string& note) {
        const BigInt v = tet(canonical_tet(tets[i]));
        for (const auto& img : tet_symmetry_images(tets[i])) {
          if (tet(img) != v) {
            note = show(tets[i]);
            return false;
          }
        }
        return true;
      },
      o.jobs, o.serial);
}

SuiteResult biunitarity_suite(const SuiteOptions& o) {
  const auto tets = random_tets(o);
  return run_checks(
      "biunitarity", tets.size(),
      [&](std::size_t i, std::string& note) {
        const FreeSlot slot = i % 2 == 0 ? FreeSlot::B : FreeSlot::E;
        if (biunitarity_sum(tets[i], slot).sum == 1) return true;
        note = show(tets[i]) + (slot == FreeSlot::B ? " slot b" : " slot e");
        return false;
      },
      o.jobs, o.serial);
}

SuiteResult pentagon_suite(const SuiteOptions& o) {
  InstanceGenerator gen(o.seed);
  std::vector<Bipyramid> bps(o.count);
  for (auto& bp : bps) bp = gen.bipyramid(o.max);
  return run_checks(
      "pentagon", bps.size(),
      [&](std::size_t i, std::string& note) {
        if (verify_pentagon(bps[i]).equal) return true;
        const auto& l = bps[i].labels;
        note = show({l[0], l[1], l[2], l[3], l[4], l[5], l[6], l[7], l[8]});
        return false;
      },
      o.jobs, o.serial);
}

SuiteResult barycentric_suite(const SuiteOptions& o) {
  const auto tets = random_tets(o);
  return run_checks(
      "barycentric", tets.size(),
      [&](std::size_t i, std::string& note) {
        const BigRational expected = tet(tets[i]);
        const int top = barycentric_delta_max(tets[i]) + 2;
        for (int delta = 0; delta <= top; ++delta) {
          const BigRational p = barycentric_P(tets[i], delta).total;
          if (p != expected * (delta + 1) * (delta + 1)) {
            note = show(tets[i]) + " delta=" + std::to_string(delta);
            return false;
          }
        }
        return true;
      },
      o.jobs, o.serial);
}

SuiteResult spinnet_suite(const SuiteOptions& o) {
  InstanceGenerator gen(o.seed);
  std::vector<ColoredGraph> graphs;
  for (std::size_t i = 0; i < o.count; ++i) {
    if (i % 2 == 0) {
      graphs.emplace_back(ThetaGraph{gen.triple(o.max)});
    } else {
      graphs.emplace_back(TetraGraph{gen.tet(o.max)});
    }
  }
  return run_checks(
      "spinnet", graphs.size(),
      [&](std::size_t i, std::string& note) {
        const auto& g = graphs[i];
        const GraphFactors f = factors(g);
        const BigInt z = std::get<BigInt>(evaluate(g, Prescription::Z));
        const BigInt p = std::get<BigInt>(evaluate(g, Prescription::P));
        const BigRational k = std::get<BigRational>(evaluate(g, Prescription::K));
        const Surd u = std::get<Surd>(evaluate(g, Prescription::U));
        bool ok = p == f.j * z && k == make_rational(f.j * z, f.e) &&
                  (u * f.n).squared() == BigRational(z * z);
        if (const auto* t = std::get_if<TetraGraph>(&g)) {
          ok = ok && z == tet(t->labels) && k == tet_k(t->labels) && u == sixj(t->labels);
        } else {
          const Triple& c = std::get<ThetaGraph>(g).colors;
          ok = ok && k == theta_k(c.a, c.b, c.c);
        }
        if (!ok) note = "graph #" + std::to_string(i);
        return ok;
      },
      o.jobs, o.serial);
}

SuiteResult q_duality_suite(const SuiteOptions& o) {
  const std::size_t side = static_cast<std::size_t>(o.max) + 1;
  const std::size_t n = side * side * side * side;
  return run_checks(
      "q-duality", n,
      [&](std::size_t i, std::string& note) {
        const int a = static_cast<int>(i % side), b = static_cast<int>(i / side % side);
        const int c = static_cast<int>(i / side / side % side), d = static_cast<int>(i / side / side / side);
        if (verify_q_duality(a, b, c, d).equal) return true;
        note = show({a, b, c, d});
        return false;
      },
      o.jobs, o.serial);
}

SuiteResult q_specialization_suite(const SuiteOptions& o) {
  const auto tets = random_tets(o);
  return run_checks(
      "q-specialization", tets.size(),
      [&](std::size_t i, std::string& note) {
        const TetLabels& t = tets[i];
        bool ok = tet_q(t).eval_at_one() == tet(t) && tet_k_q(t).eval_at_one() == tet_k(t);
        for (const Triple& f : t.faces()) ok = ok && gon_q(f.a, f.b, f.c).eval_at_one() == gon3(f);
        const std::vector<int> quad{t.a(), t.b(), t.d(), t.e()};
        ok = ok && gon_q_poly(quad).eval_at_one() == gon_poly(quad);
        if (!ok) note = show(t);
        return ok;
      },
      o.jobs, o.serial);
}

std::vector<std::string> suite_names() {
  return {"duality", "duality-exhaustive", "pascal", "beta", "divisibility", "regge", "symmetry",
          "biunitarity", "pentagon", "barycentric", "spinnet", "q-duality", "q-specialization"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "duality") return duality_random_suite(o);
  if (name == "duality-exhaustive") return duality_exhaustive_suite(o);
  if (name == "pascal") return pascal_suite(o);
  if (name == "beta") return beta_suite(o);
  if (name == "divisibility") return divisibility_suite(o);
  if (name == "regge") return regge_suite(o);
  if (name == "symmetry") return symmetry_suite(o);
  if (name == "biunitarity") return biunitarity_suite(o);
  if (name == "pentagon") return pentagon_suite(o);
  if (name == "barycentric") return barycentric_suite(o);
  if (name == "spinnet") return spinnet_suite(o);
  if (name == "q-duality") return q_duality_suite(o);
  if (name == "q-specialization") return q_specialization_suite(o);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace gontet
