#include <omp.h>
#include <algorithm>

#include "cli/context.hpp"
#include "gontet/gon.hpp"
#include "gontet/tet.hpp"

namespace gontet::cli {

namespace {

std::vector<Triple> ordered_triples(int max) {
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

// One representative per symmetry orbit, in lexicographic order of the flat tuple.
std::vector<TetLabels> canonical_tets(int max) {
  std::vector<TetLabels> out;
  for (const Triple& t : ordered_triples(max)) {
    for (int d = 0; d <= max; ++d) {
      for (int f : fusion_range(t.b, d)) {
        if (f > max) continue;
        for (int e : fusion_range(t.a, f)) {
          if (e > max || !is_admissible_triple(t.c, d, e)) continue;
          const TetLabels x{{t.a, t.b, t.c}, {d, e, f}};
          if (canonical_tet(x) == x) out.push_back(x);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const TetLabels& x, const TetLabels& y) { return x.flat() < y.flat(); });
  return out;
}

template <class Fn>
std::vector<std::string> parallel_texts(std::size_t n, int jobs, Fn fn) {
  std::vector<std::string> out(n);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace

void register_table(CLI::App& app, Actions& actions) {
  auto kind = std::make_shared<std::string>();
  auto max = std::make_shared<int>(6);
  auto n_max = std::make_shared<int>(12);
  CLI::App* sub = app.add_subcommand("table", "Bulk values in deterministic order");
  sub->add_option("kind", *kind, "What to tabulate")
      ->required()
      ->check(CLI::IsMember({"gon", "theta-k", "tet", "tet-k", "sixj", "tet-regular"}));
  sub->add_option("--max", *max, "Largest label")->check(CLI::NonNegativeNumber);
  sub->add_option("--n-max", *n_max, "Largest regular edge 2n")->check(CLI::NonNegativeNumber);

  actions[sub] = [kind, max, n_max](Context& ctx) {
    std::vector<Json> rows;
    if (*kind == "gon" || *kind == "theta-k") {
      const auto triples = ordered_triples(*max);
      std::vector<std::string> keys;
      for (const Triple& t : triples) keys.push_back(triple_key(t));
      const bool gon = *kind == "gon";
      const auto values = ctx.cached(gon ? CacheFile::Kind::Gon3 : CacheFile::Kind::ThetaK, keys, [&](std::size_t i) {
        const Triple& t = triples[i];
        return gon ? to_string(gon3(t)) : to_string(theta_k(t.a, t.b, t.c));
      });
      for (std::size_t i = 0; i < triples.size(); ++i) {
        rows.push_back(Json{{"labels", to_json(triples[i])}, {"value", values[i]}});
      }
    } else if (*kind == "tet-regular") {
      for (int x = 0; x <= *n_max; x += 2) rows.push_back(Json{{"two_n", x}, {"value", ""}});
      const auto values = parallel_texts(rows.size(), ctx.jobs, [](std::size_t i) {
        return to_string(tet_regular(2 * static_cast<int>(i)));
      });
      for (std::size_t i = 0; i < rows.size(); ++i) rows[i]["value"] = values[i];
    } else {
      const auto tets = canonical_tets(*max);
      std::vector<std::string> keys;
      for (const TetLabels& t : tets) keys.push_back(tet_key(t));
      std::vector<std::string> values;
      if (*kind == "tet") {
        values = ctx.cached(CacheFile::Kind::Tet, keys, [&](std::size_t i) { return to_string(tet(tets[i])); });
      } else if (*kind == "sixj") {
        values = ctx.cached(CacheFile::Kind::Sixj, keys, [&](std::size_t i) { return to_json(sixj(tets[i])).dump(); });
      } else {
        values = parallel_texts(tets.size(), ctx.jobs, [&](std::size_t i) { return to_string(tet_k(tets[i])); });
      }
      for (std::size_t i = 0; i < tets.size(); ++i) {
        Json row{{"labels", to_json(tets[i])}};
        if (*kind == "sixj") {
          row.update(Json::parse(values[i]));
        } else {
          row["value"] = values[i];
        }
        rows.push_back(std::move(row));
      }
    }
    ctx.emit_table(rows);
  };
}

}  // namespace gontet::cli
