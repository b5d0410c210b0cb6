#include <algorithm>
#include <chrono>
#include <cstdio>

#include "cli/context.hpp"
#include "gontet/batch.hpp"
#include "gontet/gon.hpp"
#include "gontet/random.hpp"
#include "gontet/tet.hpp"

namespace gontet::cli {

namespace {

struct Timing {
  double median_ms = 0, min_ms = 0;
};

template <class Fn>
Timing time_runs(int runs, Fn fn) {
  std::vector<double> ms;
  for (int r = 0; r < runs; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(ms.begin(), ms.end());
  return {ms[ms.size() / 2], ms.front()};
}

std::string ms_text(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace

void register_bench(CLI::App& app, Actions& actions) {
  auto name = std::make_shared<std::string>();
  auto runs = std::make_shared<int>(21);
  auto count = std::make_shared<std::size_t>(10000);
  auto max = std::make_shared<int>(-1);
  CLI::App* sub = app.add_subcommand("bench", "Wall-time benchmarks (median of repeated runs)");
  sub->add_option("case", *name, "Benchmark case")
      ->required()
      ->check(CLI::IsMember({"tet-speed", "gon-batch", "sixj-batch"}));
  sub->add_option("--runs", *runs, "Repetitions")->check(CLI::Range(1, 100000));
  sub->add_option("--count", *count, "Instances for sixj-batch");
  sub->add_option("--max", *max, "Largest label");

  actions[sub] = [name, runs, count, max](Context& ctx) {
    Json j{{"case", *name}, {"runs", *runs}, {"jobs", ctx.jobs}};
    if (*name == "tet-speed") {
      const TetLabels t{{50, 30, 76}, {92, 48, 84}};
      BigInt v;
      const Timing tm = time_runs(*runs, [&] { v = tet(t); });
      j["median_ms"] = ms_text(tm.median_ms);
      j["min_ms"] = ms_text(tm.min_ms);
      j["value"] = to_string(v);
    } else if (*name == "gon-batch") {
      const int m = *max < 0 ? 40 : *max;
      std::vector<Triple> in;
      for (int a = 0; a <= m; ++a) {
        for (int b = 0; b <= m; ++b) {
          for (int c = 0; c <= m; ++c) {
            if (is_admissible_triple(a, b, c)) in.push_back({a, b, c});
          }
        }
      }
      std::vector<BigInt> out;
      const Timing tm = time_runs(*runs, [&] {
        gon3_memo_clear();
        out = gon3_batch(in, Jobs{ctx.jobs});
      });
      BigInt sum = 0;
      for (const auto& v : out) sum += v;
      j["median_ms"] = ms_text(tm.median_ms);
      j["min_ms"] = ms_text(tm.min_ms);
      j["count"] = in.size();
      j["checksum"] = to_string(sum);
    } else {
      const int m = *max < 0 ? 50 : *max;
      InstanceGenerator gen(ctx.seed);
      std::vector<TetLabels> in;
      for (std::size_t i = 0; i < *count; ++i) in.push_back(gen.tet(m));
      std::vector<Surd> out;
      const Timing tm = time_runs(*runs, [&] { out = sixj_batch(in, Jobs{ctx.jobs}); });
      BigRational sum = 0;
      for (const auto& s : out) sum += s.squared();
      j["median_ms"] = ms_text(tm.median_ms);
      j["min_ms"] = ms_text(tm.min_ms);
      j["count"] = in.size();
      j["checksum"] = to_string(sum);
    }
    ctx.emit(j);
  };
}

}  // namespace gontet::cli
