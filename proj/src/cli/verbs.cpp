#include <cstdio>
#include <memory>

#include "cli/context.hpp"
#include "gontet/batch.hpp"
#include "gontet/errors.hpp"
#include "gontet/gon.hpp"
#include "gontet/hilbert.hpp"
#include "gontet/identities.hpp"
#include "gontet/quantum.hpp"
#include "gontet/spinnet.hpp"
#include "gontet/tet.hpp"

namespace gontet::cli {

namespace {

std::string real_text(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

// Positional label list shared by most verbs.
struct Labels {
  std::vector<std::string> raw;
};

CLI::App* verb(CLI::App& app, const char* name, const char* help, Labels& labels, const char* what) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("labels", labels.raw, what)->required();
  return sub;
}

std::string describe(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// Doubled spin from "j", "j/2" or "j.5".
int doubled_spin(const std::string& text) {
  BigRational j;
  try {
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      const std::string frac = text.substr(dot + 1);
      if (frac != "5" && frac != "0") throw UsageError("spin must be a multiple of 1/2: " + text);
      j = parse_rational(text.substr(0, dot)) + (frac == "5" ? BigRational(1, 2) : BigRational(0));
    } else {
      j = parse_rational(text);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("not a spin: " + text);
  }
  const BigRational twice = 2 * j;
  if (twice.get_den() != 1 || twice < 0) throw UsageError("spin must be a non-negative multiple of 1/2: " + text);
  return static_cast<int>(twice.get_num().get_si());
}

Json laurent_record(const LaurentPoly& p, const OptRoot& root) {
  Json j;
  j["value"] = to_json(p);
  j["at_one"] = to_string(p.eval_at_one());
  if (root) j["at_root"] = to_json(eval_at_root(p, *root));
  return j;
}

Json bipyramid_json(const Bipyramid& bp) { return Json(std::vector<int>(bp.labels.begin(), bp.labels.end())); }

}  // namespace

void register_verbs(CLI::App& app, Actions& actions) {
  // gon
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "gon", "gon of a triangle or polygon", *labels, "edge labels");
    actions[sub] = [labels](Context& ctx) {
      const auto xs = parse_labels(labels->raw);
      if (xs.empty()) throw UsageError("gon needs at least one label");
      std::string value;
      if (xs.size() == 3) {
        ctx.require(is_admissible_triple(xs[0], xs[1], xs[2]), describe(xs));
        value = gon3_text(ctx, {xs[0], xs[1], xs[2]});
      } else {
        const BigInt v = gon_poly(xs);
        ctx.require(v != 0, describe(xs));
        value = to_string(v);
      }
      ctx.emit(Json{{"value", value}});
    };
  }
  // theta-k
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "theta-k", "Kauffman theta evaluation", *labels, "a b c");
    actions[sub] = [labels](Context& ctx) {
      const auto xs = parse_labels(labels->raw, 3, "theta-k");
      ctx.require(is_admissible_triple(xs[0], xs[1], xs[2]), describe(xs));
      ctx.emit(Json{{"value", theta_k_text(ctx, {xs[0], xs[1], xs[2]})}});
    };
  }
  // clebsch0
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "clebsch0", "Clebsch-Gordan coefficient <j1 0 j2 0 | j 0>", *labels, "j1 j2 j");
    actions[sub] = [labels](Context& ctx) {
      if (labels->raw.size() != 3) throw UsageError("clebsch0 expects j1 j2 j");
      const int a = doubled_spin(labels->raw[0]), b = doubled_spin(labels->raw[1]), c = doubled_spin(labels->raw[2]);
      const Surd s = special_clebsch(a, b, c);
      ctx.require(!s.is_zero(), "spins " + labels->raw[0] + " " + labels->raw[1] + " " + labels->raw[2]);
      Json j = to_json(s);
      j["approx"] = real_text(s.to_double());
      ctx.emit(j);
    };
  }
  // gon-asym
  {
    auto labels = std::make_shared<Labels>();
    auto k = std::make_shared<int>(10);
    auto kind = std::make_shared<std::string>("gon");
    CLI::App* sub = verb(app, "gon-asym", "Stirling estimate of gon(ka,kb,kc) or theta_k(ka,kb,kc)", *labels, "a b c");
    sub->add_option("-k,--k", *k, "Scale factor")->check(CLI::PositiveNumber);
    sub->add_option("--of", *kind, "Which symbol")->check(CLI::IsMember({"gon", "theta-k"}));
    actions[sub] = [labels, k, kind](Context& ctx) {
      const auto xs = parse_labels(labels->raw, 3, "gon-asym");
      const int a = xs[0] * *k, b = xs[1] * *k, c = xs[2] * *k;
      const bool theta = *kind == "theta-k";
      const LogValue est = theta ? theta_k_asym(xs[0], xs[1], xs[2], *k) : gon_asym(xs[0], xs[1], xs[2], *k);
      const BigRational exact = theta ? theta_k(a, b, c) : BigRational(gon3(a, b, c));
      Json j;
      j["k"] = *k;
      j["estimate"] = est.to_string();
      j["exact"] = to_string(exact);
      j["relative_error"] = real_text(relative_error(est, exact));
      ctx.emit(j);
    };
  }
  // tet, tet-k, sixj
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "tet", "tet of a tetrahedron ((a,b,c),(d,e,f))", *labels, "a b c d e f");
    actions[sub] = [labels](Context& ctx) {
      const TetLabels t = to_tet(parse_labels(labels->raw, 6, "tet"));
      ctx.require(is_admissible_tet(t), describe(parse_labels(labels->raw)));
      ctx.emit(Json{{"value", tet_text(ctx, t)}});
    };
  }
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "tet-k", "Kauffman tetrahedral evaluation TET", *labels, "a b c d e f");
    actions[sub] = [labels](Context& ctx) {
      const TetLabels t = to_tet(parse_labels(labels->raw, 6, "tet-k"));
      ctx.require(is_admissible_tet(t), describe(parse_labels(labels->raw)));
      ctx.emit(Json{{"value", tet_k_text(ctx, t)}});
    };
  }
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "sixj", "6j symbol as coeff*sqrt(radicand)", *labels, "a b c d e f");
    actions[sub] = [labels](Context& ctx) {
      const TetLabels t = to_tet(parse_labels(labels->raw, 6, "sixj"));
      ctx.require(is_admissible_tet(t), describe(parse_labels(labels->raw)));
      ctx.emit(sixj_json(ctx, t));
    };
  }
  // tet-regular
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "tet-regular", "tet of the regular tetrahedron with edge 2n", *labels, "2n");
    actions[sub] = [labels](Context& ctx) {
      const auto xs = parse_labels(labels->raw, 1, "tet-regular");
      ctx.emit(Json{{"value", to_string(tet_regular(xs[0]))}});
    };
  }
  // regge
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "regge", "Regge images and their tet values", *labels, "a b c d e f");
    actions[sub] = [labels](Context& ctx) {
      const TetLabels t = to_tet(parse_labels(labels->raw, 6, "regge"));
      if (!is_admissible_tet(t)) {
        ctx.require(false, describe(parse_labels(labels->raw)));
        throw DomainError("regge needs an admissible tetrahedron");
      }
      const BigInt v = tet(t);
      Json images = Json::array();
      bool invariant = true;
      for (const TetLabels& img : regge_images(t)) {
        const BigInt w = tet(img);
        invariant = invariant && w == v;
        images.push_back(Json{{"labels", to_json(img)}, {"tet", to_string(w)}});
      }
      ctx.emit(Json{{"tet", to_string(v)}, {"images", images}, {"invariant", invariant}});
    };
  }
  // biunit
  {
    auto labels = std::make_shared<Labels>();
    auto slot = std::make_shared<std::string>("b");
    CLI::App* sub = verb(app, "biunit", "Bi-unitarity sum over the free slot", *labels,
                         "five fixed labels: a c d e f (slot b) or a b c d f (slot e)");
    sub->add_option("--slot", *slot, "Free slot")->check(CLI::IsMember({"b", "e"}));
    actions[sub] = [labels, slot](Context& ctx) {
      const auto xs = parse_labels(labels->raw, 5, "biunit");
      const bool b = *slot == "b";
      const TetLabels t = b ? TetLabels{{xs[0], 0, xs[1]}, {xs[2], xs[3], xs[4]}}
                            : TetLabels{{xs[0], xs[1], xs[2]}, {xs[3], 0, xs[4]}};
      const BiunitarityResult r = biunitarity_sum(t, b ? FreeSlot::B : FreeSlot::E);
      ctx.require(!r.range.empty(), describe(xs));
      ctx.emit(Json{{"slot", *slot}, {"sum", to_string(r.sum)}, {"range", r.range}});
    };
  }
  // duality
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "duality", "s/t/u channel sums of a quadrilateral", *labels, "a b c d");
    actions[sub] = [labels](Context& ctx) {
      const auto xs = parse_labels(labels->raw, 4, "duality");
      const IdentityReport r = verify_duality(xs[0], xs[1], xs[2], xs[3]);
      ctx.require(!r.sides.empty() && r.sides.front().second != 0, describe(xs));
      ctx.emit(to_json(r));
    };
  }
  // hed
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "hed", "Bipyramid hed1 and hed2", *labels, "a b c d e f g h k");
    actions[sub] = [labels](Context& ctx) {
      const Bipyramid bp = to_bipyramid(parse_labels(labels->raw, 9, "hed"));
      if (!bp.is_admissible()) {
        ctx.require(false, describe(parse_labels(labels->raw)));
        ctx.emit(Json{{"hed1", "0"}, {"hed2", "0"}, {"equal", true}});
        return;
      }
      const IdentityReport r = verify_pentagon(bp);
      Json j = to_json(r);
      j["labels"] = bipyramid_json(bp);
      ctx.emit(j);
    };
  }
  // barycentric
  {
    auto labels = std::make_shared<Labels>();
    auto delta = std::make_shared<int>(0);
    CLI::App* sub = verb(app, "barycentric", "Barycentric subdivision sum P(delta)", *labels, "a b c A B C");
    sub->add_option("--delta", *delta, "Fixed internal edge")->check(CLI::NonNegativeNumber);
    actions[sub] = [labels, delta](Context& ctx) {
      const TetLabels t = to_tet(parse_labels(labels->raw, 6, "barycentric"));
      if (!is_admissible_tet(t)) {
        ctx.require(false, describe(parse_labels(labels->raw)));
        throw DomainError("barycentric needs an admissible tetrahedron");
      }
      const BarycentricResult r = barycentric_P(t, *delta);
      Json terms = Json::array();
      for (const auto& x : r.terms) {
        terms.push_back(Json::array({x.alpha, x.beta, x.gamma, to_string(x.contribution)}));
      }
      Json j;
      j["delta"] = *delta;
      j["count"] = r.terms.size();
      j["total"] = to_string(r.total);
      j["normalized"] = to_string(r.total / ((*delta + 1) * (*delta + 1)));
      j["tet"] = to_string(tet(t));
      j["terms"] = std::move(terms);
      ctx.emit(j);
    };
  }
  // cube
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "cube", "cube function: one label for all edges, or 12 edges", *labels,
                         "n, or edges 01 13 32 20 45 57 76 64 04 15 26 37");
    actions[sub] = [labels](Context& ctx) {
      const auto xs = parse_labels(labels->raw);
      CubeLabels edges;
      if (xs.size() == 1) {
        edges = CubeLabels::uniform(xs[0]);
      } else if (xs.size() == 12) {
        std::copy(xs.begin(), xs.end(), edges.edges.begin());
      } else {
        throw UsageError("cube expects 1 or 12 labels");
      }
      const CubeResult r = cube(edges);
      ctx.require(r.assignments > 0, describe(xs));
      ctx.emit(Json{{"value", to_string(r.value)}, {"assignments", r.assignments}});
    };
  }
  // dyson-ct
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "dyson-ct", "Constant-term oracle for gon(m+n, n+p, p+m)", *labels, "m n p");
    actions[sub] = [labels](Context& ctx) {
      const auto xs = parse_labels(labels->raw, 3, "dyson-ct");
      ctx.emit(Json{{"value", to_string(dyson_ct(xs[0], xs[1], xs[2]))},
                    {"gon", to_string(gon3(xs[0] + xs[1], xs[1] + xs[2], xs[2] + xs[0]))}});
    };
  }
  // hilbert-inv, hilbert-trace
  {
    auto labels = std::make_shared<Labels>();
    auto shift = std::make_shared<int>(0);
    auto q = std::make_shared<bool>(false);
    CLI::App* sub = verb(app, "hilbert-inv", "Exact inverse of the shifted Hilbert matrix H(n,s)", *labels, "n");
    sub->add_option("-s,--shift", *shift, "Shift s")->check(CLI::NonNegativeNumber);
    sub->add_flag("--q", *q, "Use the q-Hilbert matrix");
    actions[sub] = [labels, shift, q](Context& ctx) {
      const int n = parse_labels(labels->raw, 1, "hilbert-inv")[0];
      if (n < 1) throw UsageError("hilbert-inv needs n >= 1");
      Json j{{"n", n}, {"s", *shift}};
      j["inverse"] = *q ? to_json(q_invert(q_hilbert(n, *shift))) : to_json(invert_exact(hilbert(n, *shift)));
      ctx.emit(j);
    };
  }
  {
    auto labels = std::make_shared<Labels>();
    auto shift = std::make_shared<int>(0);
    auto q = std::make_shared<bool>(false);
    CLI::App* sub = verb(app, "hilbert-trace", "Trace of the inverse shifted Hilbert matrix", *labels, "n");
    sub->add_option("-s,--shift", *shift, "Shift s")->check(CLI::NonNegativeNumber);
    sub->add_flag("--q", *q, "Use the q-Hilbert matrix");
    actions[sub] = [labels, shift, q](Context& ctx) {
      const int n = parse_labels(labels->raw, 1, "hilbert-trace")[0];
      if (n < 1) throw UsageError("hilbert-trace needs n >= 1");
      if (!*q) {
        ctx.emit(Json{{"value", to_string(trace_inverse(n, *shift))}});
        return;
      }
      const RatFunc t = q_trace_inverse(n, *shift);
      Json j;
      j["value"] = t.is_laurent() ? to_json(t.to_laurent()) : to_json(t);
      j["at_one"] = to_string(t.eval_at_one());
      ctx.emit(j);
    };
  }
  // hilbert-rowsum
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "hilbert-rowsum", "gon(a,b,c) as a row sum of an inverse Hilbert matrix", *labels,
                         "a b c");
    actions[sub] = [labels](Context& ctx) {
      const auto xs = parse_labels(labels->raw, 3, "hilbert-rowsum");
      if (!is_admissible_triple(xs[0], xs[1], xs[2])) {
        ctx.require(false, describe(xs));
        ctx.emit(Json{{"value", "0"}});
        return;
      }
      const RowSum r = rowsum_gon(xs[0], xs[1], xs[2]);
      ctx.emit(Json{{"value", to_string(r.value)}, {"row_sum", to_string(r.row_sum)}, {"n", r.n}, {"s", r.s},
                    {"row", r.row}});
    };
  }
  // gon-q, tet-q, sixj-q
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "gon-q", "q-deformed gon of a triangle or polygon", *labels, "edge labels");
    actions[sub] = [labels](Context& ctx) {
      const auto xs = parse_labels(labels->raw);
      if (xs.empty()) throw UsageError("gon-q needs at least one label");
      const OptRoot root = ctx.root();
      const LaurentPoly p = xs.size() == 3 ? gon_q(xs[0], xs[1], xs[2], root) : gon_q_poly(xs, root);
      ctx.require(!p.is_zero(), describe(xs));
      ctx.emit(laurent_record(p, root));
    };
  }
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "tet-q", "q-deformed tet", *labels, "a b c d e f");
    actions[sub] = [labels](Context& ctx) {
      const TetLabels t = to_tet(parse_labels(labels->raw, 6, "tet-q"));
      const OptRoot root = ctx.root();
      const bool ok = root ? is_q_admissible_tet(t, *root) : is_admissible_tet(t);
      ctx.require(ok, describe(parse_labels(labels->raw)));
      const LaurentPoly p = tet_q(t, root);
      Json j;
      j["value"] = to_json(p);
      j["at_one"] = to_string(p.eval_at_one());
      if (root && ok) j["at_root"] = real_text(tet_q_at_root(t, *root));
      ctx.emit(j);
    };
  }
  {
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = verb(app, "sixj-q", "q-deformed 6j symbol at q = exp(i pi / kappa)", *labels, "a b c d e f");
    actions[sub] = [labels](Context& ctx) {
      const TetLabels t = to_tet(parse_labels(labels->raw, 6, "sixj-q"));
      const RootOfUnity root = ctx.require_root();
      ctx.require(is_q_admissible_tet(t, root), describe(parse_labels(labels->raw)));
      ctx.emit(Json{{"value", real_text(sixj_q(t, root))}});
    };
  }
  // verify
  {
    auto name = std::make_shared<std::string>();
    auto max = std::make_shared<int>(20);
    auto count = std::make_shared<std::size_t>(100);
    auto serial = std::make_shared<bool>(false);
    CLI::App* sub = app.add_subcommand("verify", "Run an identity suite");
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    sub->add_option("suite", *name, "Suite name")->required()->check(CLI::IsMember(names));
    sub->add_option("--max", *max, "Largest label")->check(CLI::NonNegativeNumber);
    sub->add_option("--count", *count, "Random instances");
    sub->add_flag("--serial", *serial, "Use the serial reference path");
    actions[sub] = [name, max, count, serial](Context& ctx) {
      SuiteOptions o;
      o.max = *max;
      o.count = *count;
      o.seed = ctx.seed;
      o.jobs = Jobs{ctx.jobs};
      o.serial = *serial;
      std::size_t failed = 0;
      if (*name == "all") {
        std::vector<Json> rows;
        for (const std::string& s : suite_names()) {
          const SuiteResult r = run_suite(s, o);
          failed += r.failed;
          Json row{{"suite", s}};
          row.update(to_json(r));
          rows.push_back(std::move(row));
        }
        ctx.emit_table(rows);
      } else {
        const SuiteResult r = run_suite(*name, o);
        failed = r.failed;
        ctx.emit(to_json(r));
      }
      if (failed > 0) throw DomainError(std::to_string(failed) + " checks failed");
    };
  }
  // verify-q
  {
    auto identity = std::make_shared<std::string>();
    auto labels = std::make_shared<Labels>();
    CLI::App* sub = app.add_subcommand("verify-q", "Check a q-identity exactly, or numerically with --kappa");
    sub->add_option("identity", *identity, "duality (4 labels) or pentagon (9 labels)")
        ->required()
        ->check(CLI::IsMember({"duality", "pentagon"}));
    sub->add_option("labels", labels->raw, "labels")->required();
    actions[sub] = [identity, labels](Context& ctx) {
      QIdentityReport r;
      if (*identity == "duality") {
        const auto xs = parse_labels(labels->raw, 4, "verify-q duality");
        r = verify_q_duality(xs[0], xs[1], xs[2], xs[3], ctx.root());
      } else {
        r = verify_q_pentagon(to_bipyramid(parse_labels(labels->raw, 9, "verify-q pentagon")), ctx.root());
      }
      ctx.emit(to_json(r));
      if (!r.equal) throw DomainError("identity does not hold");
    };
  }
  // spinnet
  {
    auto labels = std::make_shared<Labels>();
    auto graph = std::make_shared<std::string>("theta");
    auto presc = std::make_shared<std::string>("Z");
    CLI::App* sub = verb(app, "spinnet", "Evaluate a loop, theta or tetrahedron spin network", *labels, "colours");
    sub->add_option("--graph", *graph, "Graph")->check(CLI::IsMember({"loop", "theta", "tetra"}));
    sub->add_option("--prescription", *presc, "Evaluation prescription")->check(CLI::IsMember({"Z", "P", "K", "U"}));
    actions[sub] = [labels, graph, presc](Context& ctx) {
      ColoredGraph g;
      if (*graph == "loop") {
        g = LoopGraph{parse_labels(labels->raw, 1, "spinnet --graph loop")[0]};
      } else if (*graph == "theta") {
        const auto xs = parse_labels(labels->raw, 3, "spinnet --graph theta");
        g = ThetaGraph{{xs[0], xs[1], xs[2]}};
      } else {
        g = TetraGraph{to_tet(parse_labels(labels->raw, 6, "spinnet --graph tetra"))};
      }
      if (!is_admissible(g)) {
        ctx.require(false, describe(parse_labels(labels->raw)));
        ctx.emit(Json{{"graph", *graph}, {"prescription", *presc}, {"value", "0"}});
        return;
      }
      const SpinValue v = evaluate(g, parse_prescription(*presc));
      ctx.emit(Json{{"graph", *graph}, {"prescription", *presc}, {"value", to_json(v)}});
    };
  }
}

}  // namespace gontet::cli
