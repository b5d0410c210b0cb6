#include "cli/app.hpp"

#include <algorithm>
#include <memory>

#include "cli/context.hpp"
#include "gontet/errors.hpp"

namespace gontet::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact gon/tet symbols, 6j values, q-deformations and identity checks.", "gontet"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.out = &out;
  std::string format = "json";
  std::string cache_path;
  int kappa = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--kappa", kappa, "Root of unity q = exp(i pi / kappa)")->check(CLI::Range(2, 1000000000));
  app.add_option("--seed", ctx.seed, "Seed for random instances");
  app.add_flag("--strict", ctx.strict, "Treat non-admissible input as an error");
  app.add_option("--cache", cache_path, "Persistent value cache");
  app.add_option("--jobs", ctx.jobs, "Worker threads")->check(CLI::NonNegativeNumber);

  Actions actions;
  register_verbs(app, actions);
  register_table(app, actions);
  register_bench(app, actions);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  ctx.format = format == "csv" ? Format::Csv : (format == "plain" ? Format::Plain : Format::Json);
  if (app.count("--kappa") > 0) ctx.kappa = kappa;

  try {
    std::unique_ptr<CacheFile> cache;
    if (!cache_path.empty()) {
      cache = std::make_unique<CacheFile>(cache_path);
      cache->load();
      cache->seed_gon3_memo();
      ctx.cache = cache.get();
    }
    const CLI::App* verb = app.get_subcommands().front();
    actions.at(verb)(ctx);
    if (cache) {
      cache->absorb_gon3_memo();
      if (cache->dirty()) cache->save();
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const gontet::Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gontet::cli
