#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gontet/cache.hpp"
#include "gontet/quantum.hpp"
#include "gontet/serialize.hpp"

namespace gontet::cli {

// Bad arguments; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-admissible input under --strict, or a failed verification; exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Plain };

struct Context {
  Format format = Format::Json;
  std::optional<int> kappa;
  std::uint64_t seed = 1;
  bool strict = false;
  int jobs = 0;  // 0: OpenMP default
  std::ostream* out = nullptr;
  CacheFile* cache = nullptr;  // null without --cache

  OptRoot root() const;
  RootOfUnity require_root() const;
  void require(bool admissible, const std::string& what) const;

  void emit(const Json& record) const;
  void emit_table(const std::vector<Json>& rows) const;

  // Looks `keys[i]` up in the cache, computing misses (in parallel) with `compute(i)`.
  std::vector<std::string> cached(CacheFile::Kind kind, const std::vector<std::string>& keys,
                                  const std::function<std::string(std::size_t)>& compute) const;
  std::string cached(CacheFile::Kind kind, const std::string& key,
                     const std::function<std::string()>& compute) const;
};

std::vector<int> parse_labels(const std::vector<std::string>& args);
std::vector<int> parse_labels(const std::vector<std::string>& args, std::size_t count, const char* verb);
TetLabels to_tet(const std::vector<int>& xs);
Bipyramid to_bipyramid(const std::vector<int>& xs);

std::string triple_key(Triple t);
std::string tet_key(const TetLabels& t);

// Shared by single verbs and tables so both produce identical values.
std::string gon3_text(const Context& ctx, const Triple& t);
std::string theta_k_text(const Context& ctx, const Triple& t);
std::string tet_text(const Context& ctx, const TetLabels& t);
std::string tet_k_text(const Context& ctx, const TetLabels& t);
Json sixj_json(const Context& ctx, const TetLabels& t);

using Action = std::function<void(Context&)>;
using Actions = std::map<const CLI::App*, Action>;

void register_verbs(CLI::App& app, Actions& actions);
void register_table(CLI::App& app, Actions& actions);
void register_bench(CLI::App& app, Actions& actions);

}  // namespace gontet::cli
