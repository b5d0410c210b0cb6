#include "cli/context.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>

#include "gontet/errors.hpp"
#include "gontet/gon.hpp"
#include "gontet/tet.hpp"

namespace gontet::cli {

namespace {

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string plain_field(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += x.is_array() ? " " : ",";
      s += plain_field(x);
    }
    return s;
  }
  return v.dump();
}

Json as_object(const Json& record) { return record.is_object() ? record : Json{{"value", record}}; }

}  // namespace

OptRoot Context::root() const {
  if (!kappa) return std::nullopt;
  return RootOfUnity(*kappa);
}

RootOfUnity Context::require_root() const {
  if (!kappa) throw UsageError("this verb needs --kappa");
  return RootOfUnity(*kappa);
}

void Context::require(bool admissible, const std::string& what) const {
  if (strict && !admissible) throw DomainError("not admissible: " + what);
}

void Context::emit(const Json& record) const {
  const Json obj = as_object(record);
  switch (format) {
    case Format::Json:
      *out << obj.dump() << '\n';
      break;
    case Format::Csv: {
      std::string header, row;
      for (const auto& [k, v] : obj.items()) {
        if (!header.empty()) {
          header += ',';
          row += ',';
        }
        header += k;
        row += csv_field(v);
      }
      *out << header << '\n' << row << '\n';
      break;
    }
    case Format::Plain:
      if (obj.size() == 1) {
        *out << plain_field(obj.begin().value()) << '\n';
      } else {
        for (const auto& [k, v] : obj.items()) *out << k << ": " << plain_field(v) << '\n';
      }
      break;
  }
}

void Context::emit_table(const std::vector<Json>& rows) const {
  if (format == Format::Csv && !rows.empty()) {
    std::string header;
    for (const auto& [k, v] : rows.front().items()) header += (header.empty() ? "" : ",") + k;
    *out << header << '\n';
  }
  for (const Json& r : rows) {
    switch (format) {
      case Format::Json:
        *out << r.dump() << '\n';
        break;
      case Format::Csv: {
        std::string line;
        for (const auto& [k, v] : r.items()) line += (line.empty() ? "" : ",") + csv_field(v);
        *out << line << '\n';
        break;
      }
      case Format::Plain: {
        std::string line;
        for (const auto& [k, v] : r.items()) line += (line.empty() ? "" : " ") + plain_field(v);
        *out << line << '\n';
        break;
      }
    }
  }
}

std::vector<std::string> Context::cached(CacheFile::Kind kind, const std::vector<std::string>& keys,
                                         const std::function<std::string(std::size_t)>& compute) const {
  const auto n = static_cast<std::ptrdiff_t>(keys.size());
  std::vector<std::string> values(keys.size());
  std::vector<char> fresh(keys.size(), 0);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const std::string* hit = cache ? cache->find(kind, keys[u]) : nullptr;
    if (hit) {
      values[u] = *hit;
    } else {
      values[u] = compute(u);
      fresh[u] = 1;
    }
  }
  if (cache) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (fresh[i]) cache->put(kind, keys[i], values[i]);
    }
  }
  return values;
}

std::string Context::cached(CacheFile::Kind kind, const std::string& key,
                            const std::function<std::string()>& compute) const {
  if (cache) {
    if (const std::string* hit = cache->find(kind, key)) return *hit;
  }
  std::string v = compute();
  if (cache) cache->put(kind, key, v);
  return v;
}

std::vector<int> parse_labels(const std::vector<std::string>& args) {
  std::string text;
  for (const auto& a : args) text += a + ' ';
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '[' || c == ']' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("labels must be non-negative integers, got '" + text.substr(i, text.find(' ', i) - i) + "'");
    }
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j - i > 6) throw UsageError("label too large: " + text.substr(i, j - i));
    out.push_back(std::stoi(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::vector<int> parse_labels(const std::vector<std::string>& args, std::size_t count, const char* verb) {
  auto xs = parse_labels(args);
  if (xs.size() != count) {
    throw UsageError(std::string(verb) + " expects " + std::to_string(count) + " labels, got " +
                     std::to_string(xs.size()));
  }
  return xs;
}

TetLabels to_tet(const std::vector<int>& xs) { return {{xs[0], xs[1], xs[2]}, {xs[3], xs[4], xs[5]}}; }

Bipyramid to_bipyramid(const std::vector<int>& xs) {
  Bipyramid bp;
  std::copy(xs.begin(), xs.end(), bp.labels.begin());
  return bp;
}

std::string triple_key(Triple t) {
  std::array<int, 3> s{t.a, t.b, t.c};
  std::sort(s.begin(), s.end());
  return std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]);
}

std::string tet_key(const TetLabels& t) {
  std::string key;
  for (int x : canonical_tet(t).flat()) key += (key.empty() ? "" : ",") + std::to_string(x);
  return key;
}

std::string gon3_text(const Context& ctx, const Triple& t) {
  return ctx.cached(CacheFile::Kind::Gon3, triple_key(t), [&] { return to_string(gon3(t)); });
}

std::string theta_k_text(const Context& ctx, const Triple& t) {
  return ctx.cached(CacheFile::Kind::ThetaK, triple_key(t), [&] { return to_string(theta_k(t.a, t.b, t.c)); });
}

std::string tet_text(const Context& ctx, const TetLabels& t) {
  return ctx.cached(CacheFile::Kind::Tet, tet_key(t), [&] { return to_string(tet(t)); });
}

std::string tet_k_text(const Context&, const TetLabels& t) { return to_string(tet_k(t)); }

Json sixj_json(const Context& ctx, const TetLabels& t) {
  return Json::parse(ctx.cached(CacheFile::Kind::Sixj, tet_key(t), [&] { return to_json(sixj(t)).dump(); }));
}

}  // namespace gontet::cli
