#include "gontet/cache.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gontet/gon.hpp"
#include "json.hpp"

namespace gontet {

namespace {

constexpr std::array<char, 8> kMagic = {'G', 'O', 'N', 'T', 'E', 'T', 'C', '\0'};

void put_u32(std::ostream& out, std::uint32_t v) {
  const unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

bool get_u32(std::istream& in, std::uint32_t& v) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
  v = static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
      (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
  return true;
}

bool get_bytes(std::istream& in, std::uint32_t n, std::string& out) {
  out.resize(n);
  return n == 0 || static_cast<bool>(in.read(out.data(), n));
}

std::string triple_key(const Triple& t) {
  return std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c);
}

}  // namespace

void CacheFile::load() {
  entries_.clear();
  dirty_ = false;
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;
  const auto corrupt = [&](const char* what) {
    return std::runtime_error("cache file " + path_.string() + ": " + what);
  };
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw corrupt("bad magic");
  std::uint32_t header_len = 0;
  std::string header_text;
  if (!get_u32(in, header_len) || !get_bytes(in, header_len, header_text)) throw corrupt("truncated header");
  const auto header = nlohmann::json::parse(header_text, nullptr, false);
  if (header.is_discarded() || !header.is_object()) throw corrupt("unreadable header");
  if (header.value("version", 0u) != kVersion) return;

  for (;;) {
    char kind = 0;
    if (!in.get(kind)) break;
    std::uint32_t klen = 0, vlen = 0;
    std::string key, value;
    if (!get_u32(in, klen) || !get_bytes(in, klen, key) || !get_u32(in, vlen) || !get_bytes(in, vlen, value)) {
      throw corrupt("truncated record");
    }
    entries_[{static_cast<Kind>(kind), key}] = value;
  }
}

void CacheFile::save() const {
  if (path_.empty()) return;
  std::ostringstream buf(std::ios::binary);
  buf.write(kMagic.data(), kMagic.size());
  nlohmann::ordered_json header;
  header["version"] = kVersion;
  header["format"] = "length-prefixed records: u8 kind, u32 key length, key, u32 value length, value";
  header["records"] = entries_.size();
  const std::string header_text = header.dump();
  put_u32(buf, static_cast<std::uint32_t>(header_text.size()));
  buf << header_text;
  for (const auto& [k, v] : entries_) {
    buf.put(static_cast<char>(k.first));
    put_u32(buf, static_cast<std::uint32_t>(k.second.size()));
    buf << k.second;
    put_u32(buf, static_cast<std::uint32_t>(v.size()));
    buf << v;
  }
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    const std::string bytes = buf.str();
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) throw std::runtime_error("cannot replace cache file " + path_.string() + ": " + ec.message());
}

const std::string* CacheFile::find(Kind kind, const std::string& key) const {
  auto it = entries_.find({kind, key});
  return it == entries_.end() ? nullptr : &it->second;
}

void CacheFile::put(Kind kind, const std::string& key, const std::string& value) {
  auto [it, inserted] = entries_.try_emplace({kind, key}, value);
  if (inserted) {
    dirty_ = true;
  } else if (it->second != value) {
    it->second = value;
    dirty_ = true;
  }
}

void CacheFile::seed_gon3_memo() const {
  for (const auto& [k, v] : entries_) {
    if (k.first != Kind::Gon3) continue;
    Triple t;
    char c1 = 0, c2 = 0;
    std::istringstream in(k.second);
    if (in >> t.a >> c1 >> t.b >> c2 >> t.c && c1 == ',' && c2 == ',') {
      gon3_memo_insert(t, parse_bigint(v));
    }
  }
}

void CacheFile::absorb_gon3_memo() {
  for (const auto& e : gon3_memo_snapshot()) put(Kind::Gon3, triple_key(e.key), to_string(e.value));
}

}  // namespace gontet
