#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace gontet {

/// Persistent key/value store for table generation.
///
/// Layout: the 8-byte magic "GONTETC\0", a little-endian u32 header length,
/// a JSON header ({"version": N, ...}), then records. Each record is a u8
/// kind, a u32 key length, the key, a u32 value length and the value. Keys
/// are canonical label strings ("3,7,8"), values decimal strings. Saving
/// writes a sibling temporary file and renames it over the target.
class CacheFile {
 public:
  static constexpr std::uint32_t kVersion = 1;

  enum class Kind : std::uint8_t { Gon3 = 1, Tet = 2, Sixj = 3, ThetaK = 4 };

  CacheFile() = default;
  explicit CacheFile(std::filesystem::path path) : path_(std::move(path)) {}

  /// Reads the file if it exists. A missing file or a version mismatch
  /// leaves the cache empty; a corrupt file throws std::runtime_error naming
  /// the path.
  void load();
  void save() const;

  const std::string* find(Kind kind, const std::string& key) const;
  void put(Kind kind, const std::string& key, const std::string& value);

  std::size_t size() const { return entries_.size(); }
  bool dirty() const { return dirty_; }
  const std::filesystem::path& path() const { return path_; }

  /// Copies cached gon3 values into the process-wide memo.
  void seed_gon3_memo() const;
  /// Adds every memoized gon3 value to the cache.
  void absorb_gon3_memo();

 private:
  std::filesystem::path path_;
  std::map<std::pair<Kind, std::string>, std::string> entries_;
  bool dirty_ = false;
};

}  // namespace gontet
