#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "gontet/cache.hpp"
#include "gontet/gon.hpp"
#include "gontet/serialize.hpp"
#include "gontet/tet.hpp"

using namespace gontet;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("gontet_test_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("json encodings") {
  CHECK(to_json(BigInt("123456789012345678901234567890")).dump() == "\"123456789012345678901234567890\"");
  CHECK(to_json(make_rational(-3, 6)).dump() == "\"-1/2\"");
  const Surd s = sixj({{8, 20, 24}, {15, 13, 17}});
  CHECK(to_json(s).dump() == R"({"coeff":"53059/1216870200","radicand":"50830"})");
  CHECK(surd_from_json(to_json(s)) == s);
  const LaurentPoly q = qint(3);
  CHECK(to_json(q).dump() == R"({"terms":[[-2,"1"],[0,"1"],[2,"1"]]})");
  CHECK(laurent_from_json(to_json(q)) == q);
  CHECK(to_json(Triple{1, 2, 3}).dump() == "[1,2,3]");
  CHECK(to_json(TetLabels{{1, 2, 3}, {4, 5, 6}}).dump() == "[[1,2,3],[4,5,6]]");
}

TEST_CASE("cache round trip") {
  const auto path = temp_path("roundtrip.bin");
  {
    CacheFile c(path);
    c.load();
    CHECK(c.size() == 0);
    c.put(CacheFile::Kind::Gon3, "3,7,8", "2520");
    c.put(CacheFile::Kind::Tet, "2,1,3,1,2,2", "-24");
    CHECK(c.dirty());
    c.save();
  }
  CacheFile c(path);
  c.load();
  CHECK(c.size() == 2);
  REQUIRE(c.find(CacheFile::Kind::Gon3, "3,7,8") != nullptr);
  CHECK(*c.find(CacheFile::Kind::Gon3, "3,7,8") == "2520");
  CHECK(*c.find(CacheFile::Kind::Tet, "2,1,3,1,2,2") == "-24");
  CHECK(c.find(CacheFile::Kind::Sixj, "3,7,8") == nullptr);
  std::filesystem::remove(path);
}

TEST_CASE("cache feeds the gon memo") {
  const auto path = temp_path("memo.bin");
  gon3_memo_clear();
  gon3(8, 20, 24);
  {
    CacheFile c(path);
    c.absorb_gon3_memo();
    c.save();
  }
  gon3_memo_clear();
  CacheFile c(path);
  c.load();
  c.seed_gon3_memo();
  CHECK(gon3_memo_size() == 1);
  CHECK(gon3(24, 8, 20) == 1181079900);
  std::filesystem::remove(path);
}

TEST_CASE("corrupt cache is reported with its path") {
  const auto path = temp_path("corrupt.bin");
  {
    std::ofstream out(path, std::ios::binary);
    out << "not a cache";
  }
  CacheFile c(path);
  try {
    c.load();
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(path.string()) != std::string::npos);
  }
  std::filesystem::remove(path);
}
