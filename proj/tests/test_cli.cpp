#include <filesystem>
#include <sstream>

#include "cli/app.hpp"
#include "doctest.h"
#include "gontet/gon.hpp"

using gontet::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("single values") {
  CHECK(call({"gon", "3", "7", "8"}).out == "{\"value\":\"2520\"}\n");
  CHECK(call({"gon", "[3,7,8]"}).out == "{\"value\":\"2520\"}\n");
  CHECK(call({"gon", "11", "3", "4", "1", "5"}).out == "{\"value\":\"18295200\"}\n");
  CHECK(call({"sixj", "8", "20", "24", "15", "13", "17"}).out ==
        "{\"coeff\":\"53059/1216870200\",\"radicand\":\"50830\"}\n");
  CHECK(call({"tet", "[[2,1,3],[1,2,2]]"}).out == "{\"value\":\"-24\"}\n");
  CHECK(call({"tet-k", "8", "20", "24", "15", "13", "17"}).out == "{\"value\":\"477531/92176448\"}\n");
  CHECK(call({"tet-regular", "8"}).out == "{\"value\":\"-5259003750\"}\n");
  CHECK(call({"theta-k", "2", "2", "2"}).out == "{\"value\":\"-3\"}\n");
  CHECK(call({"dyson-ct", "1", "1", "1"}).out == "{\"value\":\"24\",\"gon\":\"24\"}\n");
  CHECK(call({"hilbert-rowsum", "4", "7", "9", "--format", "plain"}).out ==
        "value: 9240\nrow_sum: -9240\nn: 5\ns: 3\nrow: 4\n");
  CHECK(call({"gon", "3", "7", "8", "--format", "plain"}).out == "2520\n");
  CHECK(call({"--format", "csv", "cube", "1"}).out == "value,assignments\n-63488,15\n");
  CHECK(call({"spinnet", "--graph", "theta", "--prescription", "U", "2", "2", "2"}).out ==
        "{\"graph\":\"theta\",\"prescription\":\"U\",\"value\":{\"coeff\":\"-1\",\"radicand\":\"1\"}}\n");
}

TEST_CASE("exit codes") {
  CHECK(call({"gon", "1", "1", "1"}).code == 0);
  CHECK(call({"gon", "1", "1", "1"}).out == "{\"value\":\"0\"}\n");
  const Result strict = call({"--strict", "gon", "1", "1", "1"});
  CHECK(strict.code == 1);
  CHECK(strict.out.empty());
  CHECK(call({"gon", "1", "1", "1", "--strict"}).code == 1);
  CHECK(call({"tet-regular", "3"}).code == 1);
  CHECK(call({"gon", "-1", "2", "3"}).code == 2);
  CHECK(call({"tet", "1", "2"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"--format", "xml", "gon", "0", "0", "0"}).code == 2);
  CHECK(call({"sixj-q", "0", "0", "0", "0", "0", "0"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("verify") {
  const Result r = call({"verify", "duality", "--max", "20", "--seed", "7", "--count", "100"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"passed\":100,\"failed\":0}\n");
  CHECK(call({"verify-q", "duality", "2", "2", "2", "2"}).code == 0);
  CHECK(call({"--kappa", "3", "verify-q", "duality", "1", "1", "1", "1"}).code == 0);
}

TEST_CASE("tables") {
  CHECK(call({"table", "tet-regular", "--n-max", "6", "--format", "plain"}).out ==
        "0 1\n2 96\n4 -17010\n6 -20160000\n");
  const std::string gon = call({"table", "gon", "--max", "6"}).out;
  CHECK(gon.find("{\"labels\":[5,5,0],\"value\":\"6\"}") != std::string::npos);
  CHECK(gon.find("{\"labels\":[1,1,1]") == std::string::npos);
  for (const char* kind : {"gon", "tet", "sixj", "tet-k", "theta-k"}) {
    const std::string one = call({"--jobs", "1", "table", kind, "--max", "5"}).out;
    const std::string four = call({"--jobs", "4", "table", kind, "--max", "5"}).out;
    CHECK(one == four);
    CHECK(!one.empty());
  }
}

TEST_CASE("cache reuse is byte-identical") {
  const auto path = std::filesystem::temp_directory_path() / "gontet_cli_cache.bin";
  std::filesystem::remove(path);
  const std::string plain = call({"table", "sixj", "--max", "5"}).out;
  const std::string cold = call({"--cache", path.string(), "table", "sixj", "--max", "5"}).out;
  CHECK(std::filesystem::exists(path));
  gontet::gon3_memo_clear();
  const std::string warm = call({"--cache", path.string(), "table", "sixj", "--max", "5"}).out;
  CHECK(plain == cold);
  CHECK(cold == warm);
  CHECK(call({"--cache", path.string(), "gon", "8", "20", "24"}).out == "{\"value\":\"1181079900\"}\n");
  gontet::gon3_memo_clear();
  CHECK(call({"--cache", path.string(), "gon", "24", "8", "20"}).out == "{\"value\":\"1181079900\"}\n");
  std::filesystem::remove(path);
}

TEST_CASE("bench reports the exact value") {
  const Result r = call({"bench", "tet-speed", "--runs", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\":\"370574512884046997485176381045189319801237495334758378762795196256000\"") !=
        std::string::npos);
}
