#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cache.hpp"
#include "cli.hpp"
#include "plethysm/json_io.hpp"

using namespace plethysm;
using plethysm::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

Json parsed(const Result& r) { return Json::parse(r.out); }

// Points the disk cache at a fresh directory for the lifetime of the object.
struct ScratchCache {
  std::filesystem::path dir;
  ScratchCache() {
    dir = std::filesystem::temp_directory_path() / ("plethysm-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    setenv("PLETHYSM_CACHE_DIR", dir.c_str(), 1);
  }
  ~ScratchCache() {
    std::filesystem::remove_all(dir);
    unsetenv("PLETHYSM_CACHE_DIR");
  }
  std::size_t files() const {
    if (!std::filesystem::exists(dir)) return 0;
    return std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator());
  }
};

}  // namespace

TEST_CASE("plethysm command") {
  ScratchCache cache;
  auto r = call({"plethysm", "2", "/", "2", "--schur"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"basis\":\"S\",\"degree\":4,\"terms\":[{\"partition\":[4],\"num\":1,\"den\":1},"
        "{\"partition\":[2,2],\"num\":1,\"den\":1}]}\n");
  auto pieri = parsed(call({"plethysm", "1", "/", "3,1"}));
  CHECK(symexpr_from_json(pieri).size() == 2);
  CHECK(symexpr_from_json(pieri).coefficient(Partition{3, 1}) == 1);
  auto single = symexpr_from_json(parsed(call({"plethysm", "2/1"})));
  CHECK(single.size() == 1);
  CHECK(single.coefficient(Partition{2}) == 1);

  auto p = symexpr_from_json(parsed(call({"plethysm", "2", "/", "2", "--power-sum"})));
  CHECK(p.basis() == Basis::P);
  CHECK(p.coefficient(Partition{2, 2}) == make_rational(3, 8));
  CHECK(call({"plethysm", "3", "/", "2", "--oracle-check"}).code == 0);
  CHECK(call({"plethysm", "2", "/", "2", "--schur", "--power-sum"}).code == 2);
}

TEST_CASE("usage and resource errors") {
  ScratchCache cache;
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"plethysm", "2"}).code == 2);
  CHECK(call({"plethysm", "2", "/", "x"}).code == 2);
  CHECK(call({"plethysm", "1,2", "/", "2"}).code == 2);
  CHECK(call({"relation", "--", "/", "2"}).code == 2);
  CHECK(call({"--max-degree", "5", "plethysm", "2", "/", "3"}).code == 3);
  CHECK(call({"poset", "--max-size", "7"}).code == 3);
  CHECK(call({"--max-tabloid-degree", "4", "fhmap", "2", "/", "3"}).code == 3);
  CHECK(call({"--max-tabloid-degree", "4", "ssh-rank", "3,3", "/", "2", "/", "3"}).code == 3);
  CHECK(call({"--threads", "0", "relation", "2", "/", "3"}).code == 2);
  auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("plethysm") != std::string::npos);
}

TEST_CASE("relation command") {
  ScratchCache cache;
  auto up = call({"relation", "2", "/", "3"});
  CHECK(up.code == 0);
  CHECK(parsed(up)["holds"] == true);
  CHECK(parsed(up)["witness"].is_null());
  auto down = call({"relation", "3", "/", "2"});
  CHECK(down.code == 1);
  CHECK(parsed(down)["witness"] == Json::array({2, 2, 2}));
  CHECK(call({"relation", "2,2", "/", "2"}).code == 0);
}

TEST_CASE("poset command") {
  ScratchCache cache;
  auto dot = call({"poset", "--max-size", "3", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("\"2\" -> \"3\"") != std::string::npos);
  auto json = parsed(call({"poset", "--max-size", "4", "--format", "json"}));
  auto has = [&](Json a, Json b) {
    for (const auto& e : json["edges"])
      if (e[0] == a && e[1] == b) return true;
    return false;
  };
  CHECK(has({2, 1}, {2, 2}));
  CHECK(has({2, 1}, {3, 1}));
  CHECK(has({2}, {3}));
  CHECK(json["uncomputed"].empty());
  auto tiny = parsed(call({"poset", "--max-size", "1", "--format", "json", "--include-columns"}));
  CHECK(tiny["nodes"].size() == 1);
  auto cols = parsed(call({"poset", "--max-size", "2", "--format", "json", "--include-columns"}));
  CHECK(cols["nodes"].size() == 3);
  auto capped = parsed(call({"--max-degree", "8", "poset", "--max-size", "4", "--format", "json"}));
  CHECK_FALSE(capped["uncomputed"].empty());
}

TEST_CASE("fhmap command") {
  ScratchCache cache;
  auto f = parsed(call({"fhmap", "2", "/", "3"}));
  CHECK(f["rows"] == 15);
  CHECK(f["cols"] == 10);
  CHECK(f["rank"] == 10);
  CHECK(f["injective"] == true);
  auto g = parsed(call({"fhmap", "2", "/", "2", "--rank-only", "--cross-check"}));
  CHECK(g == Json::parse("{\"rank\":3,\"injective\":true}"));
  CHECK(parsed(call({"fhmap", "1,1", "/", "2"}))["injective"] == true);

  auto path = cache.dir.string() + "-matrix.txt";
  CHECK(call({"fhmap", "2", "/", "3", "--dump", path}).code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(SparseRationalMatrix::from_coordinate_list(text.str()) == fh_map_matrix(Partition{2}, Partition{3}));
  std::filesystem::remove(path);
}

TEST_CASE("ssh-rank command") {
  ScratchCache cache;
  CHECK(call({"ssh-rank", "2,2", "/", "2", "/", "2"}).out == "1\n");
  CHECK(call({"ssh-rank", "4", "/", "2", "/", "2"}).out == "1\n");
  auto r = call({"ssh-rank", "2,2,2", "/", "3", "/", "2", "--cross-check"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(call({"ssh-rank", "2,2,2", "/", "2", "/", "3", "--cross-check"}).out == "0\n");
}

TEST_CASE("stability command") {
  ScratchCache cache;
  auto h = call({"stability", "2", "/", "2", "/", "1", "--mode", "h"});
  CHECK(h.code == 0);
  CHECK(parsed(h)["holds"] == true);
  CHECK(parsed(h)["reports"].size() == 5);
  auto first = parsed(h)["reports"][0];
  std::vector<std::string> keys;
  for (const auto& [k, v] : first.items()) keys.push_back(k);
  CHECK(keys.at(0) == "lambda");
  CHECK(keys.at(1) == "r");
  CHECK(keys.at(2) == "lifted");
  CHECK(keys.at(3) == "inequality_holds");
  CHECK(keys.at(4) == "witness_tableau");

  auto two = call({"stability", "2", "/", "1", "/", "--", "--mode", "2col"});
  CHECK(two.code == 0);
  CHECK(parsed(two)["holds"] == true);
  auto empty = parsed(call({"stability", "2", "/", "2", "/", "--"}));
  for (const auto& rep : empty["reports"]) CHECK(rep["r"] == rep["lifted"]);
  CHECK(call({"stability", "2", "/", "2", "/", "1", "--mode", "3col"}).code == 2);
}

TEST_CASE("determinism and cache round trip") {
  ScratchCache cache;
  std::vector<std::vector<std::string>> commands{
      {"plethysm", "3", "/", "3"},
      {"relation", "2,1", "/", "3,1"},
      {"poset", "--max-size", "4", "--format", "json"},
      {"stability", "2", "/", "2", "/", "1"},
  };
  for (const auto& c : commands) {
    auto uncached = c;
    uncached.insert(uncached.begin(), "--no-cache");
    Result cold = call(c);
    CHECK(cache.files() > 0);
    Result warm = call(c);
    Result none = call(uncached);
    CHECK(cold.out == warm.out);
    CHECK(cold.out == none.out);
    CHECK(cold.code == warm.code);
  }

  // Corrupt entries are misses, not errors.
  for (const auto& entry : std::filesystem::directory_iterator(cache.dir)) std::ofstream(entry.path()) << "{oops";
  Result again = call({"plethysm", "3", "/", "3"});
  CHECK(again.code == 0);
  CHECK(again.out == call({"--no-cache", "plethysm", "3", "/", "3"}).out);

  cli::DiskCache disk(cache.dir);
  disk.save("k", Json{{"a", 1}});
  CHECK(disk.load("k") == Json{{"a", 1}});
  CHECK_FALSE(disk.load("other").has_value());
  CHECK(disk.path_for("k").parent_path() == cache.dir);
}
