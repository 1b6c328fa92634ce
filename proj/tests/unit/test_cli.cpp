#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "pickylab/cli.hpp"
#include "pickylab/errors.hpp"

using namespace pickylab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result
{
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(std::string const &name)
{
  auto dir = fs::temp_directory_path() / ("pickylab-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("catalog validation")
{
  auto c = parse_catalog(json::parse(R"({"format": 1, "entries": [
    {"label": "S4", "source": "S:4"}, {"label": "A5", "source": "A:5", "primes": [2, 5]}]})"));
  REQUIRE(c.entries.size() == 2);
  CHECK(c.entries[1].primes == std::vector<std::uint64_t>{2, 5});

  auto bad = [](char const *text) { return parse_catalog(json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"format": 2, "entries": []})"), ParseError);
  CHECK_THROWS_AS(bad(R"({"format": 1})"), ParseError);
  CHECK_THROWS_AS(bad(R"({"format": 1, "entries": [{"label": "x"}]})"), ParseError);
  CHECK_THROWS_AS(bad(R"({"format": 1, "entries": [{"label": "x", "source": "S:3", "primes": [4]}]})"), ParseError);
  CHECK_THROWS_AS(bad(R"({"format": 1, "entries": [{"label": "x", "source": "S:3", "colour": 1}]})"), ParseError);
  try {
    bad(R"({"format": 1, "entries": [{"label": "x", "source": "S:3"}, {"label": "x", "source": "S:4"}]})");
    FAIL("duplicate accepted");
  } catch (ParseError const &e) {
    CHECK(std::string(e.what()).find("entries[1]") != std::string::npos);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
}

TEST_CASE("shipped catalogs load and resolve")
{
  for (char const *name : {"small.json", "full.json"}) {
    auto c = load_catalog(fs::path(PICKYLAB_SOURCE_DIR) / "catalog" / name);
    CHECK(c.entries.size() >= 30);
    for (auto const &e : c.entries) {
      CAPTURE(e.label);
      auto g = resolve_entry(c, e);
      if (std::string(name) == "small.json")
        CHECK(g.order_u64() <= 200);
    }
  }
  auto c = load_catalog(fs::path(PICKYLAB_SOURCE_DIR) / "catalog" / "full.json");
  std::map<std::string, std::uint64_t> orders;
  for (auto const &e : c.entries)
    orders[e.label] = resolve_entry(c, e).order_u64();
  CHECK(orders["SL(2,3)"] == 24);
  CHECK(orders["C7:C3"] == 21);
  CHECK(orders["PSL(2,7)"] == 168);
  CHECK(orders["M11"] == 7920);
}

TEST_CASE("command line exit codes")
{
  auto r = cli({"check", "all", "S:4", "-p", "2"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  for (auto const &rep : j)
    CHECK(rep["status"] == "holds");

  r = cli({"check", "alperin_c", "S:4", "-p", "2"});
  CHECK(r.code == 3);
  CHECK(json::parse(r.out)[0]["status"] == "skipped");

  r = cli({"check", "picky_conjecture", "S:4", "-p", "2", "--variant", "strong"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)[0]["variant"] == "strong");

  CHECK(cli({"check", "mckay", "S:4"}).code == 2);
  CHECK(cli({"check", "nonsense", "S:4", "-p", "2"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("command line diagnostics are distinct")
{
  auto unknown = cli({"table", "X:9"});
  auto malformed = cli({"subnormalizer", "S:4", "-x", "(1,2"});
  auto scale = cli({"table", "S:9"});
  CHECK(unknown.code == 2);
  CHECK(malformed.code == 2);
  CHECK(scale.code == 2);
  CHECK(unknown.err.find("unknown group") != std::string::npos);
  CHECK(malformed.err.find("malformed permutation") != std::string::npos);
  CHECK(scale.err.find("scale bound") != std::string::npos);
}

TEST_CASE("subcommand outputs")
{
  auto picky = json::parse(cli({"picky", "S:4", "-p", "2"}).out);
  std::map<std::string, bool> verdict;
  for (auto const &e : picky["elements"])
    verdict[e["element"]] = e["is_picky"];
  CHECK(verdict["(1,2,3,4)"]);
  CHECK_FALSE(verdict["(1,2)(3,4)"]);

  auto sub = json::parse(cli({"subnormalizer", "S:4", "-x", "(1,2,3,4)"}).out);
  CHECK(sub["subgroup"]["order"] == "8");

  auto sylow = json::parse(cli({"sylow", "A:5", "-p", "5"}).out);
  CHECK(sylow["count"] == 6);
  CHECK(sylow["ti"] == true);

  auto table = json::parse(cli({"table", "S:3"}).out);
  CHECK(table["degrees"] == json({1, 1, 2}));

  auto blocks = json::parse(cli({"blocks", "S:3", "-p", "2"}).out);
  CHECK(blocks["blocks"].size() == 2);

  auto t1 = cli({"table1"});
  CHECK(t1.code == 0);
  CHECK(json::parse(t1.out)["verdict"] == "equal");
  CHECK(cli({"table1", "--csv"}).out.rfind("value,2-part,multiplicity\n", 0) == 0);
}

TEST_CASE("output file and pretty printing")
{
  auto dir = scratch_dir("out");
  auto file = (dir / "t.json").string();
  auto r = cli({"table", "C:3", "--out", file, "--pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(file);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("\n  ") != std::string::npos);
  CHECK(json::parse(text)["degrees"] == json({1, 1, 1}));
}

TEST_CASE("batch is independent of the job count and of the cache")
{
  auto dir = scratch_dir("batch");
  std::ofstream(dir / "gens.txt") << "(1,2,3)\n(1,2)\n";
  std::ofstream(dir / "cat.json") << R"({"format": 1, "entries": [
    {"label": "S4", "source": "S:4"}, {"label": "file", "source": "gens.txt"},
    {"label": "A5", "source": "A:5", "primes": [5]}, {"label": "Q8", "source": "Q:8"}]})";
  auto c = load_catalog(dir / "cat.json");
  auto one = run_batch(c, 1).dump();
  auto four = run_batch(c, 4).dump();
  CHECK(one == four);
  CHECK(exit_code_for(json::parse(one)["reports"]) == 0);

  auto cache = dir / "cache";
  auto cold = run_batch(c, 2, false, {}, cache).dump();
  CHECK(!fs::is_empty(cache));
  auto warm = run_batch(c, 2, false, {}, cache).dump();
  CHECK(cold == one);
  CHECK(warm == one);

  // a cache entry for a different group is not reused
  for (auto const &f : fs::directory_iterator(cache)) {
    auto j = json::parse(std::ifstream(f.path()));
    j["order"] = "1";
    j["reports"] = json::array();
    std::ofstream(f.path()) << j.dump();
  }
  CHECK(run_batch(c, 1, false, {}, cache).dump() == one);

  auto timed = run_batch(c, 1, true);
  CHECK(timed["reports"][0].contains("runtime_ms"));
  CHECK_FALSE(json::parse(one)["reports"][0].contains("runtime_ms"));
}

TEST_CASE("exit code aggregation")
{
  CheckReport holds{"a", "G", 2, Status::holds, json::object(), "", 0};
  CheckReport skipped{"b", "G", 2, Status::skipped, json::object(), "", 0};
  CheckReport fails{"c", "G", 2, Status::fails, json::object(), "", 0};
  CHECK(exit_code_for(std::vector<CheckReport>{holds}) == 0);
  CHECK(exit_code_for(std::vector<CheckReport>{holds, skipped}) == 3);
  CHECK(exit_code_for(std::vector<CheckReport>{skipped, fails}) == 1);
}
