#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geninv/cli.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "geninv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = geninv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("classify, text output") {
  const Run r = run({"classify", "M2(Z/2)", "[[0,1],[1,1]]"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "b = [[1,1],[1,0]]"));
  CHECK(contains(r.out, "hirano:          no"));

  const Run z9 = run({"classify", "Z/9", "2"});
  CHECK(z9.code == 0);
  CHECK(contains(z9.out, "hirano:          yes  b = 5"));
}

TEST_CASE("classify, JSON output") {
  const Run r = run({"classify", "Z/3", "2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["hirano"]["exists"] == true);
  CHECK(j["hirano"]["inverse"] == "2");
  CHECK(j["strongly_drazin"]["exists"] == false);
  CHECK(j["drazin"]["index"] == 1);

  const Run z = run({"classify", "M2(Z)", "[[2,0],[0,1]]", "--json"});
  REQUIRE(z.code == 0);
  CHECK(nlohmann::json::parse(z.out)["drazin"]["exists"].is_null());
}

TEST_CASE("decompose") {
  const Run r = run({"decompose", "Z/9", "2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["p"] == "8");
  CHECK(j["w"] == "3");
  CHECK(j["e"] == "0");
  CHECK(j["f"] == "1");

  const Run even = run({"decompose", "Z/4", "2"});
  CHECK(even.code == 1);
  CHECK(contains(even.err, "not a unit"));

  const Run integer = run({"decompose", "M3(Z)", "[[-2,3,2],[-2,3,2],[1,-1,-1]]"});
  CHECK(integer.code == 0);
  CHECK(contains(integer.out, "/2"));
}

TEST_CASE("census") {
  const Run r = run({"census", "M2(Z/2)", "--json", "--workers", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["counts"]["hirano"] == 14);
  CHECK(j["counts"]["total"] == 16);

  const Run text = run({"census", "Z/3"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "strongly 2-nil-clean: yes"));

  CHECK(run({"census", "Z/1000", "--max-ring-size", "100"}).code == 1);
  CHECK(run({"census", "Z"}).code == 1);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "5.1", "M2(Z/2)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "4096 candidates, 1504 instances, 0 violations"));

  const Run notes = run({"verify", "5.5", "M2(Z/4)", "--json"});
  REQUIRE(notes.code == 0);
  CHECK_FALSE(nlohmann::json::parse(notes.out)["notes"].empty());

  const Run sampled = run({"verify", "4.1", "Z/7", "--seed", "9", "--samples", "50", "--json"});
  REQUIRE(sampled.code == 0);
  const auto j = nlohmann::json::parse(sampled.out);
  CHECK(j["strategy"] == "sampled");
  CHECK(j["seed"] == 9);
  CHECK(j["candidates"] == 50);

  CHECK(run({"verify", "3.3", "Z/4"}).code == 1);
  CHECK(run({"verify", "7.7", "Z/5"}).code == 1);
}

TEST_CASE("usage and parse errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"classify", "Z/3"}).code == 1);
  const Run bad = run({"classify", "M2(Z/3)", "[[1,2],[3]]"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "error:"));
  CHECK(run({"classify", "Q", "1"}).code == 1);
  CHECK(run({"classify", "M9(Z/2)", "0"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
