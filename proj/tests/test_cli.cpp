#include "hurwitz/cli.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace hurwitz;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute and qseries examples") {
  auto r = run({"compute", "--base-genus", "1", "--source-genus", "2", "--degree", "3", "--k", "0", "--l", "2", "--m",
                "0", "--connected"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"value\":\"13\"}\n");

  r = run({"qseries", "--base-genus", "1", "--source-genus", "2", "--k", "2", "--l", "0", "--m", "0", "--qmax", "5"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"coefficients\":[\"0\",\"0\",\"2\",\"16\",\"60\",\"160\"]}\n");

  // oracle route agrees
  r = run({"compute", "--base-genus", "1", "--source-genus", "2", "--degree", "3", "--l", "2", "--connected", "--method",
           "oracle"});
  CHECK(r.out == "{\"value\":\"13\"}\n");
}

TEST_CASE("identical invocations give identical bytes") {
  std::vector<std::string> args{"tropical", "--genus", "2", "--degree", "3", "--variant", "strict", "--list"};
  auto a = run(args), b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto doc = nlohmann::ordered_json::parse(a.out);
  CHECK(doc["total"] == "3");
  CHECK(doc.begin().key() == "covers");
  CHECK(doc["covers"][0].contains("multiplicity"));
}

TEST_CASE("double, toprec and qc") {
  auto r = run({"double", "--variant", "monotone", "--mu", "3", "--nu", "2,1", "--genus", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"value\":\"1\"}\n");
  for (const char* method : {"oracle", "tropical"})
    CHECK(run({"double", "--variant", "monotone", "--mu", "3", "--nu", "2,1", "--genus", "0", "--method", method}).out ==
          r.out);

  r = run({"toprec", "--g", "1", "--n", "2", "--mu", "2,1"});
  CHECK(r.out == "{\"C\":\"-20\",\"checks\":{\"cut_and_join\":\"-20\",\"oracle\":\"-20\"}}\n");
  r = run({"--oracle-max-degree", "2", "toprec", "--g", "0", "--n", "1", "--mu", "3"});
  CHECK(r.out == "{\"C\":\"2\",\"checks\":{\"cut_and_join\":\"2\",\"oracle\":null}}\n");

  r = run({"qc", "verify", "--variant", "monotone", "--genus", "1", "--dmax", "8", "--bmax", "8"});
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["max_abs"] == "0");
}

TEST_CASE("output formats") {
  auto r = run({"--format", "csv", "qseries", "--base-genus", "1", "--m", "2", "--qmax", "4"});
  CHECK(r.out == "degree,coefficient\n0,0\n1,0\n2,0\n3,3\n4,16\n");
  r = run({"qseries", "--base-genus", "1", "--m", "2", "--qmax", "4", "--format", "plain"});
  CHECK(r.out == "0 0 0 3 16\n");
  r = run({"--format", "plain", "double", "--variant", "strict", "--mu", "2", "--nu", "1,1", "--genus", "0"});
  CHECK(r.out == "1/2\n");
  r = run({"--format", "csv", "toprec", "--g", "0", "--n", "2", "--mu", "1,1"});
  CHECK(r.out == "key,value\nC,1\nchecks.cut_and_join,1\nchecks.oracle,1\n");
}

TEST_CASE("fit") {
  auto r = run({"fit", "--weight", "6", "--base-genus", "1", "--k", "2", "--qmax", "12"});
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["expression"] == "-1/12960*R - 1/8640*P*Q + 1/5184*P^3");

  r = run({"fit", "--weight", "2", "--coeffs", "1,-24,-72,-96,-168,-144,-288,-192"});
  CHECK(nlohmann::json::parse(r.out)["expression"] == "P");
  r = run({"fit", "--weight", "2", "--coeffs", "1,-24,-72,-96,-168,-144,-288,-191"});
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == false);
}

TEST_CASE("errors map to exit statuses without output") {
  auto r = run({"compute", "--base-genus", "1", "--source-genus", "5", "--degree", "3", "--l", "2"});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(!r.err.empty());

  r = run({"compute", "--base-genus", "1", "--source-genus", "2", "--degree", "9", "--l", "2", "--method", "oracle"});
  CHECK(r.status == 3);
  CHECK(r.out.empty());

  CHECK(run({"compute", "--base-genus", "1"}).status == 2);
  CHECK(run({"double", "--variant", "sideways", "--mu", "1", "--nu", "1", "--genus", "0"}).status == 2);
  CHECK(run({"double", "--variant", "strict", "--mu", "2", "--nu", "1", "--genus", "0"}).status == 2);
  CHECK(run({"qseries", "--base-genus", "1", "--l", "2", "--qmax", "40"}).status == 3);
  CHECK(run({"qseries", "--base-genus", "2", "--source-genus", "3", "--l", "2", "--qmax", "3"}).status == 2);
  CHECK(run({"toprec", "--g", "0", "--n", "2", "--mu", "1"}).status == 2);
  CHECK(run({"tropical", "--genus", "9", "--degree", "2"}).status == 3);
  CHECK(run({"verify", "--suite", "nonsense"}).status == 2);
  CHECK(run({"--oracle-max-degree", "2", "verify", "--suite", "double", "--dmax", "3"}).status == 3);
}

TEST_CASE("resource limits come from the environment") {
  setenv("HURWITZ_MAX_QMAX", "3", 1);
  CHECK(run({"qseries", "--base-genus", "1", "--l", "2", "--qmax", "4"}).status == 3);
  CHECK(run({"--max-qmax", "4", "qseries", "--base-genus", "1", "--l", "2", "--qmax", "4"}).status == 0);
  unsetenv("HURWITZ_MAX_QMAX");
}

TEST_CASE("verify reports") {
  auto r = run({"verify", "--suite", "oracle-vs-characters", "--dmax", "4"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("checked: ", 0) == 0);
  CHECK(r.out.find(", failures: 0\n") != std::string::npos);

  r = run({"--format", "json", "verify", "--suite", "n-recursion", "--dmax", "3", "--bmax", "2"});
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["failures"] == 0);
  CHECK(doc["checked"].get<long>() > 0);
  CHECK(doc["suites"][0]["counterexample"].is_null());
}

TEST_CASE("cache lifecycle") {
  auto dir = std::filesystem::temp_directory_path() / "hurwitz_cli_cache_test";
  std::filesystem::remove_all(dir);
  std::string d = dir.string();
  CHECK(run({"cache", "list"}).status == 2);

  auto r = run({"--cache-dir", d, "cache", "build", "--dmax", "4"});
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["degrees"] == nlohmann::json::array({1, 2, 3, 4}));
  CHECK(std::filesystem::exists(dir / "characters_d4.json"));

  r = run({"cache", "list", "--cache-dir", d});
  CHECK(nlohmann::json::parse(r.out)["degrees"].size() == 4);
  // a cached table serves later computations
  r = run({"--cache-dir", d, "compute", "--base-genus", "1", "--source-genus", "2", "--degree", "4", "--l", "2",
           "--connected"});
  CHECK(r.out == "{\"value\":\"44\"}\n");

  r = run({"--cache-dir", d, "cache", "clear"});
  CHECK(nlohmann::json::parse(r.out)["removed"].size() >= 4);
  CHECK(!std::filesystem::exists(dir / "characters_d4.json"));
  std::filesystem::remove_all(dir);
}
