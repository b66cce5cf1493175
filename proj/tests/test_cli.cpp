#include <doctest.h>

#include <klbt/cli/cli.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace klbt::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "klbt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dim: totals and CSV schema") {
  auto r = run_args({"dim", "--n", "4"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["total"] == "3364");
  CHECK(j["rows"].size() == 7);
  CHECK(Json::parse(run_args({"dim", "--n", "0"}).out)["total"] == "1");
  CHECK(Json::parse(run_args({"dim", "--n", "5"}).out)["total"] == "71098");
  auto csv = run_args({"dim", "--n", "2", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("I,N_I,R_I,D_I,", 0) == 0);
  CHECK(csv.out.find("total,,,,,,20\n") != std::string::npos);
  // Subset and aggregation modes agree.
  for (int n : {0, 3, 7, 12}) {
    const auto a = Json::parse(run_args({"dim", "--n", std::to_string(n), "--mode", "subset"}).out);
    const auto b = Json::parse(run_args({"dim", "--n", std::to_string(n), "--mode", "aggregate"}).out);
    CHECK(a["total"] == b["total"]);
    CHECK(a["rows"] == b["rows"]);
  }
}

TEST_CASE("exit codes: usage errors are 2, verification failures 1") {
  CHECK(run_args({}).code == 2);
  CHECK(run_args({"bogus"}).code == 2);
  CHECK(run_args({"dim", "--n", "51"}).code == 2);
  CHECK(run_args({"dim", "--n", "21", "--mode", "subset"}).code == 2);
  CHECK(run_args({"dim", "--n", "3", "--format", "xml"}).code == 2);
  CHECK(run_args({"dim", "--n", "notanumber"}).code == 2);
  CHECK(run_args({"verify", "--n", "2"}).code == 2);  // --suite missing
  CHECK(run_args({"verify", "--suite", "btalg", "--n", "4"}).code == 2);
  CHECK(run_args({"kl-lift", "--n", "4"}).code == 2);
  CHECK(run_args({"finite-model", "--n", "1", "--q", "6"}).code == 2);
  CHECK(run_args({"finite-model", "--n", "2", "--q", "4", "--ceiling", "100"}).code == 2);
  CHECK(run_args({"dim-rank", "--n", "4", "--mode", "exact"}).code == 2);
  CHECK(run_args({"dim", "--n", "3", "--threads", "0"}).code == 2);
  CHECK(run_args({"verify", "--suite", "btalg", "--n", "2"}).code == 0);
  CHECK(run_args({"verify", "--suite", "hecke", "--n", "3"}).code == 0);
  // Descent independence of the KL lift fails from S_3 on (see README).
  const auto kl = run_args({"verify", "--suite", "kl", "--n", "2"});
  CHECK(kl.code == 1);
  CHECK(Json::parse(kl.out)["details"]["descent_dependent"] == Json::array({"[3,2,1]"}));
  CHECK(run_args({"verify", "--suite", "kl", "--n", "1"}).code == 0);
}

TEST_CASE("verify suites: reference examples") {
  const auto fin = run_args({"verify", "--suite", "finite", "--n", "2", "--q", "2", "--k", "1"});
  REQUIRE(fin.code == 0);
  bool braid = false;
  const Json fj = Json::parse(fin.out);
  for (const auto& c : fj["checks"])
    if (c["name"] == "op_ks_braid") braid = c["pass"].get<bool>() && c["instances"] == 1;
  CHECK(braid);
  const auto mono = run_args({"verify", "--suite", "monodromic", "--n", "2", "--q", "4"});
  REQUIRE(mono.code == 0);
  const Json mj = Json::parse(mono.out);
  CHECK(mj["details"]["pi_pairs"].get<int>() >= 100);
  CHECK(mj["details"]["crosscheck"]["pass"] == true);
}

TEST_CASE("kl-lift: records, base cases") {
  const auto r = run_args({"kl-lift", "--n", "3"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["records"].size() == 24);
  for (const auto& rec : j["records"]) {
    CHECK(rec["bar_invariant"] == true);
    CHECK(rec["pi_image"] == true);
  }
  const auto& e = j["records"][0];
  CHECK(e["w"] == "[1,2,3,4]");
  REQUIRE(e["terms"].size() == 1);
  CHECK(e["terms"][0]["coefficient"] == "1");
}

TEST_CASE("determinism and JSON round trip for every command") {
  const std::vector<std::vector<std::string>> configs = {
      {"dim", "--n", "6"},
      {"dim", "--n", "30"},
      {"dim-rank", "--n", "2", "--mode", "exact"},
      {"dim-rank", "--n", "3", "--mode", "specialized", "--seed", "7"},
      {"verify", "--suite", "btalg", "--n", "2", "--seed", "5"},
      {"verify", "--suite", "hecke", "--n", "2"},
      {"verify", "--suite", "kl", "--n", "2"},
      {"verify", "--suite", "monodromic", "--n", "1", "--q", "4", "--seed", "9"},
      {"verify", "--suite", "finite", "--n", "1", "--q", "4"},
      {"kl-lift", "--n", "2"},
      {"finite-model", "--n", "1", "--q", "3"},
  };
  for (const auto& cfg : configs) {
    CAPTURE(cfg[0]);
    const auto a = run_args(cfg), b = run_args(cfg);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(Json::parse(to_json_text(j)) == j);
    CHECK(to_json_text(j) == a.out);
    auto csv_cfg = cfg;
    csv_cfg.insert(csv_cfg.end(), {"--format", "csv"});
    const auto c1 = run_args(csv_cfg), c2 = run_args(csv_cfg);
    CHECK(c1.out == c2.out);
    CHECK(c1.out.size() > 0);
    CHECK(c1.code == a.code);
  }
}

TEST_CASE("threads do not change output; --out writes the file") {
  const auto a = run_args({"dim-rank", "--n", "3", "--mode", "specialized", "--threads", "1"});
  const auto b = run_args({"dim-rank", "--n", "3", "--mode", "specialized", "--threads", "3"});
  CHECK(a.out == b.out);
  const std::string path = "test_cli_out.json";
  const auto r = run_args({"dim", "--n", "3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(Json::parse(ss.str())["total"] == "217");
  std::remove(path.c_str());
}
