#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "wirecube/embedding.hpp"
#include "wirecube/wirelength.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wirecube::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "wirecube_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("formula command") {
  auto r = run({"formula", "--host", "C4xC4"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["total"] == 32);
  CHECK(doc["terms"].size() == 2);
  CHECK(doc["terms"][0]["value"] == 16);

  r = run({"formula", "--host", "C8xC8"});
  CHECK(json::parse(r.out)["total"] == 320);

  r = run({"formula", "--host", "P2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("exponent") != std::string::npos);
  CHECK(r.out.empty());

  r = run({"formula", "--host", "C4xC4,C8xP4", "--host", "P8", "--format", "tsv"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "host\tn\tk\tterms\ttotal\n"
        "C4xC4\t4\t2\t16,16\t32\n"
        "C8xP4\t5\t2\t80,48\t128\n"
        "P8\t3\t1\t28\t28\n");

  r = run({"formula", "--host", "C4xC4", "--host", "C8"});
  doc = json::parse(r.out);
  REQUIRE(doc.is_array());
  CHECK(doc[1]["total"] == 20);

  CHECK(run({"formula", "--host", "C6"}).code == 1);
  CHECK(run({"formula"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("eval command") {
  auto r = run({"eval", "--host", "C4xC4", "--embedding", "gray", "--method", "both"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["reports"][0]["method"] == "direct");
  CHECK(doc["reports"][0]["total"] == 32);
  CHECK(doc["reports"][1]["method"] == "cut_sum");
  CHECK(doc["reports"][1]["total"] == 32);
  CHECK(doc["reports"][1]["per_cut"].size() == 4);
  CHECK(doc["agree"] == true);

  r = run({"eval", "--host", "C8", "--embedding", "random:7", "--method", "both"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["agree"] == true);
  CHECK(doc["reports"][0]["total"].get<std::uint64_t>() >= 20);
  CHECK(doc["reports"][0]["total"] == doc["reports"][1]["total"]);

  const auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"host":"C4xC4","map":[0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,14]})";
  r = run({"eval", "--host", "C4xC4", "--embedding", "file:" + bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("not a permutation") != std::string::npos);

  const auto good = scratch("good.json");
  wirecube::write_embedding_file(good.string(), wirecube::gray_embedding(wirecube::parse_host("C8xP4")));
  r = run({"eval", "--embedding", "file:" + good.string(), "--method", "cut"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["reports"][0]["total"] == 128);
  r = run({"eval", "--host", "C4xC8", "--embedding", "file:" + good.string()});
  CHECK(r.code == 1);

  CHECK(run({"eval", "--host", "C8", "--embedding", "random:x"}).code == 1);
  CHECK(run({"eval", "--host", "C8", "--embedding", "bogus"}).code == 1);
  CHECK(run({"eval", "--host", "C8", "--method", "fast"}).code == 1);

  r = run({"eval", "--host", "C8", "--format", "tsv"});
  CHECK(r.out == "host\tembedding\tmethod\ttotal\nC8\tgray\tdirect\t20\nC8\tgray\tcut_sum\t20\n");
}

TEST_CASE("gray command") {
  const auto path = scratch("gray_c8xp4.json");
  auto r = run({"gray", "--host", "C8xP4", "--out", path.string(), "--vertex", "11011"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["wirelength"] == 128);
  CHECK(doc["vertices"][0]["tuple"] == "(5,3)");
  CHECK(doc["vertices"][0]["flat"] == 18);
  const auto e = wirecube::read_embedding_file(path.string());
  CHECK(e(0b11011) == 18);

  r = run({"gray", "--host", "C8"});
  CHECK(json::parse(r.out)["wirelength"] == 20);

  r = run({"gray", "--host", "C8xP4", "--vertex", "11011", "--format", "tsv"});
  CHECK(r.out == "host\twirelength\tfile\nC8xP4\t128\t\nvertex\tcoordinate\tflat\n11011\t(5,3)\t18\n");

  CHECK(run({"gray", "--host", "C8xP4", "--vertex", "1101"}).code == 1);
  CHECK(run({"gray", "--host", "C8", "--out", "/nonexistent/dir/x.json"}).code == 1);
}

TEST_CASE("search command") {
  auto r = run({"search", "--host", "C8", "--method", "brute"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["best_wirelength"] == 20);
  CHECK(doc["verdict"] == "matched");
  CHECK(doc["matched_formula"] == true);
  CHECK(wirecube::embedding_from_json(doc["best_embedding"].dump()).host().to_string() == "C8");

  r = run({"search", "--host", "C4xC4", "--method", "anneal", "--seed", "1", "--restarts", "4", "--iterations",
           "20000"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["best_wirelength"].get<std::uint64_t>() >= 32);
  const std::string first = r.out;
  CHECK(run({"search", "--host", "C4xC4", "--method", "anneal", "--seed", "1", "--restarts", "4", "--iterations",
             "20000"})
            .out == first);

  r = run({"search", "--host", "C4xC4", "--method", "brute"});
  CHECK(r.code == 1);
  CHECK(r.err.find("too large") != std::string::npos);

  // a single random restart with no moves sits above the optimum
  r = run({"search", "--host", "C8xC8", "--no-gray-start", "--restarts", "1", "--iterations", "0"});
  CHECK(r.code == 3);
  CHECK(json::parse(r.out)["verdict"] == "above_formula");

  r = run({"search", "--host", "P2xP2", "--method", "brute", "--format", "tsv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("no_formula") != std::string::npos);
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--hosts", "C8,P8", "--depth", "full", "--samples", "100"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["summary"]["brute_minima"]["C8"] == 20);
  CHECK(doc["summary"]["brute_minima"]["P8"] == 28);

  r = run({"verify", "--max-n", "6", "--depth", "quick"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["summary"]["failed_checks"] == 0);
  CHECK(doc["summary"]["formula_matches"].get<int>() > 0);

  const auto bad = scratch("verify_bad.json");
  std::ofstream(bad) << R"({"host":"C4","map":[0,0,1,2]})";
  r = run({"verify", "--embedding", bad.string()});
  CHECK(r.code == 2);
  doc = json::parse(r.out);
  CHECK(doc["passed"] == false);
  CHECK(doc["results"][0]["checks"][0]["detail"].get<std::string>().find("not a permutation") != std::string::npos);

  const auto good = scratch("verify_good.json");
  wirecube::write_embedding_file(good.string(), wirecube::random_embedding(wirecube::parse_host("C4xC4"), 3));
  r = run({"verify", "--embedding", good.string(), "--format", "tsv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("formula_lower_bound\tpass") != std::string::npos);
}

TEST_CASE("JSON output round-trips report values") {
  const auto r = run({"eval", "--host", "C8xP4", "--embedding", "random:11"});
  const auto doc = json::parse(r.out);
  const auto e = wirecube::random_embedding(wirecube::parse_host("C8xP4"), 11);
  const auto cut = wirecube::wl_cut(e);
  const auto& per_cut = doc["reports"][1]["per_cut"];
  REQUIRE(per_cut.size() == cut.per_cut.size());
  for (std::size_t i = 0; i < cut.per_cut.size(); ++i) {
    CHECK(per_cut[i]["theta"] == cut.per_cut[i].theta);
    CHECK(per_cut[i]["factor"] == cut.per_cut[i].cut.factor + 1);
    CHECK(per_cut[i]["index"] == cut.per_cut[i].cut.index);
  }
  CHECK(doc["reports"][1]["total"] == cut.total);
}
