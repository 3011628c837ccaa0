#include "doctest.h"
#include "hshift/cli.hpp"

#include <json.hpp>

using hshift::cli::run;
using Json = nlohmann::json;

namespace {

Json result_of(const std::vector<std::string>& args) {
  const auto r = run(args);
  REQUIRE(r.exit_code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("envelope shape") {
  const auto j = result_of({"entropy", "--shift", "full:n=2", "--kmax", "4"});
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "entropy");
  CHECK(j["spec"] == "full:n=2");
  CHECK(j["result"]["rows"].size() == 4);
  CHECK(j["result"]["rows"][3]["lambda"] == "16");
  CHECK(j["result"]["rows"][3].contains("horizon"));
  CHECK(j["caps"]["hit"] == false);
  CHECK_FALSE(j.contains("wall_seconds"));
  CHECK(result_of({"--timing", "entropy", "--shift", "full:n=2", "--kmax", "2"}).contains("wall_seconds"));
}

TEST_CASE("golden spacing entropy at k = 30") {
  const auto j = result_of({"entropy", "--shift", "spacing:P=complement:(finite:{1})", "--kmax", "30"});
  CHECK(j["result"]["rows"][29]["lambda"] == "2178309");
  CHECK(j["result"]["rows"][29]["h_k"].get<double>() == doctest::Approx(0.70183).epsilon(1e-4));
}

TEST_CASE("beta digits") {
  const auto r = run({"beta", "digits", "--beta", "quad:(1+1*sqrt5)/2", "--k", "16", "--raw"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1100000000000000\n");
  const auto p = run({"beta", "digits", "--beta", "1.6180339887", "--k", "400", "--precision-bits", "16"});
  CHECK(p.exit_code == 4);
  CHECK(Json::parse(p.out)["error"]["kind"] == "precision_insufficient");
}

TEST_CASE("exit codes") {
  CHECK(run({"entropy", "--shift", "spacing:P=", "--kmax", "3"}).exit_code == 2);
  CHECK(run({"entropy", "--shift", "counting", "--kmax", "40", "--cap-nodes", "1000"}).exit_code == 3);
  CHECK(run({"no-such-command"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
  CHECK(run({"spacing", "delta-star", "--set", "evens", "--k", "3"}).exit_code == 2);
}

TEST_CASE("csv output") {
  const auto r = run({"--format", "csv", "entropy", "--shift", "full:n=2", "--kmax", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("k,lambda,h_k", 0) == 0);
}

TEST_CASE("language table") {
  const auto j = result_of({"language", "--shift", "counting", "--kmax", "8"});
  CHECK(j["result"]["rows"][7]["lambda"] == "50");
  CHECK(j["result"]["rows"][7]["D_k"] == 3);
  CHECK(j["result"]["hereditary_check"]["hereditary"] == true);
  const auto w = result_of({"language", "--shift", "counting", "--word", "1010101"});
  CHECK(w["result"]["contains"] == false);
}

TEST_CASE("sets commands") {
  const auto d = result_of({"density", "--set", "periodic:;100", "--horizon", "300"});
  CHECK(d["result"]["upper_density"]["value"] == "1/3");
  CHECK(d["result"]["upper_density"]["exact"] == true);
  const auto c = result_of({"sets", "classify", "--set", "evens", "--horizon", "200"});
  CHECK(c["result"]["max_gap"] == 2);
}

TEST_CASE("chaos commands") {
  const auto c = result_of({"chaos", "classify", "--x", ";10", "--y", ";0"});
  CHECK(c["result"]["class"]["verdict"] == "none");
  const auto f = result_of({"chaos", "family", "--set", "evens", "--members", "2", "--horizon", "100000"});
  CHECK(f["result"]["log"]["growth_ok"] == true);
}

TEST_CASE("selftest") {
  const auto ok = run({"selftest", "--kmax", "8"});
  CHECK(ok.exit_code == 0);
  const Json ok_json = Json::parse(ok.out);
  for (const auto& row : ok_json["result"]["rows"]) CHECK(row["status"] == "pass");
  const auto bad = run({"selftest", "--kmax", "8", "--inject-fault", "spacing-evens"});
  CHECK(bad.exit_code == 1);
  bool named = false;
  const Json bad_json = Json::parse(bad.out);
  for (const auto& row : bad_json["result"]["rows"]) {
    if (row["family"] == "spacing-evens") named = row["status"] == "fail";
  }
  CHECK(named);
  const auto capped = run({"selftest", "--kmax", "10", "--cap-nodes", "50"});
  CHECK(capped.exit_code == 0);
  bool any_cap = false;
  const Json capped_json = Json::parse(capped.out);
  for (const auto& row : capped_json["result"]["rows"]) {
    CHECK(row["status"] != "fail");
    any_cap = any_cap || row["status"] == "cap_hit";
  }
  CHECK(any_cap);
}

TEST_CASE("seeded output is reproducible") {
  const std::vector<std::string> args{"spacing", "delta-star", "--set", "evens", "--k", "3",
                                      "--trials", "100", "--horizon", "500", "--seed", "9"};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["seed"] == 9);
}
