#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "expspec/commands.hpp"
#include "expspec/errors.hpp"

using namespace expspec;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(EXPSPEC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RunConfig small() {
  RunConfig c;
  c.lat = 9;
  c.shell = 8;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.element = "nope";
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.lat = 2;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.tol_identity = 0.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.segments = 32;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK(is_known_element("one"));
}

TEST_CASE("verify-identities") {
  RunConfig c = small();
  c.lat = 3;
  const Report r = cmd_verify_identities(c);
  CHECK(r.overall_pass());
  c.tol_identity = 1e-20;
  CHECK_FALSE(cmd_verify_identities(c).overall_pass());
}

TEST_CASE("spectrum") {
  RunConfig c = small();
  for (const char* e : {"ab", "ba", "one-minus-2ab", "one-minus-2ba", "one"}) {
    c.element = e;
    const Report r = cmd_spectrum(c);
    CHECK(!r.records.empty());
  }
  c.lat = 65;
  c.element = "one-minus-2ba";
  CHECK(cmd_spectrum(c).overall_pass());
}

TEST_CASE("generalize") {
  const Report r = cmd_generalize(small());
  CHECK(r.overall_pass());
  bool labelled = false;
  for (const auto& n : r.notes) labelled = labelled || n.find("not machine-checked") != std::string::npos;
  CHECK(labelled);
}

TEST_CASE("report rendering") {
  Report r;
  r.command = "x";
  CHECK_FALSE(r.overall_pass());
  r.records.push_back(make_record("a \"quoted\" name", "claim", 0.5, Comparator::LE, 1.0));
  CHECK(r.overall_pass());
  const auto j = r.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["overall_pass"] == true);
  CHECK(j["records"][0]["pass"] == true);
  const std::string csv = r.csv_summary();
  CHECK(csv.rfind("name,value,comparator,threshold,pass,citation\n", 0) == 0);
  CHECK(csv.find("\"a \"\"quoted\"\" name\",0.5,<=,1,PASS,\"claim\"") != std::string::npos);
  CHECK(csv.find("overall,,,,PASS,") != std::string::npos);
  r.records.push_back(make_record("inf", "claim", INFINITY, Comparator::LE, 1.0));
  CHECK_FALSE(r.overall_pass());
  CHECK(r.to_json()["records"][1]["value"] == "inf");
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("verify-identities --lat 3 --shell 8") == 0);
  CHECK(run_cli("verify-identities --lat 3 --shell 8 --tol 1e-20") == 1);
  CHECK(run_cli("spectrum --element bogus") == 2);
  CHECK(run_cli("spectrum --lat 1") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("") == 2);
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("report-all --lat 9 --shell 8 --out /nonexistent-dir/report.json") == 2);
  CHECK(run_cli("generalize --format xml") == 2);
  CHECK(run_cli("certify --lat 9 --shell 8 --sabotage flip-f") == 1);
  CHECK(run_cli("spectrum --element one --lat 3 --shell 8") == 0);
}

TEST_CASE("cli outputs") {
  const std::string dir = (std::filesystem::temp_directory_path() / "expspec_cli_test").string();
  std::filesystem::create_directories(dir);
  REQUIRE(run_cli("spectrum --element ba --lat 9 --shell 8 --out " + dir + "/s.json --csv " + dir +
                  "/s.csv --svg " + dir + "/s.svg") == 1);  // 9 rows are too coarse for 0.05
  const auto j = nlohmann::json::parse(slurp(dir + "/s.json"));
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "spectrum");
  CHECK(j["overall_pass"] == false);
  CHECK(slurp(dir + "/s.csv").rfind("re,im\n", 0) == 0);
  CHECK(slurp(dir + "/s.svg").find("<svg") != std::string::npos);

  REQUIRE(run_cli("generalize --format csv-summary --out " + dir + "/g.csv") == 0);
  CHECK(slurp(dir + "/g.csv").find("overall,,,,PASS,") != std::string::npos);

  REQUIRE(run_cli("generalize --out " + dir + "/g1.json") == 0);
  REQUIRE(run_cli("generalize --out " + dir + "/g2.json") == 0);
  CHECK(slurp(dir + "/g1.json") == slurp(dir + "/g2.json"));
}
