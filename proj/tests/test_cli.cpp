#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bmoll/cli.hpp"

using namespace bmoll;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bmoll");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path golden(const std::string& name) { return std::filesystem::path(BMOLL_GOLDEN_DIR) / name; }

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("bmoll_cli_" + name);
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("row csv output") {
  const Run r = run_cli({"row", "--m", "2", "--format", "csv"});
  CHECK(r.code == kExitPass);
  CHECK(r.out == "2,0,21,8\n2,1,15,4\n2,2,3,2\n");
}

TEST_CASE("closed-form and recurrence rows print the same coefficients") {
  const Run a = run_cli({"row", "--m", "15", "--format", "csv"});
  const Run b = run_cli({"row", "--m", "15", "--format", "csv", "--closed-form"});
  CHECK(a.out == b.out);
}

TEST_CASE("table reproduces the m = 8 values") {
  const Run r = run_cli({"table", "--m", "8", "--float-digits", "6"});
  CHECK(r.code == kExitPass);
  const std::vector<std::string> expected{"0.956593", "0.969751", "0.978293", "0.983956",
                                          "0.987811", "0.990508", "0.992445"};
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  for (std::size_t k = 0; k < expected.size(); ++k) {
    REQUIRE(std::getline(in, line));
    CHECK(line == std::to_string(k + 1) + "\t" + expected[k]);
  }
}

TEST_CASE("verify cell counts") {
  const Run r = run_cli({"verify", "--m-max", "100", "--checks", "rulc,lower,t,q", "--format", "json"});
  CHECK(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  const auto& checks = j["report"]["checks"];
  REQUIRE(checks.size() == 4);
  for (const auto& c : checks) {
    CHECK(c["cells"] == 4950);
    CHECK(c["passed"] == 4950);
    CHECK(c["failed"] == 0);
  }
  CHECK(j["report"]["all_pass"] == true);
  CHECK(j.contains("footer"));
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"verify", "--m-max", "5"}).code == kExitPass);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({"verify", "--m-min", "1"}).code == kExitUsage);
  CHECK(run_cli({"verify", "--m-min", "9", "--m-max", "3"}).code == kExitUsage);
  CHECK(run_cli({"verify", "--checks", "bogus"}).code == kExitUsage);
  CHECK(run_cli({"row", "--m", "-1"}).code == kExitUsage);
  CHECK(run_cli({"table", "--float-digits", "-2"}).code == kExitUsage);
  CHECK(run_cli({"verify", "--format", "xml"}).code == kExitUsage);
  CHECK(run_cli({"--help"}).code == kExitPass);
}

TEST_CASE("malformed cache exits 2 with a line number") {
  const auto p = write_temp("malformed.tsv", "0\t0\t1\t1\n1\t0\t3\t2\n1\t1\tone\t1\n");
  const Run r = run_cli({"verify", "--m-max", "4", "--cache", p.string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("a corrupted cache row exits 1 with a witness") {
  // Row 4 with d_2(4) halved: still well-formed, but mathematically wrong.
  std::string body = run_cli({"row", "--m", "3", "--format", "csv"}).out;
  std::string row4 = run_cli({"row", "--m", "4", "--format", "csv"}).out;
  for (char& ch : body)
    if (ch == ',') ch = '\t';
  std::istringstream in(row4);
  std::string line, bad;
  while (std::getline(in, line)) {
    if (line.rfind("4,2,", 0) == 0) line = "4,2,1095,64";
    for (char& ch : line)
      if (ch == ',') ch = '\t';
    bad += line + "\n";
  }
  CHECK(row4.find("4,2,1095,32\n") != std::string::npos);
  const auto p = write_temp("corrupt.tsv", body + bad);
  const Run r = run_cli({"verify", "--m-min", "4", "--m-max", "4", "--cache", p.string(), "--format", "json",
                         "--no-timing"});
  CHECK(r.code == kExitFail);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["report"]["all_pass"] == false);
  REQUIRE_FALSE(j["report"]["failures"].empty());
  const auto& f = j["report"]["failures"][0];
  CHECK(f.contains("lhs"));
  CHECK(f["m"] == 4);
}

TEST_CASE("write-cache round trip") {
  const auto p = std::filesystem::temp_directory_path() / "bmoll_cli_written.tsv";
  std::filesystem::remove(p);
  CHECK(run_cli({"row", "--m", "6", "--write-cache", p.string()}).code == kExitPass);
  const Run r = run_cli({"row", "--m", "6", "--format", "csv", "--cache", p.string()});
  CHECK(r.code == kExitPass);
  CHECK(r.out == run_cli({"row", "--m", "6", "--format", "csv", "--closed-form"}).out);
}

TEST_CASE("json output is deterministic") {
  const Run a = run_cli({"verify", "--m-max", "12", "--format", "json"});
  const Run b = run_cli({"verify", "--m-max", "12", "--format", "json"});
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  CHECK(ja["report"].dump() == jb["report"].dump());
  const Run c = run_cli({"verify", "--m-max", "12", "--format", "json", "--no-timing"});
  const Run d = run_cli({"verify", "--m-max", "12", "--format", "json", "--no-timing"});
  CHECK(c.out == d.out);
  CHECK_FALSE(nlohmann::json::parse(c.out).contains("footer"));
  const Run e = run_cli({"verify", "--m-max", "12", "--format", "csv"});
  const Run f = run_cli({"verify", "--m-max", "12", "--format", "csv"});
  CHECK(e.out == f.out);
}

TEST_CASE("golden files") {
  CHECK(run_cli({"row", "--m", "2", "--format", "json"}).out == read_file(golden("row_m2.json")));
  CHECK(run_cli({"verify", "--m-max", "4", "--format", "json", "--no-timing"}).out ==
        read_file(golden("verify_m4.json")));
  CHECK(run_cli({"verify", "--m-max", "4", "--format", "csv"}).out == read_file(golden("verify_m4.csv")));
  CHECK(run_cli({"table", "--m", "8", "--format", "json"}).out == read_file(golden("table_m8.json")));
  const Run bad = run_cli({"verify", "--m-min", "4", "--m-max", "4", "--cache", golden("corrupt_cache.tsv").string(),
                           "--format", "json", "--no-timing"});
  CHECK(bad.code == kExitFail);
  CHECK(bad.out == read_file(golden("verify_corrupt_m4.json")));
}

TEST_CASE("other commands") {
  const Run s = run_cli({"scan", "--m-min", "4", "--m-max", "12", "--format", "json", "--no-timing"});
  CHECK(s.code == kExitPass);
  const auto js = nlohmann::json::parse(s.out);
  CHECK(js["report"]["all_pass"] == true);

  const Run b = run_cli({"bessel", "--n-max", "20", "--format", "csv"});
  CHECK(b.code == kExitPass);
  CHECK(b.out.find("bessel,19,19,") != std::string::npos);

  const Run in = run_cli({"integral", "--m-max", "2", "--a", "0,1", "--format", "json", "--no-timing"});
  CHECK(in.code == kExitPass);
  CHECK(run_cli({"integral", "--a", "-1"}).code == kExitUsage);
}
