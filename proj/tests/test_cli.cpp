#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "privperm/cli.hpp"
#include "privperm/counting.hpp"
#include "privperm/oeis.hpp"

using namespace privperm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const cli::CountFn& formula = {}) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, formula);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(PRIVPERM_FIXTURE_DIR) + "/" + name; }

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

// count_rule with one deliberately wrong value.
BigCount corrupted(RuleKind rule, std::uint64_t n) {
  auto v = count_rule(rule, n);
  if (rule == RuleKind::P4 && n == 5) v += BigCount(1);
  return v;
}

}  // namespace

TEST_CASE("terms: delimited output") {
  auto r = run({"terms", "p1", "1", "10", "--format", "delimited"});
  CHECK(r.code == 0);
  CHECK(trim(r.out) == "1 2 4 8 20 48 216 576 1392 7200");
  r = run({"terms", "C2", "1", "10", "--format", "delimited"});
  CHECK(trim(r.out) == "1 2 6 8 40 96 168 384 1728 15360");
  r = run({"terms", "p2", "5", "5", "--format", "delimited"});
  CHECK(trim(r.out) == "16");
  r = run({"terms", "p2", "1", "3", "--format", "delimited", "--delimiter", ","});
  CHECK(trim(r.out) == "1,2,4");
}

TEST_CASE("terms: default table") {
  const auto r = run({"terms", "p5", "4", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "n  P5(n)  [A363785]\n4  6\n5  16\n6  28\n");
}

TEST_CASE("terms: b-file output parses back") {
  const auto r = run({"terms", "c1", "1", "60", "--format", "bfile"});
  CHECK(r.code == 0);
  const auto parsed = parse_bfile(r.out);
  CHECK(parsed.offset == 1);
  CHECK(parsed.values.size() == 60);
  CHECK(parsed.at_index(10) == BigCount(57600));
  CHECK(emit_bfile(parsed) == r.out);
}

TEST_CASE("terms: usage errors exit 2") {
  CHECK(run({"terms", "p1", "5", "4"}).code == 2);
  CHECK(run({"terms", "p1", "0", "4"}).code == 2);
  CHECK(run({"terms", "p9", "1", "4"}).code == 2);
  CHECK(run({"terms", "p1", "1"}).code == 2);
  CHECK(run({"terms", "p1", "1", "2", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "p1", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n3,5,1,4,6,2\n") != std::string::npos);
  r = run({"enumerate", "p2", "6"});
  CHECK(r.out.find("3,4,1,5,6,2") == std::string::npos);
  r = run({"enumerate", "p4", "6"});
  CHECK(r.out.substr(r.out.rfind("total:")) == "total: 28\n");
  r = run({"enumerate", "p1", "1"});
  CHECK(r.out == "1\ntotal: 1\n");
  CHECK(run({"enumerate", "p1", "13"}).code == 2);
  CHECK(run({"enumerate", "p1", "5", "--limit", "4"}).code == 2);
  CHECK(run({"enumerate", "p1", "0"}).code == 2);
}

TEST_CASE("crosscheck") {
  auto r = run({"crosscheck", "--max-n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("p5 5 formula=16 oracle=16 ok") != std::string::npos);
  CHECK(r.out.find("crosscheck passed: 56") != std::string::npos);
  CHECK(run({"crosscheck", "--max-n", "1"}).code == 0);
  CHECK(run({"crosscheck", "--max-n", "13"}).code == 2);

  r = run({"crosscheck", "--max-n", "6"}, corrupted);
  CHECK(r.code == 1);
  CHECK(r.err.find("rule p4, n=5: formula 13 != oracle 12") != std::string::npos);
}

TEST_CASE("verify against shipped fixtures") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"p1", "b358056.txt"}, {"p2", "b095236.txt"}, {"p3", "b361295.txt"}, {"p4", "b095912.txt"},
      {"p5", "b363785.txt"}, {"c1", "b361296.txt"}, {"c2", "b095239.txt"},
  };
  for (const auto& [rule, file] : cases) {
    CAPTURE(rule);
    const auto r = run({"verify", rule, "--bfile", fixture(file), "--max-n", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all 10 match") != std::string::npos);
  }
  // default --max-n follows the fixture
  CHECK(run({"verify", "c1", "--bfile", fixture("b361296.txt")}).code == 0);
  // shorter computed range compares the overlap only
  CHECK(run({"verify", "c1", "--bfile", fixture("b361296.txt"), "--max-n", "4"}).out.find("all 4 match") !=
        std::string::npos);
}

TEST_CASE("verify failures") {
  auto r = run({"verify", "p1", "--bfile", fixture("b358056_corrupted.txt")});
  CHECK(r.code == 1);
  CHECK(r.err.find("mismatch at index 7: computed 216, reference 217") != std::string::npos);

  // wrong sequence for the rule
  CHECK(run({"verify", "p2", "--bfile", fixture("b358056.txt")}).code == 1);
  CHECK(run({"verify", "p1", "--bfile", fixture("missing.txt")}).code == 1);
  CHECK(run({"verify", "p1"}).code == 2);
  CHECK(run({"verify", "p1", "--bfile", fixture("b358056.txt"), "--fetch"}).code == 2);
}

TEST_CASE("verify --fetch through a mock server and cache") {
  httplib::Server server;
  int hits = 0;
  server.Get("/A363785/b363785.txt", [&](const httplib::Request&, httplib::Response& res) {
    ++hits;
    std::ifstream in(fixture("b363785.txt"));
    std::stringstream body;
    body << in.rdbuf();
    res.set_content(body.str(), "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  const std::string base = "http://127.0.0.1:" + std::to_string(port);

  CHECK(run({"verify", "p5", "--fetch", "--base-url", base}).code == 0);
  CHECK(hits == 1);

  ::setenv(kBaseUrlEnvVar, base.c_str(), 1);
  CHECK(run({"verify", "p5", "--fetch"}).code == 0);
  CHECK(hits == 2);
  // not served -> 404 -> failure
  const auto missing = run({"verify", "p1", "--fetch"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("not found") != std::string::npos);
  ::unsetenv(kBaseUrlEnvVar);

  const auto cache = std::filesystem::temp_directory_path() / "privperm_cli_cache_test";
  std::filesystem::remove_all(cache);
  CHECK(run({"verify", "p5", "--fetch", "--base-url", base, "--cache-dir", cache.string()}).code == 0);
  CHECK(run({"verify", "p5", "--fetch", "--base-url", base, "--cache-dir", cache.string()}).code == 0);
  CHECK(hits == 3);
  CHECK(std::filesystem::exists(cache / "b363785.txt"));
  std::filesystem::remove_all(cache);

  server.stop();
  th.join();
}

TEST_CASE("multiplicity") {
  CHECK(run({"multiplicity", "4"}).out == "1:2 2:1 4:1\n");
  CHECK(run({"multiplicity", "7", "--k", "1"}).out == "4\n");
  CHECK(run({"multiplicity", "5", "--k", "4"}).out == "0\n");
  CHECK(run({"multiplicity", "0"}).code == 2);
  CHECK(run({"multiplicity", "4", "--k", "0"}).code == 2);
}

TEST_CASE("sample") {
  const auto a = run({"sample", "p2", "10", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"sample", "p2", "10", "--seed", "42"}).out);
  CHECK(run({"sample", "x1", "10"}).code == 2);
}
