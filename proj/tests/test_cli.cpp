#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "catrep/report.hpp"

using namespace catrep;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string("cd '") + CATREP_SAMPLES + "' && '" + CATREP_BINARY + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("catrep_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("hilbert polynomial of OI M(1)") {
  auto r = run("--cat oi --field q --horizon 6 hilbert M1.pres");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "polynomial n, onset 0"));

  r = run("--cat oi --field q --horizon 6 --format json hilbert M1.pres");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["version"] == 1);
  auto fit = j["items"][1];
  CHECK(fit["kind"] == "hilbert_fit");
  CHECK(fit["coefficients"] == nlohmann::json::array({"0", "1"}));
  CHECK(fit["onset"] == 0);
  CHECK(fit["valid_through"] == 6);
}

TEST_CASE("probe-sd on M(1)/IM(1)") {
  auto r = run("--cat oi --field fp:101 --horizon 6 probe-sd torsion.pres");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "DSV = 0; SDV dims = [1,1,1,1,1]"));
}

TEST_CASE("decompose degree-zero torsion") {
  auto r = run("--cat fi --field q --horizon 5 decompose torsion0.pres");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "stabilized at n=1; V_sin dims [1,0,0,0,0]"));
}

TEST_CASE("shift, homology and oracle on M(1)/IM(1)") {
  auto r = run("--field fp:101 shift torsion.pres");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "key sequence exact (degrees 0..5)"));
  r = run("--field fp:101 homology torsion.pres");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "H_1 dims = [0,0,1,0,0,0,0] (degrees 0..6)"));
  r = run("--field fp:101 oracle torsion.pres");
  CHECK(r.code == 0);
  CHECK_FALSE(contains(r.out, "DISAGREE"));
}

TEST_CASE("verify reports skipped checks with reasons") {
  auto r = run("--field fp:101 --format json verify torsion.pres");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  int skipped = 0;
  for (const auto& item : j["items"])
    if (item["kind"] == "theorem_check" && item["status"] == "skipped") {
      CHECK(item.contains("reason"));
      ++skipped;
    }
  CHECK(skipped > 0);
}

TEST_CASE("parse errors exit 1 with a position") {
  auto path = temp_file("bad.pres");
  std::ofstream(path) << "catrep-presentation 1\ncategory oi\ngen a deg 1\nrel 2: 1->2:[3]@a\n";
  auto r = run("homology '" + path.string() + "'");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "line 4, column 8"));
  std::filesystem::remove(path);
  CHECK(run("homology does-not-exist.pres").code == 1);
  CHECK(run("--field fp:4 info M1.pres").code == 1);
  CHECK(run("--nonsense info M1.pres").code == 1);
}

TEST_CASE("inconclusive fits exit 2") {
  auto r = run("--cat fi --horizon 1 hilbert M1.pres");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "inconclusive"));
}

TEST_CASE("normalized presentations round trip") {
  auto first = run("--cat fi --field fp:7 --horizon 4 info --emit-normalized torsion0.pres");
  REQUIRE(first.code == 0);
  auto path = temp_file("norm.pres");
  std::ofstream(path) << first.out;
  auto second = run("info --emit-normalized '" + path.string() + "'");
  CHECK(second.out == first.out);
  auto a = run("--cat fi --field fp:7 --horizon 4 --format json info torsion0.pres");
  auto b = run("--format json info '" + path.string() + "'");
  CHECK(nlohmann::json::parse(a.out)["items"][1] == nlohmann::json::parse(b.out)["items"][1]);
  std::filesystem::remove(path);
}

TEST_CASE("fuzz output is deterministic and names its seed") {
  auto a = run("--cat oi --field fp:101 --horizon 5 --seed 4 --format json fuzz --count 6");
  auto b = run("--cat oi --field fp:101 --horizon 5 --seed 4 --format json fuzz --count 6");
  CHECK(a.out == b.out);
  CHECK(a.code != 3);
  auto j = nlohmann::json::parse(a.out);
  for (const auto& item : j["items"])
    if (item["kind"] == "fuzz_case") CHECK(item["seed"] == 4);
}

TEST_CASE("empty report") {
  Report rep;
  CHECK(rep.json() == "{\"version\":1,\"items\":[]}\n");
  CHECK(rep.text().empty());
}
