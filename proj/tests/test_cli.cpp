#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef ELLSW_CLI
#define ELLSW_CLI "ellsw"
#endif
#ifndef ELLSW_DATA_DIR
#define ELLSW_DATA_DIR "data"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;  // stdout followed by stderr
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(ELLSW_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("ellsw_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

std::string data(const std::string& rel) { return std::string(ELLSW_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("group") {
  auto r = run("group --family DD --m 3 --n 2");
  CHECK(r.code == 0);
  CHECK(has(r, "order              24"));
  CHECK(has(r, "scalar order       6"));

  r = run("group --family II --m 1 --json");
  CHECK(r.code == 0);
  CHECK(has(r, "\"order\":120"));
  CHECK(has(r, "\"abelianization\":[]"));

  r = run("group --family DD --m 2 --n 3");
  CHECK(r.code == 1);
  CHECK(has(r, "m must be odd"));
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run("").code == 1);
  CHECK(run("nonsense").code == 1);
  CHECK(run("group --m 3").code == 1);
  CHECK(run("group --family TT --m 1 --n 3").code == 1);
  CHECK(run("group --family XX --m 1").code == 1);
  CHECK(run("swdim --family TT --m 2").code == 1);  // gcd(m, 6) = 1 required
  CHECK(run("swdim --sweep --family TT --m 1").code == 1);
  CHECK(run("audit").code == 1);
  CHECK(run("group --help").code == 0);
}

TEST_CASE("seifert") {
  auto r = run("seifert --family OO --m 5");
  CHECK(r.code == 0);
  CHECK(has(r, "(2,1) (3,2) (4,1)"));
  r = run("seifert --family II --m 13 --json");
  CHECK(has(r, "[5,3]"));
}

TEST_CASE("swdim") {
  auto r = run("swdim --family II --m 7");
  CHECK(r.code == 0);
  CHECK(has(r, "d(E)               4"));
  CHECK(has(r, "S0                 32/1"));
  CHECK(has(r, "S1                 -672/1"));
  CHECK(has(r, "S2                 -560/1"));
  CHECK(has(r, "S3                 0/1"));
  CHECK(has(r, "closed form        4 PASS"));

  r = run("swdim --family TT --m 1 --json");
  CHECK(r.code == 0);
  CHECK(has(r, "\"dE\":8"));

  r = run("swdim --sweep --max-order 600");
  CHECK(r.code == 0);
  CHECK(has(r, "mismatches 0"));
  CHECK(!has(r, "FAIL"));
}

TEST_CASE("verify-rho") {
  auto r = run("verify-rho --family DD --m 1 --n 3");
  CHECK(r.code == 0);
  CHECK(has(r, "f(h z) = mu_2^6 f(z)"));
  CHECK(has(r, "f(x z) = zeta_12^6 f(z) = -f(z)  holds"));
  CHECK(has(r, "PASS"));
  r = run("verify-rho --family TD --m 3 --json");
  CHECK(r.code == 0);
  CHECK(has(r, "\"result\":\"PASS\""));
}

TEST_CASE("audit") {
  auto r = run("audit --input " + data("audit/member_dd_3_2.audit"));
  CHECK(r.code == 0);
  CHECK(has(r, "slack              0/1"));
  r = run("audit --json --input " + data("audit/ii_11_p3_pair.audit"));
  CHECK(r.code == 0);
  CHECK(has(r, "\"slack\":\"-13/11\""));

  fs::path bad = scratch("bad.audit");
  std::ofstream(bad) << "{\n  \"class\": {\"CC\": \"1/1\",\n  \"KC\": }\n}\n";
  r = run("audit --input " + bad.string());
  CHECK(r.code == 2);
  CHECK(has(r, "line 3"));

  std::ofstream(bad) << "{\"class\": {\"CC\": \"1\", \"KC\": \"0\"}, \"points\": [{\"order\": 5, \"group_order\": 24}]}";
  r = run("audit --input " + bad.string());
  CHECK(r.code == 2);
  CHECK(has(r, "/points/0"));

  CHECK(run("audit --input " + scratch("missing.audit").string()).code == 2);
}

TEST_CASE("identical invocations give byte-identical output") {
  for (std::string args : {"swdim --family II --m 7 --json", "group --family OO --m 5 --json",
                           "verify-rho --family DC --m 2 --n 3 --json", "swdim --sweep --max-order 400 --json"}) {
    auto a = run(args), b = run(args);
    CAPTURE(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("catalog: append, verify, drift") {
  fs::path cat = scratch("catalog.ndjson");
  fs::remove(cat);
  auto r = run("swdim --sweep --max-order 200 --catalog " + cat.string());
  CHECK(r.code == 0);
  CHECK(has(r, "drift 0"));
  std::ifstream in(cat);
  std::string first;
  std::getline(in, first);
  CHECK(first.find("\"key\":\"DD/1/2\"") != std::string::npos);
  CHECK(first.find("\"recorded_at\"") != std::string::npos);
  in.close();

  // environment fallback, second pass only verifies
  auto size = fs::file_size(cat);
  r = run("swdim --sweep --max-order 200", "ELLSW_CATALOG=" + cat.string());
  CHECK(r.code == 0);
  CHECK(has(r, "appended 0"));
  CHECK(fs::file_size(cat) == size);

  // single-spec subcommands share the catalog
  r = run("group --family II --m 7 --catalog " + cat.string());
  CHECK(r.code == 0);
  CHECK(has(r, "II/7/- appended"));
  r = run("swdim --family II --m 7 --catalog " + cat.string());
  CHECK(has(r, "II/7/- matched"));

  // tamper with a stored value
  std::stringstream ss;
  ss << std::ifstream(cat).rdbuf();
  std::string text = ss.str();
  auto pos = text.find("\"dE\":4");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"dE\":6");
  std::ofstream(cat) << text;
  r = run("swdim --sweep --max-order 200 --catalog " + cat.string());
  CHECK(r.code == 3);
  CHECK(has(r, "drift"));

  std::ofstream(cat, std::ios::app) << "not json\n";
  CHECK(run("group --family DD --m 1 --n 2 --catalog " + cat.string()).code == 2);
  fs::remove_all(cat.parent_path());
}
