// End-to-end tests of the command-line tool.  The first program argument is
// the path to the built binary; remaining arguments go to the test runner.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_cli;
std::filesystem::path g_dir;

struct RunResult {
  int exit_code;
  std::string out;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  static int counter = 0;
  std::filesystem::path log = g_dir / ("run" + std::to_string(counter++) +
                                       ".log");
  std::string cmd = g_cli + " " + args + " > " + log.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path model_a1() {
  static std::filesystem::path path;
  if (path.empty()) {
    path = g_dir / "a1.json";
    RunResult r = run("catalog jimbo --type A --rank 1 --q 1.2 --out " +
                      path.string());
    REQUIRE(r.exit_code == 0);
  }
  return path;
}

std::filesystem::path model_c2() {
  static std::filesystem::path path;
  if (path.empty()) {
    path = g_dir / "c2.json";
    RunResult r = run("catalog jimbo --type C --rank 2 --q 1.2 --out " +
                      path.string());
    REQUIRE(r.exit_code == 0);
  }
  return path;
}

}  // namespace

TEST_CASE("catalog writes a model file and check accepts it") {
  RunResult r = run("check " + model_a1().string() + " --suite all");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("all_pass").get<bool>());
  CHECK(j.at("model").at("content_hash").get<std::string>().rfind(
            "fnv1a64:", 0) == 0);
  CHECK(j.at("checks").size() >= 3);
}

TEST_CASE("height models go through the same pipeline") {
  std::filesystem::path p = g_dir / "sos22.json";
  CHECK(run("catalog sos --n 2 --level 2 --out " + p.string()).exit_code == 0);
  RunResult r = run("check " + p.string());
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out).at("all_pass").get<bool>());
  CHECK(run("ribbon " + p.string()).exit_code == 0);
}

TEST_CASE("cubic suite runs from metadata parameters") {
  RunResult r = run("check " + model_c2().string() +
                    " --suite bmw --lambda-from-meta");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("all_pass").get<bool>());
  CHECK(j.at("checks").size() >= 19);
}

TEST_CASE("a non-closable model makes ribbon exit with status one") {
  // identity weights satisfy the braid relation but have a singular mixed
  // sector, so the closure construction must refuse
  nlohmann::json j{
      {"vertices", {"v"}},
      {"edges",
       {{{"id", "u1"}, {"src", "v"}, {"dst", "v"}},
        {{"id", "u2"}, {"src", "v"}, {"dst", "v"}}}},
      {"faces", nlohmann::json::array()}};
  for (const char* a : {"u1", "u2"})
    for (const char* b : {"u1", "u2"})
      j["faces"].push_back({{"r", a},
                            {"p", a},
                            {"q", b},
                            {"s", b},
                            {"w", {{"re", 1.0}, {"im", 0.0}}}});
  std::filesystem::path p = g_dir / "identity.json";
  std::ofstream(p) << j.dump(2);
  CHECK(run("check " + p.string() + " --suite ybe").exit_code == 0);
  RunResult r = run("ribbon " + p.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("NotClosable") != std::string::npos);
}

TEST_CASE("a failing check exits with status one") {
  auto j = nlohmann::json::parse(slurp(model_a1()));
  j["faces"][0]["w"]["re"] = j["faces"][0]["w"]["re"].get<double>() + 0.05;
  std::filesystem::path bad = g_dir / "bad.json";
  std::ofstream(bad) << j.dump(2);
  RunResult r = run("check " + bad.string() + " --suite ybe");
  CHECK(r.exit_code == 1);
  auto rep = nlohmann::json::parse(r.out);
  CHECK(!rep.at("all_pass").get<bool>());
  CHECK(rep.at("checks")[0].contains("witness"));
}

TEST_CASE("malformed input and bad parameters exit with status two") {
  std::filesystem::path junk = g_dir / "junk.json";
  std::ofstream(junk) << "{ this is not json";
  CHECK(run("check " + junk.string()).exit_code == 2);
  CHECK(run("check " + (g_dir / "no_such_file.json").string()).exit_code == 2);
  CHECK(run("catalog jimbo --type E --rank 2").exit_code == 2);
  CHECK(run("catalog jimbo --type B --rank 2 --q 1.21").exit_code == 2);
  CHECK(run("catalog sos --n 1 --level 2").exit_code == 2);
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("check " + model_a1().string() + " --format xml").exit_code == 2);
}

TEST_CASE("the tolerance environment variable tightens checks") {
  // needs a model whose braid residual is nonzero (rounding-level) so an
  // absurdly small tolerance flips the verdict
  std::string base = "check " + model_c2().string() + " --suite ybe";
  std::string log = (g_dir / "env.log").string();
  int status = std::system(("RIBBONLAB_TOL=1e-20 " + g_cli + " " + base +
                            " > " + log + " 2>&1")
                               .c_str());
  CHECK(WEXITSTATUS(status) == 1);
  auto j = nlohmann::json::parse(slurp(log));
  CHECK(j.at("run_config").at("tolerance").get<double>() == 1e-20);

  // an explicit --tol wins over the environment
  status = std::system(("RIBBONLAB_TOL=1e-20 " + g_cli + " " + base +
                        " --tol 1e-9 > " + log + " 2>&1")
                           .c_str());
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(nlohmann::json::parse(slurp(log))
            .at("run_config")
            .at("tolerance")
            .get<double>() == 1e-9);
}

TEST_CASE("csv reports carry the check table header") {
  RunResult r = run("check " + model_a1().string() +
                    " --suite ybe --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("check,pass,residual,witness\n", 0) == 0);
  CHECK(r.out.find("star-triangular") != std::string::npos);
}

TEST_CASE("report files are written and reproducible") {
  std::filesystem::path rep1 = g_dir / "rep1.json";
  std::filesystem::path rep2 = g_dir / "rep2.json";
  CHECK(run("check " + model_a1().string() + " --report " + rep1.string())
            .exit_code == 0);
  CHECK(run("check " + model_a1().string() + " --report " + rep2.string())
            .exit_code == 0);
  auto j1 = nlohmann::json::parse(slurp(rep1));
  auto j2 = nlohmann::json::parse(slurp(rep2));
  CHECK(j1 == j2);
  CHECK(j1.at("model").at("content_hash") == j2.at("model").at("content_hash"));
}

TEST_CASE("closure operators are reported with their residuals") {
  RunResult r = run("drinfeld " + model_a1().string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("all_pass").get<bool>());
  CHECK(j.at("inverse_residual").get<double>() < 1e-10);
  CHECK(j.at("u1").size() == 2);
  CHECK(j.at("edge_order").size() == 2);
}

TEST_CASE("ribbon solutions come in a sign pair with evidence flags") {
  RunResult r = run("ribbon " + model_a1().string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("all_pass").get<bool>());
  CHECK(j.at("solutions").size() == 2);
  CHECK(j.at("solutions_exhaustive_evidence").get<bool>());
  for (const auto& sol : j.at("solutions")) {
    CHECK(sol.at("v2_residual").get<double>() < 1e-10);
    CHECK(sol.at("quotients").size() >= 1);
  }
}

TEST_CASE("invariant evaluation normalises the trefoil") {
  RunResult r = run("invariant --model " + model_a1().string() +
                    " --strands 2 --braid \"1 1 1\"");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  double re = j.at("normalized").at("v").at("re").get<double>();
  CHECK(std::abs(re - 0.12616704) < 1e-6);
  CHECK(j.at("writhe").get<int>() == 3);

  RunResult suite = run("invariant --model " + model_a1().string() +
                        " --strands 2 --braid \"1 1 1\" --markov-suite "
                        "--markov-trials 5");
  CHECK(suite.exit_code == 0);
  auto js = nlohmann::json::parse(suite.out);
  CHECK(js.at("markov_suite").at("pass").get<bool>());
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli> [doctest options]\n",
                 argv[0]);
    return 64;
  }
  g_cli = argv[1];
  char tmpl[] = "/tmp/ribbonlab-cli-XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::perror("mkdtemp");
    return 65;
  }
  g_dir = tmpl;
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  int rc = ctx.run();
  std::error_code ec;
  std::filesystem::remove_all(g_dir, ec);
  return rc;
}
