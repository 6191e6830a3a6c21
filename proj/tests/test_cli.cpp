#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string path = "cli_out.txt";
  std::string cmd = env + (env.empty() ? "" : " ") + RINGOID_CLI + std::string(" ") + args + " > " + path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string data(const std::string& name) { return std::string(RINGOID_DATA) + "/" + name; }

}  // namespace

TEST_CASE("validate") {
  auto ok = run("validate " + data("z4_times2.json"));
  CHECK(ok.code == 0);
  auto proj = run("validate " + data("z2_projection.json"));
  CHECK(proj.code == 1);
  CHECK(proj.out.find("[1,2]") != std::string::npos);
  auto cubic = run("validate " + data("z2_cubic.json"));
  CHECK(cubic.code == 1);
  CHECK(cubic.out.find("[2,2]") != std::string::npos);
  CHECK(run("validate " + data("arrow.json")).code == 0);
}

TEST_CASE("subcommands") {
  auto pi = run("pi " + data("z4_times2.json"));
  CHECK(pi.code == 0);
  CHECK(pi.out.find("pi0 size: 2") != std::string::npos);
  CHECK(pi.out.find("pi1 size: 2") != std::string::npos);

  auto g = run("classify " + data("graph_id_z4.json"));
  CHECK(g.code == 0);
  CHECK(g.out.find("anamorphism") != std::string::npos);
  auto a = run("classify " + data("adm_id_z4.json"));
  CHECK(a.out.find("admissible") != std::string::npos);

  CHECK(run("cone " + data("z4_times2.json")).code == 0);
  CHECK(run("convert " + data("z4_times2.json")).code == 0);
  CHECK(run("butterfly " + data("adm_id_z4.json")).code == 0);
  CHECK(run("adm " + data("graph_id_z4.json")).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("validate /nonexistent.json").code == 2);
  CHECK(run("--bogus").code == 2);
  CHECK(run("laws --suite nope").code == 2);
  CHECK(run("--budget carrier=8 cone " + data("z4_times2.json")).code == 3);
  CHECK(run("cone " + data("z4_times2.json"), "RINGOID_BUDGET=carrier=8").code == 3);
  // cubic truncation cannot be turned into a quasi-ideal
  CHECK(run("convert " + data("z2_cubic.json")).code == 1);
}
