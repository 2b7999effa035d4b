#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "strlink/builtins.hpp"
#include "strlink/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("NO_COLOR=1 '") + STRLINK_CLI_PATH + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("strlink_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return "'" + p.string() + "'";
  }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("invariants, classify, conway, milnor") {
  TempDir dir;
  const std::string borr = dir.write("borromean.json", strlink::to_json(strlink::borromean(3, 1, 2, 3)).dump());
  const std::string tre = dir.write("trefoil.txt", strlink::to_text(strlink::trefoil_insert(2, 1)));
  const std::string triv = dir.write("trivial.txt", "strands 2;");
  const std::string hopf = dir.write("hopf.txt", "strands 3; x1+ x1+");
  const std::string poin = dir.write("poincare.json", strlink::to_json(strlink::poincare()).dump());

  Run r = run("invariants " + borr);
  CHECK(r.status == 0);
  CHECK(r.out == "{\"mu3\":{\"1,2,3\":1},\"sl2\":{},\"arf\":[0,0,0],\"rochlin\":0}\n");

  r = run("invariants " + triv + " --ambient " + poin);
  CHECK(r.status == 0);
  CHECK(r.out.find("\"rochlin\":1") != std::string::npos);

  CHECK(run("classify " + borr + " " + borr + " --relation y2").out == "EQUIVALENT\n");
  CHECK(run("classify " + tre + " " + triv).out == "NOT EQUIVALENT\n");
  CHECK(run("classify " + tre + " " + tre + " --relation clasp-pass").out == "EQUIVALENT\n");
  CHECK(run("classify " + tre + " " + triv + " --relation pass").status == 1);

  r = run("conway " + tre + " --strands 1");
  CHECK(r.status == 0);
  CHECK(r.out == "1 + z^2\n");
  CHECK(run("conway " + tre + " --strands 1 --json").out.find("\"coefficients\":[1,0,1]") != std::string::npos);

  CHECK(run("milnor " + borr + " --triple 1,2,3").out == "1\n");
  CHECK(run("milnor " + borr + " --triple 2,1,3").out == "-1\n");
  r = run("milnor " + hopf);
  CHECK(r.status == 0);
  CHECK(r.out.find("\"linking\":[[0,1,0],[1,0,0],[0,0,0]]") != std::string::npos);
}

TEST_CASE("algebra, mj, generators") {
  CHECK(run("algebra-normalize 'Y[e1;e1;e1]' --n 2").out == "{\"h2\":[1,0]}\n");
  CHECK(run("algebra-normalize '2 Y[s;s;s]' --n 2").out == "{}\n");
  Run r = run("mj 'Y[a1;b1;s]' --genus 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"element\":\"Y[e1; e2; s]\"") != std::string::npos);
  CHECK(run("mj 'Y[a1;b1;s]' --genus 1 --perm 2,1").out.find("Y[e1; s; e2]") != std::string::npos);
  CHECK(run("generators borromean --n 3 --indices 1,2,3").out ==
        strlink::to_text(strlink::borromean(3, 1, 2, 3)) + "\n");
  CHECK(run("generators poincare").out.find("\"framing\":-1") != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir dir;
  const std::string hopf = dir.write("hopf.txt", "strands 3; x1+ x1+");
  const std::string bad = dir.write("bad.txt", "strands 2; x3+");
  const std::string big = dir.write("big.txt", "strands 1; u2 x1+ x1+ x1+ x1+ x1+ n2");

  CHECK(run("").status == 1);
  CHECK(run("nosuch").status == 1);
  CHECK(run("invariants " + bad).status == 1);
  CHECK(run("invariants /nonexistent/file").status == 1);
  CHECK(run("algebra-normalize 'Y[e1;e2]' --n 2").status == 1);
  CHECK(run("milnor " + hopf + " --triple 1,2,3").status == 3);
  CHECK(run("invariants " + hopf).status == 3);
  CHECK(run("conway " + big + " --strands 1 --crossing-cap 3").status == 2);
  CHECK(run("--crossing-cap 3 conway " + big + " --strands 1").status == 2);
  CHECK(run("conway " + big + " --strands 1 --crossing-cap 0").status == 1);
  const Run self = run("selftest");
  CHECK(self.status == 0);
  CHECK(self.out.find("FAIL") == std::string::npos);
  CHECK(self.out.find("\033[") == std::string::npos);
}

TEST_CASE("output is deterministic") {
  TempDir dir;
  const std::string w = dir.write("w.json", strlink::to_json(strlink::whitehead(4, 3, 1)).dump());
  const Run a = run("milnor " + w + " --magnus-cap 4");
  const Run b = run("milnor " + w + " --magnus-cap 4");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run("invariants " + w).out == run("invariants " + w).out);
}
