#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const std::string tool = MAG_TOOL_PATH;

int run(const std::string& args) {
  const int rc = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}

std::vector<char> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("magcli" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen then analyze produces a valid report") {
  TempDir tmp;
  const std::string magc = tmp.file("g.magc");
  const std::string json = tmp.file("g.json");
  REQUIRE(run("gen --tau 8,16 --kind uniform-half --seed 7 -o " + magc) == 0);
  REQUIRE(run("analyze " + magc + " -o " + json) == 0);
  const auto report = slurp(json);
  const std::string text(report.begin(), report.end());
  CHECK(text.find("\"report_version\": 1") != std::string::npos);
  CHECK(text.find("corollary_verdicts") != std::string::npos);
}

TEST_CASE("witness subcommand answers and gates the hypothesis") {
  TempDir tmp;
  const std::string magc = tmp.file("g.magc");
  REQUIRE(run("gen --tau 4,10 --kind uniform-half --seed 3 -o " + magc) == 0);
  CHECK(run("witness " + magc + " --u 0,0 --v 3,9") == 0);
  // j <= i + 2: hypothesis violation is a usage error
  CHECK(run("witness " + magc + " --u 0,7 --v 3,9") == 2);
  CHECK(run("witness " + magc + " --u 0,0 --v 3,x") == 2);
}

TEST_CASE("format and usage errors exit 2") {
  TempDir tmp;
  const std::string magc = tmp.file("t.magc");
  REQUIRE(run("gen --tau 4,8 --seed 1 -o " + magc) == 0);
  // truncate the payload
  const auto bytes = slurp(magc);
  std::ofstream out(magc, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size() - 4));
  out.close();
  CHECK(run("analyze " + magc) == 2);
  CHECK(run("analyze " + tmp.file("missing.magc")) == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("gen --tau 0,4 -o " + tmp.file("x.magc")) == 2);
}

TEST_CASE("expect-random gates the exit code") {
  TempDir tmp;
  const std::string magc = tmp.file("e.magc");
  REQUIRE(run("gen --tau 4,8 --kind empty -o " + magc) == 0);
  CHECK(run("analyze " + magc + " -o " + tmp.file("e.json")) == 0);
  CHECK(run("analyze " + magc + " --expect-random -o " + tmp.file("e2.json")) == 1);
}

TEST_CASE("batch runs are byte-identical across invocations") {
  TempDir tmp;
  const std::string cmd = "batch --tau 4,9 --kind uniform-half --seed 5 --seeds 3 -o ";
  REQUIRE(run(cmd + tmp.file("a.json")) == 0);
  REQUIRE(run(cmd + tmp.file("b.json")) == 0);
  for (int s = 5; s < 8; ++s) {
    CHECK(slurp(tmp.file("a.seed" + std::to_string(s) + ".magc")) ==
          slurp(tmp.file("b.seed" + std::to_string(s) + ".magc")));
    CHECK(slurp(tmp.file("a.seed" + std::to_string(s) + ".json")) ==
          slurp(tmp.file("b.seed" + std::to_string(s) + ".json")));
  }
  auto a = slurp(tmp.file("a.json"));
  auto b = slurp(tmp.file("b.json"));
  CHECK(a == b);
  CHECK(!a.empty());
}
