#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ciflie/cli.hpp"

using namespace ciflie;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, CliOptions opts = {}) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, opts);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(CIFLIE_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    const Run r = run({"validate", data("minimal.cifl")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("1 space(s)") != std::string::npos);
    CHECK(run({"validate", data("no-such-file.cifl")}).code == kExitLoad);
  }

  TEST_CASE("load errors are located") {
    const auto path = std::filesystem::temp_directory_path() / "ciflie_cli_bad.cifl";
    std::ofstream(path) << "field 3\nspace H dim 1 parity 0\ncifset A on H default 0 0 1 1\nentry A 1 deg 3/4 1/2 1/2 0\n";
    const Run r = run({"validate", path.string()});
    CHECK(r.code == kExitLoad);
    CHECK(r.err.find(":4:") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"check", "ideal", data("heisenberg.cifl")}).code == kExitUsage);
    CHECK(run({"check", "ideal", data("heisenberg.cifl"), "--name", "Q"}).code == kExitUsage);
    CHECK(run({"check", "direct-sum", data("heisenberg.cifl"), "--name", "A"}).code == kExitUsage);
    CHECK(run({"compute", "sum", data("heisenberg.cifl"), "--left", "A"}).code == kExitUsage);
    CHECK(run({"compute", "scalar", data("heisenberg.cifl"), "--left", "A"}).code == kExitUsage);
    CHECK(run({"compute", "sum", data("heisenberg.cifl"), "--left", "A", "--right", "B", "--oracle"}).code ==
          kExitUsage);
    CHECK(run({"verify", "thrm-99", data("heisenberg.cifl")}).code == kExitUsage);
    CHECK(run({"verify", "thrm-4", data("heisenberg.cifl"), "--chain-length", "5"}).code == kExitUsage);
    CHECK(run({"verify", "thrm-4", data("heisenberg.cifl"), "--space", "Q"}).code == kExitUsage);
    CHECK(run({"--version"}).code == kExitOk);
  }

  TEST_CASE("check") {
    CHECK(run({"check", "subspace", data("heisenberg.cifl"), "--name", "N"}).code == kExitOk);
    CHECK(run({"check", "graded", data("heisenberg.cifl"), "--name", "N"}).code == kExitOk);
    CHECK(run({"check", "homogeneous", data("heisenberg.cifl"), "--name", "A", "--with", "B"}).code == kExitOk);
    CHECK(run({"check", "anti-hom", data("heisenberg.cifl"), "--name", "phi"}).code == kExitOk);
    CHECK(run({"check", "direct-sum", data("heisenberg.cifl"), "--name", "A", "--with", "B"}).code == kExitProperty);

    const Run r = run({"check", "ideal", data("heisenberg.cifl"), "--name", "N", "--format", "json"});
    CHECK(r.code == kExitProperty);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["holds"] == false);
    CHECK(j["witness"] == nlohmann::json::array({{0, 1}, {0, 1}}));
    CHECK(j["command"] == "check");
  }

  TEST_CASE("compute") {
    const Run r = run({"compute", "bracket", data("heisenberg.cifl"), "--left", "A", "--right", "B", "--oracle"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("# oracle: agrees") != std::string::npos);
    CHECK(r.out.find("entry result 1 0 deg 2/3 1/2 1/4 1/3") != std::string::npos);

    const Run j = run({"compute", "scalar", data("heisenberg.cifl"), "--left", "A", "--alpha", "0", "--format", "json"});
    CHECK(j.code == kExitOk);
    const auto doc = nlohmann::json::parse(j.out);
    for (std::size_t i = 1; i < doc["result"].size(); ++i) CHECK(doc["result"][i]["mem"][0] == "0/1");
    CHECK(run({"compute", "scalar", data("heisenberg.cifl"), "--left", "A", "--alpha", "-1"}).code == kExitOk);

    for (const char* op : {"image", "preimage"}) {
      CHECK(run({"compute", op, data("heisenberg.cifl"), "--left", "A", "--map", "phi"}).code == kExitOk);
    }
    CHECK(run({"compute", "intersection", data("heisenberg.cifl"), "--left", "A", "--right", "N"}).code == kExitOk);

    const auto path = std::filesystem::temp_directory_path() / "ciflie_cli_out.cifl";
    CHECK(run({"compute", "sum", data("heisenberg.cifl"), "--left", "A", "--right", "B", "--out", path.string()}).out ==
          "");
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first.rfind("# ciflie ", 0) == 0);
    std::filesystem::remove(path);
  }

  TEST_CASE("verify") {
    const Run r = run({"verify", "thrm-4", data("heisenberg.cifl"), "--trials", "100", "--seed", "7", "--format",
                       "json"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["trials"] == 100);
    CHECK(j["seed"] == 7);
    CHECK(j["failures"].empty());
    CHECK(run({"verify", "thrm-4", data("heisenberg.cifl"), "--trials", "100", "--seed", "7", "--format", "json"})
              .out == r.out);

    const Run anti = run({"verify", "anti-ideal", data("heisenberg.cifl")});
    CHECK(anti.code == kExitOk);
    CHECK(anti.out.find("unspecified") != std::string::npos);
    CHECK(run({"verify", "neg-controls", data("heisenberg.cifl")}).code == kExitOk);
    CHECK(run({"verify", "lem-5", data("solvable3.cifl"), "--trials", "10", "--space", "S"}).code == kExitOk);
  }

  TEST_CASE("color only when asked") {
    const std::vector<std::string> args{"check", "subspace", data("heisenberg.cifl"), "--name", "N"};
    CHECK(run(args).out.find('\x1b') == std::string::npos);
    CHECK(run(args, CliOptions{true}).out.find('\x1b') != std::string::npos);
  }
}
