#include <bitrans/cli.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <regex>
#include <sstream>

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = bitrans::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string mask_elapsed(std::string s) {
  return std::regex_replace(s, std::regex(R"("elapsed_ms":\d+)"),
                            "\"elapsed_ms\":0");
}

}  // namespace

TEST_CASE("verify subcommand") {
  SECTION("witness mode json") {
    const CliResult r =
        run_cli({"verify", "--b", "13", "--mode", "witness", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["b"] == 13);
    CHECK(j["family"] == "B5n3");
    CHECK(j["pass"] == true);
    CHECK(j["conditions"]["iv"] == true);
  }
  SECTION("even b is a usage error") {
    const CliResult r = run_cli({"verify", "--b", "6"});
    CHECK(r.code == 2);
    CHECK(r.err.find("odd") != std::string::npos);
  }
  SECTION("generic failure exits 1") {
    const CliResult r = run_cli(
        {"verify", "--b", "5", "--mode", "generic", "--height", "0"});
    CHECK(r.code == 1);
  }
  SECTION("mode both emits one merged report") {
    const CliResult r = run_cli(
        {"verify", "--b", "5", "--mode", "both", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "both");
    CHECK(j["attempts"] == 1);
  }
  SECTION("tampered runs exit 1") {
    for (const char* m : {"zero_w", "duplicate_w", "perturb_v"}) {
      const CliResult r = run_cli({"verify", "--b", "5", "--tamper", m});
      CAPTURE(m);
      CHECK(r.code == 1);
    }
  }
  SECTION("tamper needs witness mode") {
    const CliResult r = run_cli(
        {"verify", "--b", "5", "--mode", "generic", "--tamper", "zero_w"});
    CHECK(r.code == 2);
  }
  SECTION("duplicate_w at c = 1 is an input error") {
    const CliResult r = run_cli({"verify", "--b", "9", "--tamper", "duplicate_w"});
    CHECK(r.code == 2);
  }
}

TEST_CASE("verify-range subcommand") {
  SECTION("json stream in ascending order") {
    const CliResult r = run_cli({"verify-range", "--from", "5", "--to", "13",
                                 "--format", "json"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<long> bs;
    while (std::getline(lines, line)) {
      const auto j = nlohmann::json::parse(line);
      CHECK(j["pass"] == true);
      bs.push_back(j["b"].get<long>());
    }
    CHECK(bs == std::vector<long>{5, 7, 9, 11, 13});
  }
  SECTION("text format prints a header and rows") {
    const CliResult r = run_cli({"verify-range", "--from", "5", "--to", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("family") != std::string::npos);
    CHECK(r.out.find("pass") != std::string::npos);
  }
  SECTION("reversed bounds are a usage error") {
    CHECK(run_cli({"verify-range", "--from", "9", "--to", "5"}).code == 2);
  }
  SECTION("bounds below the theorem are a usage error") {
    CHECK(run_cli({"verify-range", "--from", "3", "--to", "9"}).code == 2);
  }
  SECTION("jobs does not change the output") {
    const CliResult seq = run_cli({"verify-range", "--from", "5", "--to", "21",
                                   "--format", "json", "--jobs", "1"});
    const CliResult par = run_cli({"verify-range", "--from", "5", "--to", "21",
                                   "--format", "json", "--jobs", "3"});
    CHECK(seq.code == 0);
    CHECK(par.code == 0);
    CHECK(mask_elapsed(par.out) == mask_elapsed(seq.out));
  }
}

TEST_CASE("transvect subcommand") {
  const CliResult r = run_cli({"transvect", "--r", "1", "--s", "1", "--lhs",
                               "x^2*X^2", "--rhs", "y^2*Y^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "x*y*X*Y\n");

  const CliResult j = run_cli({"transvect", "--r", "1", "--s", "1", "--lhs",
                               "x^2*X^2", "--rhs", "y^2*Y^2", "--format",
                               "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["result"] == "x*y*X*Y");

  SECTION("invalid order is an input error") {
    CHECK(run_cli({"transvect", "--r", "3", "--s", "0", "--lhs", "x^2*X^2",
                   "--rhs", "y^2*Y^2"})
              .code == 2);
  }
  SECTION("unparsable form is an input error") {
    CHECK(run_cli({"transvect", "--r", "0", "--s", "0", "--lhs", "x+X",
                   "--rhs", "y"})
              .code == 2);
  }
}

TEST_CASE("schedule and dims subcommands") {
  const CliResult s = run_cli({"schedule", "--b", "15", "--format", "json"});
  CHECK(s.code == 0);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["family"] == "B5n");
  CHECK(j["n"] == 3);
  CHECK(j["c"] == 3);
  CHECK(j["N"] == 24);

  const CliResult d = run_cli({"dims", "--b", "5", "--format", "json"});
  CHECK(d.code == 0);
  const auto jd = nlohmann::json::parse(d.out);
  CHECK(jd["dim_V3b"] == 24);
  CHECK(jd["moduli_dim"] == 17);
  CHECK(jd["genus"] == 8);

  CHECK(run_cli({"schedule", "--b", "6"}).code == 2);
  CHECK(run_cli({"dims", "--b", "0"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  const CliResult bad = run_cli({"verify", "--b", "5", "--no-such-flag"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"verify", "--b", "5", "--mode", "sideways"}).code == 2);
  CHECK(run_cli({"verify", "--b", "5", "--format", "yaml"}).code == 2);
}
