// Black-box checks of the command-line contract: exit codes, payload
// formats, JSON/text agreement, inference and determinism.
//
// usage: cli_tests <path-to-cli>

#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

int failures = 0;

struct Result {
  int exit_code = -1;
  std::string out;
};

Result run(const std::string& cli, const std::string& args) {
  Result r;
  FILE* pipe = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    std::printf("FAIL: %s\n", what.c_str());
    ++failures;
  }
}

void expect_exit(const Result& r, int code, const std::string& what) {
  if (r.exit_code != code) {
    std::printf("FAIL: %s (exit %d, expected %d)\n", what.c_str(), r.exit_code, code);
    ++failures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <cli-binary>\n", argv[0]);
    return 64;
  }
  const std::string cli = argv[1];

  // exit code 0 regardless of the mathematical verdict
  expect_exit(run(cli, "certify --poly \"x0*x1*x2\""), 0, "CI verdict exits 0");
  expect_exit(run(cli, "certify --poly \"x0*x1*x2*x3*x4 + x3*x4^4\""), 0,
              "not-CI verdict exits 0");
  // x2 never appears, so the three-variable reading needs the override
  expect_exit(run(cli, "--nvars 3 regseq --gens \"x0;x1;x0 + x1\""), 0,
              "non-regular exits 0");
  expect(run(cli, "--nvars 3 regseq --gens \"x0;x1;x0 + x1\"").out.find("regular: false") !=
             std::string::npos,
         "degenerate triple is not regular");
  expect_exit(run(cli, "regseq --gens \"x0;x1;x0 + x1\""), 3,
              "inferred two variables cannot host three forms");

  // exit code 2: parse errors
  expect_exit(run(cli, "hf --poly \"x0^2 +\""), 2, "dangling operator");
  expect_exit(run(cli, "contract --op \"x$\" --on \"x0\""), 2, "bad token");
  expect_exit(run(cli, "short j --lambda \"1/x\""), 2, "bad rational");
  expect_exit(run(cli, "--nvars 2 hf --poly \"x2^3\""), 2, "index beyond --nvars");
  expect_exit(run(cli, "definitely-not-a-command"), 2, "unknown subcommand");
  expect_exit(run(cli, "sample --poly \"x0*x1*x2\" --type \"2,2,x\" --trials 1 --seed 1"),
              2, "malformed type list");

  // exit code 3: invalid input
  expect_exit(run(cli, "hf --poly \"x0^2 + x1\""), 3, "inhomogeneous H");
  expect_exit(run(cli, "hf --poly \"0\""), 3, "zero polynomial");
  expect_exit(run(cli, "short j --lambda 1"), 3, "excluded lambda");
  expect_exit(run(cli, "certify --poly \"x0*x1*x2\" --gens \"x0^2;x1^2\""), 3,
              "wrong generator arity");
  expect_exit(run(cli, "ann --poly \"x0*x1*x2\""), 3, "ann needs --degree or --mingens");
  expect_exit(run(cli, "ann --poly \"x0*x1*x2\" --degree 2 --mingens"), 3,
              "ann refuses both --degree and --mingens");
  expect_exit(run(cli, "short verify-row --row 9"), 3, "row out of range");
  expect_exit(run(cli, "short verify-row --row 7"), 3, "row 7 needs lambda");

  // payloads
  expect(run(cli, "hf --poly \"x0*x1*x2\"").out == "1,3,3,1\n", "hf payload");
  expect(run(cli, "jac --gens \"x0^2;x1^2;x2^2\"").out == "8*x0*x1*x2\n", "jac payload");
  expect(run(cli, "contract --op \"x0\" --on \"x0^2\"").out == "2*x0\n",
         "contract payload");
  expect(run(cli, "ann --poly \"x0*x1*x2\" --degree 2").out == "x0^2\nx1^2\nx2^2\n",
         "ann slice payload");
  expect(run(cli, "ann --poly \"x1^2*x2 - x0^3\" --mingens").out ==
             "2: x0*x1\n2: x0*x2\n2: x2^2\n3: x0^3 + 3*x1^2*x2\n3: x1^3\n",
         "mingens payload");
  expect(run(cli, "--nvars 3 hf --poly \"x0^3\"").out == "1,1,1,1\n",
         "--nvars override accepted");
  expect(run(cli, "short legendre --lambda -1").out == "-x0^3 + x0*x2^2 + x1^2*x2\n",
         "legendre payload");

  // regseq text fields
  {
    Result r = run(cli, "regseq --gens \"x0^2;x1^2;x2^2\"");
    expect(r.out == "degree: 4\nrows: 18\ncols: 15\nrank: 15\nregular: true\n",
           "regseq witness text");
  }

  // JSON and text modes agree on every numeric/verdict field
  {
    Result text = run(cli, "certify --poly \"x0*x1*x2\"");
    Result json = run(cli, "certify --poly \"x0*x1*x2\" --json");
    expect_exit(json, 0, "json certify runs");
    auto j = nlohmann::json::parse(json.out);
    expect(j["verdict"] == "CI", "json verdict");
    expect(j["type"] == nlohmann::json({2, 2, 2}), "json type");
    expect(j["socle_degree"] == 3, "json socle degree");
    expect(j["regseq"]["rank"] == 15, "json rank");
    expect(j["regseq"]["regular"] == true, "json regular flag");
    expect(j["jacobian_contraction"] == "8", "json jacobian contraction");
    expect(j["paper_conforming"] == true, "json conforming flag");
    expect(text.out.find("verdict: CI") != std::string::npos, "text verdict");
    expect(text.out.find("rank=15") != std::string::npos, "text rank");
    expect(text.out.find("jacobian_contraction: 8") != std::string::npos,
           "text jacobian contraction");
    // stable key order
    expect(json.out.rfind("{\n  \"verdict\"", 0) == 0, "verdict key first");
  }

  {
    auto j = nlohmann::json::parse(
        run(cli, "certify --poly \"x0*x1*x2*x3*x4 + x3*x4^4\" --json").out);
    expect(j["verdict"] == "not CI", "json refutation verdict");
    expect(j["refutation"]["generator_count"] == 8, "json refutation count");
  }

  {
    auto j = nlohmann::json::parse(run(cli, "short verify-row --row 3 --json").out);
    expect(j["ci"] == true, "row 3 recomputes to a CI");
    expect(j["model_matches"] == false, "row 3 flagged");
    expect(!j["notes"].empty(), "row 3 carries notes");
    expect(j["hilbert_function"] == nlohmann::json({1, 3, 3, 1}), "row 3 HF");
  }

  // seeded sampling is byte-identical run to run
  {
    const std::string args = "sample --poly \"x0*x1*x2\" --type 2,2,2 --trials 25 --seed 42 --json";
    Result a = run(cli, args);
    Result b = run(cli, args);
    expect(!a.out.empty() && a.out == b.out, "sample json determinism");
    auto j = nlohmann::json::parse(a.out);
    expect(j["trials"] == 25, "sample trials");
    expect(j["seed"] == 42, "sample seed");
    expect(j["witness_count"].get<int>() >= 1, "sample finds a witness");
  }

  if (failures == 0) std::printf("all cli contract checks passed\n");
  return failures;
}
