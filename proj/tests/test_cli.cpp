#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string command = std::string(PARWREATH_CLI_PATH) + " " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

json strip_elapsed(json report) {
  report.erase("elapsed_ms");
  return report;
}

}  // namespace

TEST_CASE("cli: order with enumeration cross-check") {
  const RunResult r =
      run_cli("order --n 2 --m 2 --structure txp --enumerate");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("command") == "order");
  CHECK(report.at("status") == "OK");
  const json& check = report.at("checks").at(0);
  CHECK(check.at("name") == "order_formula_vs_enumerated");
  CHECK(check.at("expected") == "64");
  CHECK(check.at("computed") == "64");
  CHECK(check.at("pass") == true);
}

TEST_CASE("cli: formula-only orders") {
  const RunResult trivial = run_cli("order --n 1 --m 1 --structure sxp");
  CHECK(trivial.exit_code == 0);
  CHECK(json::parse(trivial.output).at("checks").at(0).at("expected") == "1");

  const RunResult gap_case = run_cli("order --n 3 --m 2 --structure sxp");
  CHECK(json::parse(gap_case.output).at("checks").at(0).at("expected") ==
        "72");
}

TEST_CASE("cli: verify main at (2,2)") {
  const RunResult r = run_cli("verify --n 2 --m 2 --theorem main");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("status") == "OK");
  REQUIRE(report.at("checks").size() == 3);
  CHECK(report.at("checks").at(0).at("name") == "rank_txp");
  CHECK(report.at("checks").at(0).at("computed") == "4");
  CHECK(report.at("checks").at(1).at("computed") == "3");
  CHECK(report.at("checks").at(2).at("computed") == "3");
  for (const auto& check : report.at("checks")) {
    CHECK(check.at("pass") == true);
  }
}

TEST_CASE("cli: verify wreath at (3,2)") {
  const RunResult r = run_cli("verify --n 3 --m 2 --theorem wreath");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("checks").at(0).at("expected") == "72");
  CHECK(report.at("checks").at(0).at("pass") == true);
}

TEST_CASE("cli: trivial partitions are rejected as unsupported") {
  const RunResult r = run_cli("verify --n 1 --m 4");
  CHECK(r.exit_code == 2);
  const json report = json::parse(r.output);
  CHECK(report.at("status") == "UNSUPPORTED_CASE");
  CHECK(report.at("message").get<std::string>().find("T_X") !=
        std::string::npos);

  const RunResult rank_run = run_cli("rank --n 4 --m 1 --structure sxp");
  CHECK(rank_run.exit_code == 2);
  CHECK(json::parse(rank_run.output).at("status") == "UNSUPPORTED_CASE");
}

TEST_CASE("cli: rank commands") {
  const RunResult lemma1 =
      run_cli("rank --n 2 --m 2 --structure txp --method lemma1");
  CHECK(lemma1.exit_code == 0);
  const json lemma1_report = json::parse(lemma1.output);
  CHECK(lemma1_report.at("rank").at("value") == 4);
  CHECK(lemma1_report.at("rank").at("method") == "lemma1");
  CHECK(lemma1_report.at("rank").at("witness").size() == 4);

  const RunResult exhaustive = run_cli(
      "rank --n 2 --m 2 --structure txp --method exhaustive --max-k 4");
  CHECK(exhaustive.exit_code == 0);
  const json exhaustive_report = json::parse(exhaustive.output);
  CHECK(exhaustive_report.at("rank").at("value") == 4);
  CHECK(exhaustive_report.at("rank").at("certificate").at("rejected_count") ==
        43745);

  const RunResult sxp = run_cli("rank --n 2 --m 2 --structure sxp");
  CHECK(json::parse(sxp.output).at("rank").at("value") == 2);
}

TEST_CASE("cli: closure with built-in generators") {
  const RunResult r = run_cli("closure --generators sxp --n 2 --m 3");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("checks").at(0).at("name") == "closure_order");
  CHECK(report.at("checks").at(0).at("computed") == "48");
}

TEST_CASE("cli: closure from a file, dump and reload") {
  namespace fs = std::filesystem;
  const fs::path input = fs::temp_directory_path() / "parwreath_cli_in.txt";
  const fs::path dump = fs::temp_directory_path() / "parwreath_cli_out.txt";
  {
    std::ofstream out(input);
    out << "# the full transformation monoid on two points\n2\n1 0\n1 1\n";
  }
  const RunResult r =
      run_cli("closure --input " + input.string() + " --dump " +
              dump.string());
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output).at("checks").at(0).at("computed") == "4");

  const RunResult reloaded = run_cli("closure --input " + dump.string());
  CHECK(json::parse(reloaded.output).at("checks").at(0).at("computed") == "4");

  const RunResult empty_run = [&] {
    std::ofstream out(input);
    out << "5\n";
    out.close();
    return run_cli("closure --input " + input.string());
  }();
  CHECK(json::parse(empty_run.output).at("checks").at(0).at("computed") ==
        "1");

  fs::remove(input);
  fs::remove(dump);
}

TEST_CASE("cli: generator dumps carry wreath forms and parse back") {
  namespace fs = std::filesystem;
  const fs::path gens = fs::temp_directory_path() / "parwreath_cli_gens.txt";
  const RunResult r = run_cli("closure --generators txp --n 2 --m 2 " +
                              std::string("--dump-gens ") + gens.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(gens);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("# label: alpha") != std::string::npos);
  CHECK(text.find("# wreath: [1 1 | 0 1] ; 0 1") != std::string::npos);

  const RunResult reload = run_cli("closure --input " + gens.string());
  CHECK(reload.exit_code == 0);
  CHECK(json::parse(reload.output).at("checks").at(0).at("computed") == "64");

  // Wreath-form element lines work as closure input too.
  const fs::path wreath_in =
      fs::temp_directory_path() / "parwreath_cli_wreath.txt";
  {
    std::ofstream out(wreath_in);
    out << "4\n[1 0 | 0 1] ; 1 0\n";
  }
  const RunResult from_wreath = run_cli("closure --input " +
                                        wreath_in.string());
  CHECK(from_wreath.exit_code == 0);
  CHECK(json::parse(from_wreath.output).at("checks").at(0).at("computed") ==
        "4");
  fs::remove(gens);
  fs::remove(wreath_in);
}

TEST_CASE("cli: word log dump") {
  namespace fs = std::filesystem;
  const fs::path words = fs::temp_directory_path() / "parwreath_cli_words.txt";
  const RunResult r = run_cli("closure --generators sxp --n 2 --m 2 " +
                              std::string("--dump-words ") + words.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(words);
  std::string first_line;
  std::getline(in, first_line);
  CHECK(first_line == "0:");
  fs::remove(words);
}

TEST_CASE("cli: parse errors exit with code 1 and a line number") {
  namespace fs = std::filesystem;
  const fs::path input = fs::temp_directory_path() / "parwreath_cli_bad.txt";
  {
    std::ofstream out(input);
    out << "3\n0 1 2\n0 1\n";
  }
  const RunResult r = run_cli("closure --input " + input.string(), true);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("line 3") != std::string::npos);
  fs::remove(input);
}

TEST_CASE("cli: limit overflow exits with code 3") {
  const RunResult r =
      run_cli("closure --generators txp --n 2 --m 3 --limit 100");
  CHECK(r.exit_code == 3);
  const json report = json::parse(r.output);
  CHECK(report.at("status") == "BUDGET_EXCEEDED");
}

TEST_CASE("cli: repeated runs agree up to elapsed time") {
  const std::string args = "verify --n 2 --m 2 --theorem lemma2";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(strip_elapsed(json::parse(a.output)) ==
        strip_elapsed(json::parse(b.output)));

  // Thread count must not change the payload either.
  const RunResult threaded = run_cli(args + " --threads 8");
  json threaded_report = strip_elapsed(json::parse(threaded.output));
  json base_report = strip_elapsed(json::parse(a.output));
  threaded_report.at("params").erase("threads");
  base_report.at("params").erase("threads");
  CHECK(threaded_report == base_report);
}

TEST_CASE("cli: environment default for threads") {
  const RunResult r = run_cli(
      "order --n 2 --m 2 --structure gamma", false);
  CHECK(r.exit_code == 0);
  RunResult env_run;
  {
    const std::string command =
        std::string("PARWREATH_THREADS=2 ") + PARWREATH_CLI_PATH +
        " order --n 2 --m 2 --structure gamma 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
      env_run.output.append(buffer.data(), got);
    }
    env_run.exit_code = WEXITSTATUS(pclose(pipe));
  }
  CHECK(env_run.exit_code == 0);
  CHECK(json::parse(env_run.output).at("params").at("threads") == 2);
}

TEST_CASE("cli: text format mirrors the JSON content") {
  const RunResult r =
      run_cli("order --n 2 --m 2 --structure txp --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("status: OK") != std::string::npos);
  CHECK(r.output.find("order_formula") != std::string::npos);
  CHECK(r.output.find("\"64\"") != std::string::npos);
}

TEST_CASE("cli: bad flags exit nonzero") {
  const RunResult r = run_cli("order --n 2 --m 2 --structure nope", true);
  CHECK(r.exit_code != 0);
  const RunResult missing = run_cli("order --n 2", true);
  CHECK(missing.exit_code != 0);
  const RunResult no_sub = run_cli("", true);
  CHECK(no_sub.exit_code != 0);
}
