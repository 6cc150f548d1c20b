// Command-line frontend for the parwreath shared library. Talks to the
// engine exclusively through the C API in parwreath/parwreath.h.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parwreath/parwreath.h"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Exit codes: 0 all checks pass, 1 input/check failure, 2 unsupported
// case, 3 budget or limit exceeded.
struct CliError {
  pw_status status;
  std::string message;
};

void check(pw_status status) {
  if (status != PW_OK) {
    throw CliError{status, pw_last_error()};
  }
}

struct TransformationDeleter {
  void operator()(pw_transformation* p) const { pw_transformation_destroy(p); }
};
struct GeneratorSetDeleter {
  void operator()(pw_generator_set* p) const { pw_generator_set_destroy(p); }
};
struct ClosureDeleter {
  void operator()(pw_closure* p) const { pw_closure_destroy(p); }
};
struct RankReportDeleter {
  void operator()(pw_rank_report* p) const { pw_rank_report_destroy(p); }
};
struct CheckListDeleter {
  void operator()(pw_check_list* p) const { pw_check_list_destroy(p); }
};

using TransformationPtr =
    std::unique_ptr<pw_transformation, TransformationDeleter>;
using GeneratorSetPtr = std::unique_ptr<pw_generator_set, GeneratorSetDeleter>;
using ClosurePtr = std::unique_ptr<pw_closure, ClosureDeleter>;
using RankReportPtr = std::unique_ptr<pw_rank_report, RankReportDeleter>;
using CheckListPtr = std::unique_ptr<pw_check_list, CheckListDeleter>;

std::string take_string(char* text) {
  std::string result = text == nullptr ? "" : text;
  pw_string_free(text);
  return result;
}

std::optional<pw_structure> structure_of(const std::string& name) {
  if (name == "txp") return PW_STRUCTURE_TXP;
  if (name == "sigma") return PW_STRUCTURE_SIGMA;
  if (name == "gamma") return PW_STRUCTURE_GAMMA;
  if (name == "sxp") return PW_STRUCTURE_SXP;
  return std::nullopt;
}

struct Report {
  std::string command;
  json params = json::object();
  std::string status = "OK";
  json checks = json::array();
  std::optional<json> rank;
  std::optional<std::string> message;
  double elapsed_ms = 0.0;

  void add_check(const std::string& name, const json& expected,
                 const json& computed, bool pass) {
    checks.push_back(json{{"name", name},
                          {"expected", expected},
                          {"computed", computed},
                          {"pass", pass}});
  }

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.at("pass").get<bool>()) {
        return false;
      }
    }
    return true;
  }

  json to_json() const {
    json out;
    out["command"] = command;
    out["params"] = params;
    out["status"] = status;
    out["checks"] = checks;
    if (rank) {
      out["rank"] = *rank;
    }
    if (message) {
      out["message"] = *message;
    }
    out["elapsed_ms"] = elapsed_ms;
    return out;
  }

  void print_text(std::ostream& out) const {
    out << "command: " << command << "\n";
    out << "params:";
    for (const auto& [key, value] : params.items()) {
      out << " " << key << "=" << value.dump();
    }
    out << "\n";
    out << "status: " << status << "\n";
    if (message) {
      out << "message: " << *message << "\n";
    }
    for (const auto& c : checks) {
      out << "check " << c.at("name").get<std::string>() << ": expected "
          << c.at("expected").dump() << ", computed "
          << c.at("computed").dump()
          << (c.at("pass").get<bool>() ? " [ok]" : " [FAIL]") << "\n";
    }
    if (rank) {
      const json& r = *rank;
      out << "rank: " << r.at("value").dump() << " (method "
          << r.at("method").get<std::string>() << ")\n";
      for (const auto& w : r.at("witness")) {
        out << "  witness " << w.get<std::string>() << "\n";
      }
      out << "certificate: " << r.at("certificate").at("search_space").dump()
          << ", rejected " << r.at("certificate").at("rejected_count").dump()
          << "\n";
    }
    out << "elapsed_ms: " << elapsed_ms << "\n";
  }
};

struct CommonOptions {
  std::string format = "json";
  uint32_t threads = 1;
  uint64_t limit = 0;
  uint64_t budget = 0;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  pw_closure_options copts;
  pw_closure_options_init(&copts);
  pw_rank_options ropts;
  pw_rank_options_init(&ropts);
  common.limit = copts.limit;
  common.budget = ropts.budget;
  cmd->add_option("--format", common.format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--threads", common.threads, "Worker thread count")
      ->envname("PARWREATH_THREADS")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  cmd->add_option("--limit", common.limit, "Closure element cap")
      ->capture_default_str();
  cmd->add_option("--budget", common.budget, "Rank search candidate cap")
      ->capture_default_str();
}

pw_closure_options closure_options(const CommonOptions& common) {
  pw_closure_options opts;
  pw_closure_options_init(&opts);
  opts.limit = common.limit;
  opts.threads = common.threads;
  return opts;
}

std::string format_element(const pw_transformation* f) {
  char* text = nullptr;
  check(pw_transformation_format(f, &text));
  return take_string(text);
}

json witness_json(const pw_generator_set* witness) {
  json out = json::array();
  const size_t count = pw_generator_set_size(witness);
  for (size_t i = 0; i < count; ++i) {
    pw_transformation* element = nullptr;
    check(pw_generator_set_element(witness, i, &element));
    TransformationPtr holder(element);
    out.push_back(format_element(element));
  }
  return out;
}

json rank_json(const pw_rank_report* report) {
  json out;
  if (pw_rank_report_found(report)) {
    out["value"] = pw_rank_report_value(report);
  } else {
    out["value"] = nullptr;
  }
  out["method"] = pw_rank_report_method(report);
  pw_generator_set* witness = nullptr;
  check(pw_rank_report_witness(report, &witness));
  GeneratorSetPtr holder(witness);
  out["witness"] = witness_json(witness);
  out["certificate"] =
      json{{"search_space", pw_rank_report_search_space(report)},
           {"rejected_count", pw_rank_report_rejected_count(report)}};
  return out;
}

GeneratorSetPtr build_structure_generators(uint32_t n, uint32_t m,
                                           pw_structure kind) {
  pw_generator_set* gens = nullptr;
  check(pw_structure_generators(n, m, kind, &gens));
  return GeneratorSetPtr(gens);
}

ClosurePtr run_closure(const pw_generator_set* gens,
                       const pw_closure_options& opts) {
  pw_closure* c = nullptr;
  check(pw_closure_run(gens, &opts, &c));
  return ClosurePtr(c);
}

void cmd_order(Report& report, uint32_t n, uint32_t m,
               const std::string& structure, bool enumerate,
               const CommonOptions& common) {
  const auto kind = structure_of(structure);
  if (!kind) {
    throw CliError{PW_ERROR_INVALID_ARGUMENT,
                   "unknown structure '" + structure + "'"};
  }
  report.params = {{"n", n},
                   {"m", m},
                   {"structure", structure},
                   {"enumerate", enumerate},
                   {"threads", common.threads},
                   {"limit", common.limit}};
  char* formula_text = nullptr;
  check(pw_order_formula(n, m, *kind, &formula_text));
  const std::string formula = take_string(formula_text);
  if (!enumerate) {
    report.add_check("order_formula", formula, formula, true);
    return;
  }
  const GeneratorSetPtr gens = build_structure_generators(n, m, *kind);
  const ClosurePtr c = run_closure(gens.get(), closure_options(common));
  const bool partial = pw_closure_is_partial(c.get()) != 0;
  const std::string enumerated = std::to_string(pw_closure_order(c.get()));
  report.add_check("order_formula_vs_enumerated", formula,
                   partial ? "> " + enumerated : enumerated,
                   !partial && formula == enumerated);
  if (partial) {
    throw CliError{PW_ERROR_BUDGET_EXCEEDED,
                   "enumeration exceeded the element cap of " +
                       std::to_string(common.limit)};
  }
}

void cmd_verify(Report& report, uint32_t n, uint32_t m,
                const std::string& theorem, const CommonOptions& common,
                uint32_t max_k) {
  report.params = {{"n", n},
                   {"m", m},
                   {"theorem", theorem.empty() ? "all" : theorem},
                   {"threads", common.threads},
                   {"limit", common.limit},
                   {"budget", common.budget},
                   {"max_k", max_k}};
  pw_verify_options opts;
  pw_verify_options_init(&opts);
  opts.closure_limit = common.limit;
  opts.budget = common.budget;
  opts.threads = common.threads;
  opts.max_k = max_k;

  std::vector<std::string> theorems;
  if (theorem.empty()) {
    theorems = {"main", "wreath", "lemma2", "kernel"};
  } else {
    theorems = {theorem};
  }
  for (const std::string& which : theorems) {
    pw_check_list* list = nullptr;
    check(pw_verify(n, m, which.c_str(), &opts, &list));
    CheckListPtr holder(list);
    const size_t count = pw_check_list_size(list);
    for (size_t i = 0; i < count; ++i) {
      report.add_check(pw_check_name(list, i), pw_check_expected(list, i),
                       pw_check_computed(list, i),
                       pw_check_pass(list, i) != 0);
    }
  }
}

void cmd_rank(Report& report, uint32_t n, uint32_t m,
              const std::string& structure, const std::string& method,
              uint32_t max_k, const CommonOptions& common) {
  const auto kind = structure_of(structure);
  if (!kind) {
    throw CliError{PW_ERROR_INVALID_ARGUMENT,
                   "unknown structure '" + structure + "'"};
  }
  report.params = {{"n", n},
                   {"m", m},
                   {"structure", structure},
                   {"method", method},
                   {"max_k", max_k},
                   {"threads", common.threads},
                   {"limit", common.limit},
                   {"budget", common.budget}};
  const GeneratorSetPtr gens = build_structure_generators(n, m, *kind);
  const ClosurePtr c = run_closure(gens.get(), closure_options(common));
  if (pw_closure_is_partial(c.get()) != 0) {
    throw CliError{PW_ERROR_BUDGET_EXCEEDED,
                   "structure order exceeds the element cap of " +
                       std::to_string(common.limit)};
  }
  pw_rank_options ropts;
  pw_rank_options_init(&ropts);
  ropts.max_k = max_k;
  ropts.budget = common.budget;
  ropts.threads = common.threads;

  pw_rank_report* raw = nullptr;
  if (method == "exhaustive") {
    check(pw_rank_exhaustive(c.get(), &ropts, &raw));
  } else {
    check(pw_rank_via_lemma1(c.get(), &ropts, &raw));
  }
  const RankReportPtr rank_report(raw);
  report.rank = rank_json(raw);
}

void cmd_closure(Report& report, const std::string& input,
                 const std::string& generators, uint32_t n, uint32_t m,
                 const std::string& dump, const std::string& dump_gens,
                 const std::string& dump_words, bool words,
                 const CommonOptions& common) {
  report.params = {{"threads", common.threads}, {"limit", common.limit}};
  GeneratorSetPtr gens;
  bool have_partition = false;
  if (!input.empty()) {
    report.params["input"] = input;
    pw_generator_set* loaded = nullptr;
    check(pw_generator_set_load(input.c_str(), &loaded));
    gens = GeneratorSetPtr(loaded);
  } else {
    const auto kind = structure_of(generators);
    if (!kind) {
      throw CliError{PW_ERROR_INVALID_ARGUMENT,
                     "unknown structure '" + generators + "'"};
    }
    report.params["generators"] = generators;
    report.params["n"] = n;
    report.params["m"] = m;
    gens = build_structure_generators(n, m, *kind);
    have_partition = true;
  }
  if (!dump_gens.empty()) {
    check(pw_generator_set_save(gens.get(), dump_gens.c_str(),
                                have_partition ? n : 0,
                                have_partition ? m : 0));
    report.params["dump_gens"] = dump_gens;
  }
  pw_closure_options opts = closure_options(common);
  opts.keep_words = (words || !dump_words.empty()) ? 1 : 0;
  const ClosurePtr c = run_closure(gens.get(), opts);
  const bool partial = pw_closure_is_partial(c.get()) != 0;
  const std::string order = std::to_string(pw_closure_order(c.get()));
  report.add_check("closure_order", nullptr, partial ? "> " + order : order,
                   !partial);
  report.params["generator_count"] = pw_closure_generator_count(c.get());
  if (!dump.empty()) {
    check(pw_closure_save(c.get(), dump.c_str()));
    report.params["dump"] = dump;
  }
  if (!dump_words.empty()) {
    check(pw_closure_save_words(c.get(), dump_words.c_str()));
    report.params["dump_words"] = dump_words;
  }
  if (partial) {
    throw CliError{PW_ERROR_BUDGET_EXCEEDED,
                   "enumeration exceeded the element cap of " +
                       std::to_string(common.limit)};
  }
}

int finish(Report& report, const CommonOptions& common,
           Clock::time_point start, int exit_code) {
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (common.format == "text") {
    report.print_text(std::cout);
  } else {
    std::cout << report.to_json().dump(2) << "\n";
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transformation monoids preserving a uniform partition: "
               "orders, closures, generating sets, ranks"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* order = app.add_subcommand("order", "Order of a structure by formula");
  uint32_t order_n = 0, order_m = 0;
  std::string order_structure;
  bool order_enumerate = false;
  order->add_option("--n", order_n, "Block size")->required();
  order->add_option("--m", order_m, "Block count")->required();
  order->add_option("--structure", order_structure, "txp|sigma|gamma|sxp")
      ->required();
  order->add_flag("--enumerate", order_enumerate,
                  "Cross-check the formula by closure enumeration");
  add_common(order, common);

  auto* verify = app.add_subcommand("verify", "Run the theorem checks");
  uint32_t verify_n = 0, verify_m = 0, verify_max_k = 6;
  std::string verify_theorem;
  verify->add_option("--n", verify_n, "Block size")->required();
  verify->add_option("--m", verify_m, "Block count")->required();
  verify->add_option("--theorem", verify_theorem,
                     "main|wreath|lemma2|kernel (default: all)")
      ->check(CLI::IsMember({"main", "wreath", "lemma2", "kernel"}));
  verify->add_option("--max-k", verify_max_k, "Rank search size cap")
      ->capture_default_str();
  add_common(verify, common);

  auto* rank = app.add_subcommand("rank", "Rank of a structure");
  uint32_t rank_n = 0, rank_m = 0, rank_max_k = 6;
  std::string rank_structure, rank_method = "lemma1";
  rank->add_option("--n", rank_n, "Block size")->required();
  rank->add_option("--m", rank_m, "Block count")->required();
  rank->add_option("--structure", rank_structure, "txp|sigma|gamma|sxp")
      ->required();
  rank->add_option("--method", rank_method, "exhaustive|lemma1")
      ->check(CLI::IsMember({"exhaustive", "lemma1"}))
      ->capture_default_str();
  rank->add_option("--max-k", rank_max_k, "Largest subset size to try")
      ->capture_default_str();
  add_common(rank, common);

  auto* closure =
      app.add_subcommand("closure", "Enumerate a generated monoid");
  std::string closure_input, closure_generators, closure_dump,
      closure_dump_gens, closure_dump_words;
  uint32_t closure_n = 0, closure_m = 0;
  bool closure_words = false;
  auto* input_option = closure->add_option(
      "--input", closure_input, "Element-set file with the generators");
  auto* generators_option =
      closure->add_option("--generators", closure_generators,
                          "Structure generators: txp|sigma|gamma|sxp");
  input_option->excludes(generators_option);
  auto* closure_n_option = closure->add_option("--n", closure_n, "Block size");
  auto* closure_m_option =
      closure->add_option("--m", closure_m, "Block count");
  generators_option->needs(closure_n_option);
  generators_option->needs(closure_m_option);
  closure->add_option("--dump", closure_dump, "Write the element set here");
  closure->add_option("--dump-gens", closure_dump_gens,
                      "Write the generating set here (with wreath forms)");
  closure->add_option("--dump-words", closure_dump_words,
                      "Write one witnessing word per element here");
  closure->add_flag("--words", closure_words, "Keep the word log");
  add_common(closure, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Report report;
  const auto start = Clock::now();
  try {
    if (order->parsed()) {
      report.command = "order";
      cmd_order(report, order_n, order_m, order_structure, order_enumerate,
                common);
    } else if (verify->parsed()) {
      report.command = "verify";
      cmd_verify(report, verify_n, verify_m, verify_theorem, common,
                 verify_max_k);
    } else if (rank->parsed()) {
      report.command = "rank";
      cmd_rank(report, rank_n, rank_m, rank_structure, rank_method, rank_max_k,
               common);
    } else if (closure->parsed()) {
      report.command = "closure";
      if (closure_input.empty() && closure_generators.empty()) {
        throw CliError{PW_ERROR_INVALID_ARGUMENT,
                       "need --input or --generators"};
      }
      cmd_closure(report, closure_input, closure_generators, closure_n,
                  closure_m, closure_dump, closure_dump_gens,
                  closure_dump_words, closure_words, common);
    }
  } catch (const CliError& e) {
    report.message = e.message;
    switch (e.status) {
      case PW_ERROR_UNSUPPORTED_CASE:
        report.status = "UNSUPPORTED_CASE";
        return finish(report, common, start, 2);
      case PW_ERROR_BUDGET_EXCEEDED:
        report.status = "BUDGET_EXCEEDED";
        return finish(report, common, start, 3);
      default:
        std::cerr << "error: " << e.message << "\n";
        return 1;
    }
  }
  if (!report.all_pass()) {
    report.status = "FAILED";
    return finish(report, common, start, 1);
  }
  return finish(report, common, start, 0);
}
