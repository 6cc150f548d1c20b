#include "parwreath/verify.hpp"

#include "parwreath/enumeration.hpp"
#include "parwreath/rank.hpp"

namespace parwreath {

namespace {

void require_within_limit(uint32_t n, uint32_t m, StructureKind kind,
                          uint64_t limit) {
  const mpz_class expected = order_formula(n, m, kind);
  if (mpz_cmp_ui(expected.get_mpz_t(), limit) > 0) {
    fail(ErrorCode::budget_exceeded,
         std::string(to_string(kind)) + " order " + expected.get_str() +
             " exceeds the closure limit " + std::to_string(limit));
  }
}

ClosureResult enumerate_structure(uint32_t n, uint32_t m, StructureKind kind,
                                  const VerifyOptions& options) {
  require_within_limit(n, m, kind, options.closure_limit);
  ClosureOptions copts;
  copts.limit = options.closure_limit;
  copts.threads = options.threads;
  return closure(standard_generators(n, m, kind), copts);
}

}  // namespace

std::vector<CheckResult> verify_rank_theorem(uint32_t n, uint32_t m,
                                             const VerifyOptions& options) {
  RankOptions ropts;
  ropts.max_k = options.max_k;
  ropts.budget = options.budget;
  ropts.threads = options.threads;

  std::vector<CheckResult> checks;
  const std::pair<StructureKind, uint32_t> cases[] = {
      {StructureKind::txp, 4},
      {StructureKind::sigma, 3},
      {StructureKind::gamma, 3},
  };
  for (const auto& [kind, expected] : cases) {
    const ClosureResult s = enumerate_structure(n, m, kind, options);
    const RankReport report = rank_via_units(s, ropts);
    checks.push_back({std::string("rank_") + to_string(kind),
                      std::to_string(expected),
                      report.found ? std::to_string(report.value)
                                   : "> " + std::to_string(options.max_k),
                      report.found && report.value == expected});
  }
  return checks;
}

std::vector<CheckResult> verify_two_generated(uint32_t n, uint32_t m,
                                              const VerifyOptions& options) {
  const mpz_class expected = order_formula(n, m, StructureKind::sxp);
  const ClosureResult c =
      enumerate_structure(n, m, StructureKind::sxp, options);
  const std::string computed =
      c.partial() ? "> " + std::to_string(c.order()) : std::to_string(c.order());
  return {{"sxp_two_generated_order", expected.get_str(), computed,
           !c.partial() && mpz_cmp_ui(expected.get_mpz_t(), c.order()) == 0}};
}

std::vector<CheckResult> verify_generating_equalities(
    uint32_t n, uint32_t m, const VerifyOptions& options) {
  const GeneratorSet txp_gens = standard_generators(n, m, StructureKind::txp);
  const Transformation* alpha = nullptr;
  const Transformation* beta = nullptr;
  for (size_t i = 0; i < txp_gens.size(); ++i) {
    if (txp_gens.labels[i] == "alpha") {
      alpha = &txp_gens.elements[i];
    } else if (txp_gens.labels[i] == "beta") {
      beta = &txp_gens.elements[i];
    }
  }

  const ClosureResult group =
      enumerate_structure(n, m, StructureKind::sxp, options);
  const GeneratorSet group_elements = elements_of(group);

  struct Equation {
    const char* name;
    std::vector<const Transformation*> extra;
    StructureKind kind;
  };
  const Equation equations[] = {
      {"units_plus_alpha_generate_sigma", {alpha}, StructureKind::sigma},
      {"units_plus_beta_generate_gamma", {beta}, StructureKind::gamma},
      {"units_plus_alpha_beta_generate_txp", {alpha, beta}, StructureKind::txp},
  };

  std::vector<CheckResult> checks;
  for (const Equation& eq : equations) {
    require_within_limit(n, m, eq.kind, options.closure_limit);
    GeneratorSet gens = group_elements;
    for (size_t i = 0; i < eq.extra.size(); ++i) {
      gens.add(*eq.extra[i], "extra" + std::to_string(i));
    }
    ClosureOptions copts;
    copts.limit = options.closure_limit;
    copts.threads = options.threads;
    const ClosureResult c = closure(gens, copts);
    const mpz_class expected = order_formula(n, m, eq.kind);
    checks.push_back({eq.name, expected.get_str(),
                      c.partial() ? "> " + std::to_string(c.order())
                                  : std::to_string(c.order()),
                      !c.partial() &&
                          mpz_cmp_ui(expected.get_mpz_t(), c.order()) == 0});
  }
  return checks;
}

std::vector<CheckResult> verify_kernel_check(uint32_t n, uint32_t m,
                                             const VerifyOptions& options) {
  ClosureOptions copts;
  copts.limit = options.closure_limit;
  copts.threads = options.threads;
  const bool obstructed =
      verify_kernel_obstruction(n, m, StructureKind::txp, copts);
  return {{"no_single_element_spans_txp_over_units", "true",
           obstructed ? "true" : "false", obstructed}};
}

}  // namespace parwreath
