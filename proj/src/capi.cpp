#include "parwreath/parwreath.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "parwreath/enumeration.hpp"
#include "parwreath/io.hpp"
#include "parwreath/rank.hpp"
#include "parwreath/structures.hpp"
#include "parwreath/transform.hpp"
#include "parwreath/verify.hpp"
#include "parwreath/wreath.hpp"

struct pw_transformation {
  parwreath::Transformation value;
};
struct pw_generator_set {
  parwreath::GeneratorSet value;
};
struct pw_closure {
  parwreath::ClosureResult value;
};
struct pw_rank_report {
  parwreath::RankReport value;
};
struct pw_check_list {
  std::vector<parwreath::CheckResult> value;
};

namespace {

thread_local std::string last_error_message;

pw_status status_of(parwreath::ErrorCode code) {
  using parwreath::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument:
      return PW_ERROR_INVALID_ARGUMENT;
    case ErrorCode::not_invertible:
      return PW_ERROR_NOT_INVERTIBLE;
    case ErrorCode::not_partition_preserving:
      return PW_ERROR_NOT_PARTITION_PRESERVING;
    case ErrorCode::unsupported_case:
      return PW_ERROR_UNSUPPORTED_CASE;
    case ErrorCode::budget_exceeded:
      return PW_ERROR_BUDGET_EXCEEDED;
    case ErrorCode::parse_error:
      return PW_ERROR_PARSE;
    case ErrorCode::io_error:
      return PW_ERROR_IO;
  }
  return PW_ERROR_INTERNAL;
}

template <typename Fn>
pw_status guarded(Fn&& fn) {
  try {
    fn();
    return PW_OK;
  } catch (const parwreath::Error& e) {
    last_error_message = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error_message = "out of memory";
    return PW_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    last_error_message = e.what();
    return PW_ERROR_INTERNAL;
  }
}

pw_status require(bool condition, const char* message) {
  if (!condition) {
    last_error_message = message;
    return PW_ERROR_INVALID_ARGUMENT;
  }
  return PW_OK;
}

parwreath::StructureKind kind_of(pw_structure kind) {
  switch (kind) {
    case PW_STRUCTURE_TXP:
      return parwreath::StructureKind::txp;
    case PW_STRUCTURE_SIGMA:
      return parwreath::StructureKind::sigma;
    case PW_STRUCTURE_GAMMA:
      return parwreath::StructureKind::gamma;
    case PW_STRUCTURE_SXP:
      return parwreath::StructureKind::sxp;
  }
  parwreath::fail(parwreath::ErrorCode::invalid_argument,
                  "unknown structure tag");
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

parwreath::ClosureOptions closure_options_of(const pw_closure_options* options) {
  parwreath::ClosureOptions result;
  if (options != nullptr) {
    result.limit = options->limit;
    result.threads = options->threads;
    result.keep_words = options->keep_words != 0;
  }
  return result;
}

parwreath::RankOptions rank_options_of(const pw_rank_options* options) {
  parwreath::RankOptions result;
  if (options != nullptr) {
    result.max_k = options->max_k;
    result.budget = options->budget;
    result.threads = options->threads;
    result.unit_prefilter = options->unit_prefilter != 0;
    result.conjugation_reduction = options->conjugation_reduction != 0;
  }
  return result;
}

}  // namespace

extern "C" {

const char* pw_last_error(void) { return last_error_message.c_str(); }

void pw_string_free(char* text) { delete[] text; }

pw_status pw_transformation_create(uint32_t degree, const uint32_t* images,
                                   pw_transformation** out) {
  if (auto s = require(images != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    std::vector<uint8_t> table(degree);
    for (uint32_t p = 0; p < degree; ++p) {
      if (images[p] >= degree) {
        parwreath::fail(parwreath::ErrorCode::invalid_argument,
                        "image out of range");
      }
      table[p] = static_cast<uint8_t>(images[p]);
    }
    *out = new pw_transformation{parwreath::Transformation(std::move(table))};
  });
}

pw_status pw_transformation_identity(uint32_t degree, pw_transformation** out) {
  if (auto s = require(out != nullptr, "null argument"); s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_transformation{parwreath::identity(degree)};
  });
}

void pw_transformation_destroy(pw_transformation* f) { delete f; }

uint32_t pw_transformation_degree(const pw_transformation* f) {
  return f == nullptr ? 0 : f->value.degree();
}

pw_status pw_transformation_images(const pw_transformation* f,
                                   uint32_t* buffer) {
  if (auto s = require(f != nullptr && buffer != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  for (uint32_t p = 0; p < f->value.degree(); ++p) {
    buffer[p] = f->value[p];
  }
  return PW_OK;
}

pw_status pw_compose(const pw_transformation* f, const pw_transformation* g,
                     pw_transformation** out) {
  if (auto s = require(f != nullptr && g != nullptr && out != nullptr,
                       "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_transformation{parwreath::compose(f->value, g->value)};
  });
}

int pw_is_permutation(const pw_transformation* f) {
  return f != nullptr && parwreath::is_permutation(f->value) ? 1 : 0;
}

pw_status pw_inverse(const pw_transformation* f, pw_transformation** out) {
  if (auto s = require(f != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_transformation{parwreath::inverse(f->value)};
  });
}

pw_status pw_membership(const pw_transformation* f, uint32_t block_size,
                        uint32_t block_count, pw_structure kind, int* out) {
  if (auto s = require(f != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    const parwreath::UniformPartition partition(block_size, block_count);
    *out = parwreath::membership(f->value, partition, kind_of(kind)) ? 1 : 0;
  });
}

pw_status pw_transformation_format(const pw_transformation* f, char** out) {
  if (auto s = require(f != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded(
      [&] { *out = copy_string(parwreath::format_transformation(f->value)); });
}

pw_status pw_transformation_parse(const char* text, uint32_t degree,
                                  pw_transformation** out) {
  if (auto s = require(text != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_transformation{parwreath::parse_transformation(text, degree)};
  });
}

pw_status pw_wreath_format(const pw_transformation* f, uint32_t block_size,
                           uint32_t block_count, char** out) {
  if (auto s = require(f != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    const parwreath::UniformPartition partition(block_size, block_count);
    *out = copy_string(
        parwreath::format_wreath(parwreath::unflatten(f->value, partition)));
  });
}

pw_status pw_wreath_parse(const char* text, pw_transformation** out) {
  if (auto s = require(text != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_transformation{
        parwreath::flatten(parwreath::parse_wreath(text))};
  });
}

pw_status pw_order_formula(uint32_t block_size, uint32_t block_count,
                           pw_structure kind, char** out) {
  if (auto s = require(out != nullptr, "null argument"); s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = copy_string(
        parwreath::order_formula(block_size, block_count, kind_of(kind))
            .get_str());
  });
}

pw_status pw_generator_set_create(uint32_t degree, pw_generator_set** out) {
  if (auto s = require(out != nullptr, "null argument"); s != PW_OK) {
    return s;
  }
  return guarded([&] {
    auto set = std::make_unique<pw_generator_set>();
    set->value.degree = degree;
    *out = set.release();
  });
}

void pw_generator_set_destroy(pw_generator_set* set) { delete set; }

pw_status pw_generator_set_add(pw_generator_set* set,
                               const pw_transformation* element,
                               const char* label) {
  if (auto s = require(set != nullptr && element != nullptr && label != nullptr,
                       "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] { set->value.add(element->value, label); });
}

size_t pw_generator_set_size(const pw_generator_set* set) {
  return set == nullptr ? 0 : set->value.size();
}

uint32_t pw_generator_set_degree(const pw_generator_set* set) {
  return set == nullptr ? 0 : set->value.degree;
}

pw_status pw_generator_set_element(const pw_generator_set* set, size_t index,
                                   pw_transformation** out) {
  if (auto s = require(set != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  if (auto s = require(index < set->value.size(), "index out of range");
      s != PW_OK) {
    return s;
  }
  return guarded(
      [&] { *out = new pw_transformation{set->value.elements[index]}; });
}

const char* pw_generator_set_label(const pw_generator_set* set, size_t index) {
  if (set == nullptr || index >= set->value.size()) {
    return nullptr;
  }
  return set->value.labels[index].c_str();
}

pw_status pw_structure_generators(uint32_t block_size, uint32_t block_count,
                                  pw_structure kind, pw_generator_set** out) {
  if (auto s = require(out != nullptr, "null argument"); s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_generator_set{
        parwreath::standard_generators(block_size, block_count, kind_of(kind))};
  });
}

pw_status pw_symmetric_group_generators(uint32_t degree,
                                        pw_generator_set** out) {
  if (auto s = require(out != nullptr, "null argument"); s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_generator_set{parwreath::symmetric_group_generators(degree)};
  });
}

pw_status pw_full_transformation_generators(uint32_t degree,
                                            pw_generator_set** out) {
  if (auto s = require(out != nullptr, "null argument"); s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_generator_set{
        parwreath::full_transformation_generators(degree)};
  });
}

pw_status pw_generator_set_load(const char* path, pw_generator_set** out) {
  if (auto s = require(path != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_generator_set{parwreath::read_element_set_file(path)};
  });
}

pw_status pw_generator_set_save(const pw_generator_set* set, const char* path,
                                uint32_t block_size, uint32_t block_count) {
  if (auto s = require(set != nullptr && path != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    if (block_size > 0 && block_count > 0) {
      const parwreath::UniformPartition partition(block_size, block_count);
      parwreath::write_element_set_file(path, set->value, &partition);
    } else {
      parwreath::write_element_set_file(path, set->value, nullptr);
    }
  });
}

void pw_closure_options_init(pw_closure_options* options) {
  if (options != nullptr) {
    const parwreath::ClosureOptions defaults;
    options->limit = defaults.limit;
    options->threads = defaults.threads;
    options->keep_words = defaults.keep_words ? 1 : 0;
  }
}

pw_status pw_closure_run(const pw_generator_set* generators,
                         const pw_closure_options* options, pw_closure** out) {
  if (auto s = require(generators != nullptr && out != nullptr,
                       "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_closure{
        parwreath::closure(generators->value, closure_options_of(options))};
  });
}

void pw_closure_destroy(pw_closure* c) { delete c; }

uint64_t pw_closure_order(const pw_closure* c) {
  return c == nullptr ? 0 : c->value.order();
}

int pw_closure_is_partial(const pw_closure* c) {
  return c != nullptr && c->value.partial() ? 1 : 0;
}

uint32_t pw_closure_degree(const pw_closure* c) {
  return c == nullptr ? 0 : c->value.degree();
}

uint32_t pw_closure_generator_count(const pw_closure* c) {
  return c == nullptr ? 0 : c->value.generator_count();
}

pw_status pw_closure_element(const pw_closure* c, uint64_t index,
                             pw_transformation** out) {
  if (auto s = require(c != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  if (auto s = require(index < c->value.order(), "index out of range");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new pw_transformation{c->value.element(index)};
  });
}

pw_status pw_closure_contains(const pw_closure* c, const pw_transformation* f,
                              int* out) {
  if (auto s = require(c != nullptr && f != nullptr && out != nullptr,
                       "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] { *out = c->value.contains(f->value) ? 1 : 0; });
}

pw_status pw_closure_units(const pw_closure* c, pw_generator_set** out) {
  if (auto s = require(c != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded(
      [&] { *out = new pw_generator_set{parwreath::units(c->value)}; });
}

pw_status pw_closure_elements(const pw_closure* c, pw_generator_set** out) {
  if (auto s = require(c != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded(
      [&] { *out = new pw_generator_set{parwreath::elements_of(c->value)}; });
}

pw_status pw_closure_save(const pw_closure* c, const char* path) {
  if (auto s = require(c != nullptr && path != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded(
      [&] { parwreath::write_element_set_file(path, c->value); });
}

pw_status pw_closure_save_words(const pw_closure* c, const char* path) {
  if (auto s = require(c != nullptr && path != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] { parwreath::write_word_log_file(path, c->value); });
}

pw_status pw_is_generating(const pw_generator_set* generators,
                           uint64_t target_order,
                           const pw_closure_options* options, int* out) {
  if (auto s = require(generators != nullptr && out != nullptr,
                       "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = parwreath::is_generating(generators->value, target_order,
                                    closure_options_of(options))
               ? 1
               : 0;
  });
}

void pw_rank_options_init(pw_rank_options* options) {
  if (options != nullptr) {
    const parwreath::RankOptions defaults;
    options->max_k = defaults.max_k;
    options->budget = defaults.budget;
    options->threads = defaults.threads;
    options->unit_prefilter = defaults.unit_prefilter ? 1 : 0;
    options->conjugation_reduction = defaults.conjugation_reduction ? 1 : 0;
  }
}

pw_status pw_rank_exhaustive(const pw_closure* s,
                             const pw_rank_options* options,
                             pw_rank_report** out) {
  if (auto st = require(s != nullptr && out != nullptr, "null argument");
      st != PW_OK) {
    return st;
  }
  return guarded([&] {
    *out = new pw_rank_report{
        parwreath::rank_exhaustive(s->value, rank_options_of(options))};
  });
}

pw_status pw_relative_rank(const pw_closure* s, const pw_generator_set* fixed,
                           const pw_rank_options* options,
                           pw_rank_report** out) {
  if (auto st = require(s != nullptr && fixed != nullptr && out != nullptr,
                        "null argument");
      st != PW_OK) {
    return st;
  }
  return guarded([&] {
    *out = new pw_rank_report{parwreath::relative_rank(
        s->value, fixed->value, rank_options_of(options))};
  });
}

pw_status pw_rank_via_lemma1(const pw_closure* s,
                             const pw_rank_options* options,
                             pw_rank_report** out) {
  if (auto st = require(s != nullptr && out != nullptr, "null argument");
      st != PW_OK) {
    return st;
  }
  return guarded([&] {
    *out = new pw_rank_report{
        parwreath::rank_via_units(s->value, rank_options_of(options))};
  });
}

void pw_rank_report_destroy(pw_rank_report* report) { delete report; }

int pw_rank_report_found(const pw_rank_report* report) {
  return report != nullptr && report->value.found ? 1 : 0;
}

uint32_t pw_rank_report_value(const pw_rank_report* report) {
  return report == nullptr ? 0 : report->value.value;
}

const char* pw_rank_report_method(const pw_rank_report* report) {
  return report == nullptr ? "?" : parwreath::to_string(report->value.method);
}

const char* pw_rank_report_quantity(const pw_rank_report* report) {
  return report == nullptr ? "?"
                           : parwreath::to_string(report->value.quantity);
}

pw_status pw_rank_report_witness(const pw_rank_report* report,
                                 pw_generator_set** out) {
  if (auto s = require(report != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded(
      [&] { *out = new pw_generator_set{report->value.witness}; });
}

const char* pw_rank_report_search_space(const pw_rank_report* report) {
  return report == nullptr ? ""
                           : report->value.certificate.search_space.c_str();
}

uint64_t pw_rank_report_rejected_count(const pw_rank_report* report) {
  return report == nullptr ? 0 : report->value.certificate.rejected_count;
}

double pw_rank_report_elapsed_ms(const pw_rank_report* report) {
  return report == nullptr ? 0.0 : report->value.elapsed_ms;
}

pw_status pw_verify_lemma1_consistency(const pw_closure* s,
                                       const pw_generator_set* u, int* out) {
  if (auto st = require(s != nullptr && u != nullptr && out != nullptr,
                        "null argument");
      st != PW_OK) {
    return st;
  }
  return guarded([&] {
    *out = parwreath::verify_units_generation(s->value, u->value) ? 1 : 0;
  });
}

pw_status pw_verify_kernel_obstruction(uint32_t block_size,
                                       uint32_t block_count, pw_structure kind,
                                       const pw_closure_options* options,
                                       int* out) {
  if (auto s = require(out != nullptr, "null argument"); s != PW_OK) {
    return s;
  }
  return guarded([&] {
    *out = parwreath::verify_kernel_obstruction(block_size, block_count,
                                                kind_of(kind),
                                                closure_options_of(options))
               ? 1
               : 0;
  });
}

void pw_verify_options_init(pw_verify_options* options) {
  if (options != nullptr) {
    const parwreath::VerifyOptions defaults;
    options->closure_limit = defaults.closure_limit;
    options->budget = defaults.budget;
    options->threads = defaults.threads;
    options->max_k = defaults.max_k;
  }
}

pw_status pw_verify(uint32_t block_size, uint32_t block_count,
                    const char* theorem, const pw_verify_options* options,
                    pw_check_list** out) {
  if (auto s = require(theorem != nullptr && out != nullptr, "null argument");
      s != PW_OK) {
    return s;
  }
  return guarded([&] {
    parwreath::VerifyOptions vopts;
    if (options != nullptr) {
      vopts.closure_limit = options->closure_limit;
      vopts.budget = options->budget;
      vopts.threads = options->threads;
      vopts.max_k = options->max_k;
    }
    const std::string which = theorem;
    std::vector<parwreath::CheckResult> checks;
    if (which == "main") {
      checks = parwreath::verify_rank_theorem(block_size, block_count, vopts);
    } else if (which == "wreath") {
      checks = parwreath::verify_two_generated(block_size, block_count, vopts);
    } else if (which == "lemma2") {
      checks = parwreath::verify_generating_equalities(block_size, block_count,
                                                       vopts);
    } else if (which == "kernel") {
      checks = parwreath::verify_kernel_check(block_size, block_count, vopts);
    } else {
      parwreath::fail(parwreath::ErrorCode::invalid_argument,
                      "unknown theorem '" + which + "'");
    }
    *out = new pw_check_list{std::move(checks)};
  });
}

void pw_check_list_destroy(pw_check_list* list) { delete list; }

size_t pw_check_list_size(const pw_check_list* list) {
  return list == nullptr ? 0 : list->value.size();
}

const char* pw_check_name(const pw_check_list* list, size_t index) {
  if (list == nullptr || index >= list->value.size()) {
    return nullptr;
  }
  return list->value[index].name.c_str();
}

const char* pw_check_expected(const pw_check_list* list, size_t index) {
  if (list == nullptr || index >= list->value.size()) {
    return nullptr;
  }
  return list->value[index].expected.c_str();
}

const char* pw_check_computed(const pw_check_list* list, size_t index) {
  if (list == nullptr || index >= list->value.size()) {
    return nullptr;
  }
  return list->value[index].computed.c_str();
}

int pw_check_pass(const pw_check_list* list, size_t index) {
  return list != nullptr && index < list->value.size() &&
                 list->value[index].pass
             ? 1
             : 0;
}

}  // extern "C"
