/* C API for the parwreath engine: opaque handles, status codes, and a
 * thread-local error message. Strings returned through char** are
 * heap-allocated and must be released with pw_string_free; all other
 * pointers are owned by their handle. */

#ifndef PARWREATH_PARWREATH_H_
#define PARWREATH_PARWREATH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PW_API __declspec(dllexport)
#else
#define PW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pw_status {
  PW_OK = 0,
  PW_ERROR_INVALID_ARGUMENT = 1,
  PW_ERROR_NOT_INVERTIBLE = 2,
  PW_ERROR_NOT_PARTITION_PRESERVING = 3,
  PW_ERROR_UNSUPPORTED_CASE = 4,
  PW_ERROR_BUDGET_EXCEEDED = 5,
  PW_ERROR_PARSE = 6,
  PW_ERROR_IO = 7,
  PW_ERROR_INTERNAL = 8
} pw_status;

typedef enum pw_structure {
  PW_STRUCTURE_TXP = 0,
  PW_STRUCTURE_SIGMA = 1,
  PW_STRUCTURE_GAMMA = 2,
  PW_STRUCTURE_SXP = 3
} pw_structure;

typedef struct pw_transformation pw_transformation;
typedef struct pw_generator_set pw_generator_set;
typedef struct pw_closure pw_closure;
typedef struct pw_rank_report pw_rank_report;
typedef struct pw_check_list pw_check_list;

/* Message for the last failing call on this thread; never NULL. */
PW_API const char* pw_last_error(void);

PW_API void pw_string_free(char* text);

/* ---- transformations ------------------------------------------------ */

PW_API pw_status pw_transformation_create(uint32_t degree,
                                          const uint32_t* images,
                                          pw_transformation** out);
PW_API pw_status pw_transformation_identity(uint32_t degree,
                                            pw_transformation** out);
PW_API void pw_transformation_destroy(pw_transformation* f);
PW_API uint32_t pw_transformation_degree(const pw_transformation* f);
/* buffer must hold degree entries. */
PW_API pw_status pw_transformation_images(const pw_transformation* f,
                                          uint32_t* buffer);
PW_API pw_status pw_compose(const pw_transformation* f,
                            const pw_transformation* g,
                            pw_transformation** out);
PW_API int pw_is_permutation(const pw_transformation* f);
PW_API pw_status pw_inverse(const pw_transformation* f,
                            pw_transformation** out);
PW_API pw_status pw_membership(const pw_transformation* f, uint32_t block_size,
                               uint32_t block_count, pw_structure kind,
                               int* out);
/* "0 1 2" style image table. */
PW_API pw_status pw_transformation_format(const pw_transformation* f,
                                          char** out);
PW_API pw_status pw_transformation_parse(const char* text, uint32_t degree,
                                         pw_transformation** out);
/* Wreath text form "[.. | ..] ; .." for a partition-preserving element. */
PW_API pw_status pw_wreath_format(const pw_transformation* f,
                                  uint32_t block_size, uint32_t block_count,
                                  char** out);
/* Parses a wreath form and flattens it. */
PW_API pw_status pw_wreath_parse(const char* text, pw_transformation** out);

/* ---- orders ---------------------------------------------------------- */

/* Decimal string (arbitrary size). */
PW_API pw_status pw_order_formula(uint32_t block_size, uint32_t block_count,
                                  pw_structure kind, char** out);

/* ---- generator sets --------------------------------------------------- */

PW_API pw_status pw_generator_set_create(uint32_t degree,
                                         pw_generator_set** out);
PW_API void pw_generator_set_destroy(pw_generator_set* set);
PW_API pw_status pw_generator_set_add(pw_generator_set* set,
                                      const pw_transformation* element,
                                      const char* label);
PW_API size_t pw_generator_set_size(const pw_generator_set* set);
PW_API uint32_t pw_generator_set_degree(const pw_generator_set* set);
PW_API pw_status pw_generator_set_element(const pw_generator_set* set,
                                          size_t index,
                                          pw_transformation** out);
/* Owned by the set; NULL on bad index. */
PW_API const char* pw_generator_set_label(const pw_generator_set* set,
                                          size_t index);
/* The explicit generating sets {x, y} / {x, y, alpha} / {x, y, beta} /
 * {x, y, alpha, beta}, flattened to degree n*m. */
PW_API pw_status pw_structure_generators(uint32_t block_size,
                                         uint32_t block_count,
                                         pw_structure kind,
                                         pw_generator_set** out);
PW_API pw_status pw_symmetric_group_generators(uint32_t degree,
                                               pw_generator_set** out);
PW_API pw_status pw_full_transformation_generators(uint32_t degree,
                                                   pw_generator_set** out);
PW_API pw_status pw_generator_set_load(const char* path,
                                       pw_generator_set** out);
/* block_size > 0 attaches wreath-form comments to the dump. */
PW_API pw_status pw_generator_set_save(const pw_generator_set* set,
                                       const char* path, uint32_t block_size,
                                       uint32_t block_count);

/* ---- closure ----------------------------------------------------------- */

typedef struct pw_closure_options {
  uint64_t limit;   /* element cap; hitting it makes the result partial */
  uint32_t threads; /* worker threads; the result does not depend on it */
  int keep_words;   /* log one witnessing word per element */
} pw_closure_options;

PW_API void pw_closure_options_init(pw_closure_options* options);

PW_API pw_status pw_closure_run(const pw_generator_set* generators,
                                const pw_closure_options* options,
                                pw_closure** out);
PW_API void pw_closure_destroy(pw_closure* c);
PW_API uint64_t pw_closure_order(const pw_closure* c);
PW_API int pw_closure_is_partial(const pw_closure* c);
PW_API uint32_t pw_closure_degree(const pw_closure* c);
PW_API uint32_t pw_closure_generator_count(const pw_closure* c);
PW_API pw_status pw_closure_element(const pw_closure* c, uint64_t index,
                                    pw_transformation** out);
PW_API pw_status pw_closure_contains(const pw_closure* c,
                                     const pw_transformation* f, int* out);
PW_API pw_status pw_closure_units(const pw_closure* c, pw_generator_set** out);
PW_API pw_status pw_closure_elements(const pw_closure* c,
                                     pw_generator_set** out);
PW_API pw_status pw_closure_save(const pw_closure* c, const char* path);
PW_API pw_status pw_closure_save_words(const pw_closure* c, const char* path);
PW_API pw_status pw_is_generating(const pw_generator_set* generators,
                                  uint64_t target_order,
                                  const pw_closure_options* options, int* out);

/* ---- rank -------------------------------------------------------------- */

typedef struct pw_rank_options {
  uint32_t max_k;
  uint64_t budget; /* candidate cap per search */
  uint32_t threads;
  int unit_prefilter;
  int conjugation_reduction;
} pw_rank_options;

PW_API void pw_rank_options_init(pw_rank_options* options);

PW_API pw_status pw_rank_exhaustive(const pw_closure* s,
                                    const pw_rank_options* options,
                                    pw_rank_report** out);
PW_API pw_status pw_relative_rank(const pw_closure* s,
                                  const pw_generator_set* fixed,
                                  const pw_rank_options* options,
                                  pw_rank_report** out);
PW_API pw_status pw_rank_via_lemma1(const pw_closure* s,
                                    const pw_rank_options* options,
                                    pw_rank_report** out);
PW_API void pw_rank_report_destroy(pw_rank_report* report);
PW_API int pw_rank_report_found(const pw_rank_report* report);
PW_API uint32_t pw_rank_report_value(const pw_rank_report* report);
/* "exhaustive" or "lemma1". */
PW_API const char* pw_rank_report_method(const pw_rank_report* report);
/* "rank", "relative_rank" or "group_rank". */
PW_API const char* pw_rank_report_quantity(const pw_rank_report* report);
PW_API pw_status pw_rank_report_witness(const pw_rank_report* report,
                                        pw_generator_set** out);
PW_API const char* pw_rank_report_search_space(const pw_rank_report* report);
PW_API uint64_t pw_rank_report_rejected_count(const pw_rank_report* report);
PW_API double pw_rank_report_elapsed_ms(const pw_rank_report* report);

PW_API pw_status pw_verify_lemma1_consistency(const pw_closure* s,
                                              const pw_generator_set* u,
                                              int* out);
PW_API pw_status pw_verify_kernel_obstruction(uint32_t block_size,
                                              uint32_t block_count,
                                              pw_structure kind,
                                              const pw_closure_options* options,
                                              int* out);

/* ---- theorem checks ----------------------------------------------------- */

typedef struct pw_verify_options {
  uint64_t closure_limit;
  uint64_t budget;
  uint32_t threads;
  uint32_t max_k;
} pw_verify_options;

PW_API void pw_verify_options_init(pw_verify_options* options);

/* theorem: "main", "wreath", "lemma2" or "kernel". */
PW_API pw_status pw_verify(uint32_t block_size, uint32_t block_count,
                           const char* theorem,
                           const pw_verify_options* options,
                           pw_check_list** out);
PW_API void pw_check_list_destroy(pw_check_list* list);
PW_API size_t pw_check_list_size(const pw_check_list* list);
PW_API const char* pw_check_name(const pw_check_list* list, size_t index);
PW_API const char* pw_check_expected(const pw_check_list* list, size_t index);
PW_API const char* pw_check_computed(const pw_check_list* list, size_t index);
PW_API int pw_check_pass(const pw_check_list* list, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* PARWREATH_PARWREATH_H_ */
