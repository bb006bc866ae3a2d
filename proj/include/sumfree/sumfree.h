/* C interface to the sumfree library.
 *
 * Every function returns a sumfree_status. On failure the message is
 * available from sumfree_last_error() until the next call on the same
 * thread. Objects returned through out-parameters are owned by the caller
 * and released with the matching _free function.
 */
#ifndef SUMFREE_SUMFREE_H
#define SUMFREE_SUMFREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LIB_API __declspec(dllexport)
#else
#define LIB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sumfree_status {
  SUMFREE_OK = 0,
  SUMFREE_VIOLATION = 1, /* command ran; a checked property failed */
  SUMFREE_USAGE = 2,     /* bad command, option or argument */
  SUMFREE_INPUT = 3,     /* malformed or invalid input data */
  SUMFREE_BUDGET = 4,    /* size, time or overflow budget exceeded */
  SUMFREE_INTERNAL = 5
} sumfree_status;

typedef struct sumfree_set sumfree_set;
typedef struct sumfree_report sumfree_report;

LIB_API const char* sumfree_version(void);
LIB_API const char* sumfree_last_error(void);

/* Sets. Elements must be distinct and nonzero unless zero_allowed. */
LIB_API sumfree_status sumfree_set_create(const int64_t* elements, size_t n, int zero_allowed,
                                          sumfree_set** out);
LIB_API sumfree_status sumfree_set_parse(const char* json, sumfree_set** out);
LIB_API sumfree_status sumfree_set_load(const char* path, sumfree_set** out);
LIB_API sumfree_status sumfree_set_save(const sumfree_set* set, const char* path);
LIB_API size_t sumfree_set_size(const sumfree_set* set);
/* Copies min(size, capacity) sorted elements into out. */
LIB_API size_t sumfree_set_elements(const sumfree_set* set, int64_t* out, size_t capacity);
LIB_API void sumfree_set_free(sumfree_set* set);

/* Direct queries. */
LIB_API sumfree_status sumfree_max_sum_free(const sumfree_set* set, int64_t time_limit_ms,
                                            size_t* size, int* timed_out);
LIB_API sumfree_status sumfree_is_sum_free(const sumfree_set* set, int* result);
LIB_API sumfree_status sumfree_is_dissociated(const sumfree_set* set, int* result);
LIB_API sumfree_status sumfree_additive_energy(const sumfree_set* x, const sumfree_set* y,
                                               uint64_t* energy);
LIB_API sumfree_status sumfree_dilation_bound(const sumfree_set* set, double* value,
                                              size_t* count);

/* Commands: exact, dilation-bound, sift, kernel, dense-model, residue-tree,
 * chain, certify-l1, energy-check. options_json is a JSON object or NULL;
 * set may be NULL for kernel. Returns SUMFREE_VIOLATION (with a report)
 * when the command's property check failed. */
LIB_API sumfree_status sumfree_run(const char* command, const sumfree_set* set,
                                   const char* options_json, sumfree_report** out);

/* Suites: bourgain-check, littlewood-curve, dimension-vs-l1,
 * dense-model-run, chain-demo, dichotomy-probe. */
LIB_API sumfree_status sumfree_run_suite(const char* name, const char* config_json,
                                         sumfree_report** out);

/* indent < 0 gives compact JSON. The string lives as long as the report. */
LIB_API const char* sumfree_report_json(sumfree_report* report, int indent);
/* Empty string when the command has no tabular output. */
LIB_API const char* sumfree_report_csv(const sumfree_report* report);
LIB_API int sumfree_report_violation(const sumfree_report* report);
LIB_API double sumfree_report_wall_ms(const sumfree_report* report);
LIB_API void sumfree_report_free(sumfree_report* report);

#ifdef __cplusplus
}
#endif

#endif
