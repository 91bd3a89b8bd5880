/*
 * ahpga C interface.
 *
 * Teacher scoring by the Analytic Hierarchy Process and genetic-algorithm
 * school timetabling behind opaque handles. Every function returning
 * ahpga_status leaves a human-readable message retrievable with
 * ahpga_last_error() on failure (thread-local, valid until the next call on
 * the same thread).
 */
#ifndef AHPGA_H
#define AHPGA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(AHPGA_BUILDING_LIBRARY)
#    define AHPGA_API __declspec(dllexport)
#  else
#    define AHPGA_API __declspec(dllimport)
#  endif
#else
#  define AHPGA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ahpga_status {
  AHPGA_OK = 0,
  AHPGA_ERR_ARGUMENT = 1,      /* null handle or malformed argument */
  AHPGA_ERR_INPUT = 2,         /* input rejected (schema, invariant, dimension) */
  AHPGA_ERR_IO = 3,            /* file could not be read or written */
  AHPGA_ERR_UNSUPPORTED = 4,   /* e.g. consistency ratio for n > 10 */
  AHPGA_ERR_LIMIT = 5,         /* exhaustive search space above the limit */
  AHPGA_ERR_INTERNAL = 6
} ahpga_status;

/* Process exit codes reported by ahpga_report_exit_code(). */
#define AHPGA_EXIT_OK 0
#define AHPGA_EXIT_INPUT 1
#define AHPGA_EXIT_INFEASIBLE 2

typedef struct ahpga_bundle ahpga_bundle;
typedef struct ahpga_report ahpga_report;

typedef struct ahpga_bundle_paths {
  const char* teachers;
  const char* requirements;
  const char* preferences;
  const char* criteria;
  const char* config;
  const char* scores; /* optional, may be NULL */
} ahpga_bundle_paths;

typedef struct ahpga_options {
  int has_st;
  double st;
  int has_seed;
  uint64_t seed;
  int verbose;
  int allow_inconsistent;
  int continue_to_budget;
  uint64_t limit; /* exhaustive-search limit, default 1000000 */
} ahpga_options;

AHPGA_API const char* ahpga_version(void);
AHPGA_API const char* ahpga_last_error(void);
AHPGA_API const char* ahpga_status_string(ahpga_status status);

AHPGA_API void ahpga_options_init(ahpga_options* options);

/* Any NULL member of paths falls back to <dir>/<default name> when loaded
 * through ahpga_bundle_open_dir. */
AHPGA_API ahpga_status ahpga_bundle_open(const ahpga_bundle_paths* paths,
                                         ahpga_bundle** out);
AHPGA_API ahpga_status ahpga_bundle_open_dir(const char* dir,
                                             const ahpga_bundle_paths* overrides,
                                             ahpga_bundle** out);
AHPGA_API void ahpga_bundle_close(ahpga_bundle* bundle);

AHPGA_API size_t ahpga_bundle_teacher_count(const ahpga_bundle* bundle);
AHPGA_API const char* ahpga_bundle_teacher_id(const ahpga_bundle* bundle, size_t index);
/* Scores used for satisfaction (AHP result or the scores-file override). */
AHPGA_API double ahpga_bundle_score(const ahpga_bundle* bundle, size_t index);
AHPGA_API double ahpga_bundle_max_satisfaction(const ahpga_bundle* bundle);
AHPGA_API size_t ahpga_bundle_warning_count(const ahpga_bundle* bundle);
AHPGA_API const char* ahpga_bundle_warning(const ahpga_bundle* bundle, size_t index);

AHPGA_API ahpga_status ahpga_score(const ahpga_bundle* bundle,
                                   const ahpga_options* options,
                                   ahpga_report** out);
/* timetable_out may be NULL. */
AHPGA_API ahpga_status ahpga_solve(const ahpga_bundle* bundle,
                                   const ahpga_options* options,
                                   const char* timetable_out, ahpga_report** out);
AHPGA_API ahpga_status ahpga_check(const ahpga_bundle* bundle,
                                   const char* timetable_path,
                                   const ahpga_options* options,
                                   ahpga_report** out);
AHPGA_API ahpga_status ahpga_oracle(const ahpga_bundle* bundle,
                                    const ahpga_options* options,
                                    ahpga_report** out);

AHPGA_API const char* ahpga_report_text(const ahpga_report* report);
AHPGA_API const char* ahpga_report_json(const ahpga_report* report);
AHPGA_API int ahpga_report_exit_code(const ahpga_report* report);
AHPGA_API int ahpga_report_feasible(const ahpga_report* report);
AHPGA_API double ahpga_report_satisfaction(const ahpga_report* report);
AHPGA_API void ahpga_report_free(ahpga_report* report);

/* Stateless AHP helpers over row-major n x n matrices. */
AHPGA_API ahpga_status ahpga_preference_vector(const double* entries, size_t n,
                                               double* out);
AHPGA_API ahpga_status ahpga_consistency(const double* entries, size_t n,
                                         double* lambda_max, double* ci,
                                         double* cr);

#ifdef __cplusplus
}
#endif

#endif /* AHPGA_H */
