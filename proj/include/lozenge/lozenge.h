#ifndef LOZENGE_LOZENGE_H
#define LOZENGE_LOZENGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define LZ_API __attribute__((visibility("default")))
#else
#define LZ_API
#endif

/* Status codes. Every function returns one of these; LZ_OK is zero. */
typedef enum lz_status {
  LZ_OK = 0,
  LZ_NOT_HYPERBOLIC = 1,
  LZ_DEPTH_TOO_LARGE = 2,
  LZ_DEGENERATE_PAIR = 3,
  LZ_DEGENERATE_POINTS = 4,
  LZ_AMBIGUOUS_GEOMETRY = 5,
  LZ_MIXED_SIGN_PROFILE = 6,
  LZ_INCONSISTENT_VERDICTS = 7,
  LZ_PARSE_ERROR = 8,
  LZ_VALIDATION_ERROR = 9,
  LZ_UNKNOWN_GENERATOR = 10,
  LZ_INVALID_ARGUMENT = 11,
  LZ_IO_ERROR = 12,
  LZ_INTERNAL = 100
} lz_status;

typedef enum lz_kind { LZ_IDENTITY = 0, LZ_HYPERBOLIC = 1, LZ_PARABOLIC = 2, LZ_ELLIPTIC = 3 } lz_kind;

/* A group with its configuration (depths, tolerance, cache directory). */
typedef struct lz_session lz_session;
/* A group element with the reduced word that produced it. */
typedef struct lz_element lz_element;
/* The outcome of lz_run: exit code, report text and optional figures. */
typedef struct lz_result lz_result;

/* Message of the last failure on the calling thread; never NULL. */
LZ_API const char* lz_last_error(void);
LZ_API const char* lz_status_name(lz_status status);

/* "modular-torus" or "octagon-genus2". */
LZ_API lz_status lz_session_create(const char* group_name, lz_session** out);
/* JSON configuration from a file or from text. */
LZ_API lz_status lz_session_from_config_file(const char* path, lz_session** out);
LZ_API lz_status lz_session_from_config_text(const char* json, lz_session** out);
LZ_API void lz_session_destroy(lz_session* session);

/* Replaces the group by a built-in one. */
LZ_API lz_status lz_session_set_group(lz_session* session, const char* group_name);
/* Overrides; negative depth arguments leave that depth unchanged. */
LZ_API lz_status lz_session_set_depths(lz_session* session, int lozenge, int linking, int oracle);
LZ_API lz_status lz_session_set_partner_range(lz_session* session, int range);
LZ_API lz_status lz_session_set_tolerance(lz_session* session, double eps);
/* NULL or "" disables the disk cache. */
LZ_API lz_status lz_session_set_cache_dir(lz_session* session, const char* dir);
LZ_API lz_status lz_session_group_name(const lz_session* session, const char** out);
LZ_API lz_status lz_session_rank(const lz_session* session, int* out);

/* Runs info, classify, chain, annulus, cocyl or render. word may be NULL for
   info; n <= 0 takes the configured chain length. Errors of the command are
   reported through the result's exit code and report, not the status. */
LZ_API lz_status lz_run(lz_session* session, const char* command, const char* word, int n, int render, int timings,
                        lz_result** out);
LZ_API int lz_result_exit_code(const lz_result* result);
LZ_API const char* lz_result_report(const lz_result* result);
/* NULL when the command produced no figure. */
LZ_API const char* lz_result_svg(const lz_result* result);
LZ_API const char* lz_result_csv(const lz_result* result);
LZ_API void lz_result_destroy(lz_result* result);

LZ_API lz_status lz_element_from_word(const lz_session* session, const char* word, lz_element** out);
LZ_API void lz_element_destroy(lz_element* element);
/* Row-major a, b, c, d with determinant one. */
LZ_API lz_status lz_element_matrix(const lz_element* element, double out[4]);
/* Writes the reduced word; needs capacity >= length + 1. */
LZ_API lz_status lz_element_word(const lz_element* element, char* buffer, size_t capacity);
LZ_API lz_status lz_element_classify(const lz_session* session, const lz_element* element, lz_kind* out);
/* Circle coordinates in [0, 1) of the attracting and repelling fixed points. */
LZ_API lz_status lz_element_axis(const lz_session* session, const lz_element* element, double* attracting,
                                 double* repelling);
/* Strip coordinates (u, s) of the element's periodic orbit. */
LZ_API lz_status lz_element_orbit(const lz_session* session, const lz_element* element, double* u, double* s);

/* eta^n on strip coordinates; the input must satisfy s - 1 < u < s. */
LZ_API lz_status lz_eta_power(double u, double s, int n, double* u_out, double* s_out);
/* Cyclic linking of two pairs of circle points (each {a_plus, a_minus}). */
LZ_API lz_status lz_linked(const double p[2], const double q[2], double eps, int* out);
/* Deduplicated element count of the enumeration up to depth. */
LZ_API lz_status lz_enumeration_count(lz_session* session, int depth, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif
