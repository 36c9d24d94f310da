#ifndef VCLAB_H
#define VCLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(VCLAB_BUILDING)
#define VCLAB_API __attribute__((visibility("default")))
#else
#define VCLAB_API
#endif

/* Status values double as process exit codes. */
typedef enum vclab_status {
    VCLAB_OK = 0,
    VCLAB_USAGE = 1,         /* invalid argument */
    VCLAB_IO = 2,            /* unreadable or malformed input */
    VCLAB_NEGATIVE = 3,      /* mask infeasible or set not shattered; report available */
    VCLAB_CAP_EXCEEDED = 4,
    VCLAB_BUDGET_EXCEEDED = 5, /* partial report available */
    VCLAB_VERIFY_FAILED = 6,   /* report available */
} vclab_status;

typedef struct vclab_points vclab_points;
typedef struct vclab_options vclab_options;
typedef struct vclab_report vclab_report;

VCLAB_API const char *vclab_version(void);
/* Message for the last failed call on this thread; never NULL. */
VCLAB_API const char *vclab_last_error(void);
VCLAB_API void vclab_string_free(char *s);

/* Point sets: {"dim": d, "points": [[...], ...]} with integer or "num/den" coordinates. */
VCLAB_API vclab_status vclab_points_parse(const char *json, vclab_points **out);
VCLAB_API vclab_status vclab_points_load(const char *path, vclab_points **out);
VCLAB_API size_t vclab_points_size(const vclab_points *points);
VCLAB_API size_t vclab_points_dim(const vclab_points *points);
VCLAB_API vclab_status vclab_points_to_json(const vclab_points *points, char **out);
VCLAB_API void vclab_points_free(vclab_points *points);

/* Defaults: class boxes, dimension taken from the points, jobs 1, cap 20, seed 1, no budget, verify on. */
VCLAB_API vclab_options *vclab_options_new(void);
VCLAB_API void vclab_options_free(vclab_options *options);
/* kind: boxes, boxes-nd, cubes, degenerate, d0 (anchored), cuts, or the upper-case names. */
VCLAB_API vclab_status vclab_options_set_class(vclab_options *options, const char *kind);
/* "origin" or a JSON box [["lo","hi"], ...]; anchored classes default to the origin. */
VCLAB_API vclab_status vclab_options_set_anchor(vclab_options *options, const char *anchor);
VCLAB_API void vclab_options_set_dim(vclab_options *options, size_t dim);
VCLAB_API void vclab_options_set_jobs(vclab_options *options, unsigned jobs);
VCLAB_API void vclab_options_set_cap(vclab_options *options, size_t cap);
VCLAB_API void vclab_options_set_seed(vclab_options *options, uint64_t seed);
VCLAB_API void vclab_options_set_budget(vclab_options *options, uint64_t budget);
VCLAB_API void vclab_options_set_verify(vclab_options *options, int verify);

/*
 * Commands. On VCLAB_OK, VCLAB_NEGATIVE, VCLAB_BUDGET_EXCEEDED and
 * VCLAB_VERIFY_FAILED *out receives a report to be freed by the caller;
 * otherwise *out is NULL and vclab_last_error() explains.
 */
/* mask: little-endian bit string ("101") or index list ("{0,2}"). */
VCLAB_API vclab_status vclab_carve(const vclab_points *points, const char *mask, const vclab_options *options,
                                   vclab_report **out);
VCLAB_API vclab_status vclab_shatter(const vclab_points *points, const vclab_options *options, vclab_report **out);
VCLAB_API vclab_status vclab_vcdim(const vclab_points *points, const vclab_options *options, vclab_report **out);
VCLAB_API vclab_status vclab_coeff(const vclab_points *points, const vclab_options *options, vclab_report **out);
/* kind: "d0" or "cubes". */
VCLAB_API vclab_status vclab_witness(const char *kind, size_t dim, const vclab_options *options, vclab_report **out);
/* Class from the options; n_max 0 picks one past the expected value. */
VCLAB_API vclab_status vclab_ordinal_vc(size_t dim, size_t n_max, const vclab_options *options, vclab_report **out);
VCLAB_API vclab_status vclab_resolve_even(size_t dim, const vclab_options *options, vclab_report **out);
/* climb_steps 0 picks 2 * n * dim. */
VCLAB_API vclab_status vclab_search_cubes(size_t dim, size_t n, uint64_t trials, uint32_t coordinate_range, size_t keep,
                                          size_t climb_steps, const vclab_options *options, vclab_report **out);
/* level: "fast" or "full". */
VCLAB_API vclab_status vclab_reproduce(const char *level, const vclab_options *options, vclab_report **out);

VCLAB_API vclab_status vclab_report_status(const vclab_report *report);
/* Pretty-printed JSON; with include_timing 0 every wall_time_seconds member is dropped. */
VCLAB_API char *vclab_report_json(const vclab_report *report, int include_timing);
/* The "result" member alone, compact and without timing. */
VCLAB_API char *vclab_report_result_json(const vclab_report *report);
VCLAB_API void vclab_report_free(vclab_report *report);

#ifdef __cplusplus
}
#endif

#endif
