/* Exercises the shared library through its C header only. */
#include "vclab/vclab.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                                                                   \
    do {                                                                                                               \
        if (!(cond)) {                                                                                                 \
            fprintf(stderr, "%s:%d: expected %s (last error: %s)\n", __FILE__, __LINE__, #cond, vclab_last_error());  \
            ++failures;                                                                                                \
        }                                                                                                              \
    } while (0)

static int contains(const char *haystack, const char *needle) { return haystack && strstr(haystack, needle) != NULL; }

static void points_and_carve(void)
{
    vclab_points *pts = NULL;
    EXPECT(vclab_points_parse("{\"dim\":2,\"points\":[[-1,1],[1,-1],[2,1]]}", &pts) == VCLAB_OK);
    EXPECT(vclab_points_size(pts) == 3);
    EXPECT(vclab_points_dim(pts) == 2);

    char *text = NULL;
    EXPECT(vclab_points_to_json(pts, &text) == VCLAB_OK);
    EXPECT(text && strcmp(text, "{\"dim\":2,\"points\":[[-1,1],[1,-1],[2,1]]}") == 0);
    vclab_string_free(text);

    vclab_options *o = vclab_options_new();
    EXPECT(vclab_options_set_class(o, "d0") == VCLAB_OK);
    vclab_report *r = NULL;
    EXPECT(vclab_carve(pts, "{0,2}", o, &r) == VCLAB_OK);
    EXPECT(vclab_report_status(r) == VCLAB_OK);
    char *result = vclab_report_result_json(r);
    EXPECT(contains(result, "\"feasible\":true"));
    vclab_string_free(result);
    vclab_report_free(r);

    r = NULL;
    EXPECT(vclab_carve(pts, "10", o, &r) == VCLAB_USAGE);
    EXPECT(r == NULL);
    EXPECT(contains(vclab_last_error(), "width"));

    EXPECT(vclab_shatter(pts, o, &r) == VCLAB_OK);
    char *full = vclab_report_json(r, 1);
    char *bare = vclab_report_json(r, 0);
    EXPECT(contains(full, "wall_time_seconds"));
    EXPECT(!contains(bare, "wall_time_seconds"));
    EXPECT(contains(bare, "\"schema_version\": 1"));
    vclab_string_free(full);
    vclab_string_free(bare);
    vclab_report_free(r);

    vclab_options_set_cap(o, 2);
    EXPECT(vclab_shatter(pts, o, &r) == VCLAB_CAP_EXCEEDED);
    EXPECT(r == NULL);

    EXPECT(vclab_options_set_class(o, "cubes") == VCLAB_OK);
    EXPECT(vclab_options_set_anchor(o, "[[\"0\",\"1\"],[\"0\",\"1\"]]") == VCLAB_OK);
    vclab_options_set_cap(o, 20);
    EXPECT(vclab_shatter(pts, o, &r) == VCLAB_USAGE);
    EXPECT(vclab_options_set_class(o, "anchored") == VCLAB_OK);
    vclab_status s = vclab_shatter(pts, o, &r);
    EXPECT((s == VCLAB_OK || s == VCLAB_NEGATIVE) && vclab_report_status(r) == s);
    vclab_report_free(r);
    EXPECT(vclab_options_set_anchor(o, "[[\"0\",\"inf\"]]") != VCLAB_OK);
    EXPECT(vclab_options_set_class(o, "spheres") == VCLAB_USAGE);

    vclab_options_free(o);
    vclab_points_free(pts);
}

static void parse_errors(void)
{
    vclab_points *pts = (vclab_points *)1;
    EXPECT(vclab_points_parse("{\"dim\":1,\"points\":[[0.5]]}", &pts) == VCLAB_IO);
    EXPECT(pts == NULL);
    EXPECT(vclab_points_parse("not json", &pts) == VCLAB_IO);
    EXPECT(vclab_points_load("/nonexistent/file.json", &pts) == VCLAB_IO);
    EXPECT(vclab_points_parse(NULL, &pts) == VCLAB_USAGE);
    EXPECT(strlen(vclab_last_error()) > 0);
}

static void commands(void)
{
    vclab_report *r = NULL;
    EXPECT(vclab_witness("cubes", 3, NULL, &r) == VCLAB_OK);
    char *result = vclab_report_result_json(r);
    EXPECT(contains(result, "\"size\":5"));
    EXPECT(contains(result, "\"verified\":true"));
    vclab_string_free(result);
    vclab_report_free(r);

    EXPECT(vclab_witness("d0", 16, NULL, &r) == VCLAB_CAP_EXCEEDED);
    vclab_options *o = vclab_options_new();
    vclab_options_set_verify(o, 0);
    EXPECT(vclab_witness("d0", 16, o, &r) == VCLAB_OK);
    vclab_report_free(r);

    EXPECT(vclab_options_set_class(o, "cuts") == VCLAB_OK);
    EXPECT(vclab_ordinal_vc(3, 0, o, &r) == VCLAB_OK);
    result = vclab_report_result_json(r);
    EXPECT(contains(result, "\"vc_exact\":3"));
    vclab_string_free(result);
    vclab_report_free(r);

    EXPECT(vclab_options_set_class(o, "boxes") == VCLAB_OK);
    vclab_options_set_budget(o, 10);
    EXPECT(vclab_ordinal_vc(2, 0, o, &r) == VCLAB_BUDGET_EXCEEDED);
    EXPECT(r != NULL);
    vclab_report_free(r);

    EXPECT(vclab_resolve_even(3, NULL, &r) == VCLAB_USAGE);
    EXPECT(vclab_search_cubes(1, 2, 10, 8, 3, 0, NULL, &r) == VCLAB_OK);
    result = vclab_report_result_json(r);
    EXPECT(contains(result, "\"found\":true"));
    vclab_string_free(result);
    vclab_report_free(r);

    EXPECT(vclab_reproduce("medium", NULL, &r) == VCLAB_USAGE);
    vclab_options_free(o);
    EXPECT(strcmp(vclab_version(), "0.1.0") == 0);
}

int main(void)
{
    points_and_carve();
    parse_errors();
    commands();
    if (failures)
        fprintf(stderr, "%d failures\n", failures);
    else
        printf("all C API checks passed\n");
    return failures != 0;
}
