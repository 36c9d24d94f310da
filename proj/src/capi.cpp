#include "vclab/vclab.h"

#include "vclab/commands.hpp"
#include "vclab/error.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct vclab_points {
    vclab::PointSet set;
};

struct vclab_options {
    vclab::ClassKind kind = vclab::ClassKind::Boxes;
    std::optional<vclab::Box> anchor;
    std::optional<std::size_t> dim;
    vclab::CommandOptions command;
};

struct vclab_report {
    vclab_status status;
    vclab::Json json;
};

namespace {

thread_local std::string last_error;

vclab_status fail(vclab_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

char *dup_string(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Runs body, translating exceptions into a status and the thread's last error.
template <class F>
vclab_status guarded(F &&body)
{
    try {
        return body();
    } catch (const vclab::Error &e) {
        return fail(static_cast<vclab_status>(vclab::status_for(e.code())), e.what());
    } catch (const std::bad_alloc &) {
        return fail(VCLAB_USAGE, "out of memory");
    } catch (const std::exception &e) {
        return fail(VCLAB_USAGE, e.what());
    }
}

vclab_status emit(vclab::CommandResult result, vclab_report **out)
{
    auto status = static_cast<vclab_status>(result.status);
    *out = new vclab_report{status, std::move(result.report)};
    return status;
}

vclab::ClassDescriptor class_for(const vclab_options &o, std::size_t dim)
{
    std::size_t d = o.dim.value_or(dim);
    if (o.kind == vclab::ClassKind::AnchoredDegenerateBalls) {
        if (o.anchor)
            return vclab::ClassDescriptor::anchored(*o.anchor);
        return vclab::ClassDescriptor::origin_anchored(d);
    }
    if (o.anchor)
        throw vclab::Error(vclab::ErrorCode::InvalidArgument, "an anchor only applies to the anchored class");
    return vclab::ClassDescriptor::of(o.kind, d);
}

const vclab_options &defaults()
{
    static const vclab_options o;
    return o;
}

const vclab_options &opts(const vclab_options *o) { return o ? *o : defaults(); }

#define VCLAB_REQUIRE(cond, what)                                                                                      \
    do {                                                                                                               \
        if (!(cond))                                                                                                   \
            return fail(VCLAB_USAGE, what);                                                                            \
    } while (0)

} // namespace

extern "C" {

const char *vclab_version(void) { return "0.1.0"; }

const char *vclab_last_error(void) { return last_error.c_str(); }

void vclab_string_free(char *s) { std::free(s); }

vclab_status vclab_points_parse(const char *json, vclab_points **out)
{
    VCLAB_REQUIRE(json && out, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new vclab_points{vclab::parse_point_set(json)};
        return VCLAB_OK;
    });
}

vclab_status vclab_points_load(const char *path, vclab_points **out)
{
    VCLAB_REQUIRE(path && out, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new vclab_points{vclab::read_point_set_file(path)};
        return VCLAB_OK;
    });
}

size_t vclab_points_size(const vclab_points *points) { return points ? points->set.size() : 0; }

size_t vclab_points_dim(const vclab_points *points) { return points ? points->set.dim() : 0; }

vclab_status vclab_points_to_json(const vclab_points *points, char **out)
{
    VCLAB_REQUIRE(points && out, "null argument");
    return guarded([&] {
        *out = dup_string(vclab::to_json(points->set).dump());
        return VCLAB_OK;
    });
}

void vclab_points_free(vclab_points *points) { delete points; }

vclab_options *vclab_options_new(void) { return new (std::nothrow) vclab_options(); }

void vclab_options_free(vclab_options *options) { delete options; }

vclab_status vclab_options_set_class(vclab_options *options, const char *kind)
{
    VCLAB_REQUIRE(options && kind, "null argument");
    return guarded([&] {
        options->kind = vclab::parse_class_kind(kind);
        return VCLAB_OK;
    });
}

vclab_status vclab_options_set_anchor(vclab_options *options, const char *anchor)
{
    VCLAB_REQUIRE(options && anchor, "null argument");
    return guarded([&] {
        if (std::strcmp(anchor, "origin") == 0) {
            options->anchor.reset();
            return VCLAB_OK;
        }
        vclab::Json j;
        try {
            j = vclab::Json::parse(anchor);
        } catch (const vclab::Json::exception &e) {
            throw vclab::Error(vclab::ErrorCode::InvalidArgument, std::string("anchor: ") + e.what());
        }
        vclab::Box box = vclab::box_from_json(j);
        if (!box.is_bounded())
            throw vclab::Error(vclab::ErrorCode::UnboundedAnchor, "anchor must be bounded");
        options->anchor = std::move(box);
        return VCLAB_OK;
    });
}

void vclab_options_set_dim(vclab_options *options, size_t dim)
{
    if (options)
        options->dim = dim;
}

void vclab_options_set_jobs(vclab_options *options, unsigned jobs)
{
    if (options)
        options->command.jobs = jobs == 0 ? 1 : jobs;
}

void vclab_options_set_cap(vclab_options *options, size_t cap)
{
    if (options)
        options->command.cap = cap;
}

void vclab_options_set_seed(vclab_options *options, uint64_t seed)
{
    if (options)
        options->command.seed = seed;
}

void vclab_options_set_budget(vclab_options *options, uint64_t budget)
{
    if (options)
        options->command.budget = budget;
}

void vclab_options_set_verify(vclab_options *options, int verify)
{
    if (options)
        options->command.verify = verify != 0;
}

vclab_status vclab_carve(const vclab_points *points, const char *mask, const vclab_options *options, vclab_report **out)
{
    VCLAB_REQUIRE(points && mask && out, "null argument");
    *out = nullptr;
    return guarded([&] {
        const auto &o = opts(options);
        return emit(vclab::cmd_carve(points->set, mask, class_for(o, points->set.dim()), o.command), out);
    });
}

vclab_status vclab_shatter(const vclab_points *points, const vclab_options *options, vclab_report **out)
{
    VCLAB_REQUIRE(points && out, "null argument");
    *out = nullptr;
    return guarded([&] {
        const auto &o = opts(options);
        return emit(vclab::cmd_shatter(points->set, class_for(o, points->set.dim()), o.command), out);
    });
}

vclab_status vclab_vcdim(const vclab_points *points, const vclab_options *options, vclab_report **out)
{
    VCLAB_REQUIRE(points && out, "null argument");
    *out = nullptr;
    return guarded([&] {
        const auto &o = opts(options);
        return emit(vclab::cmd_vcdim(points->set, class_for(o, points->set.dim()), o.command), out);
    });
}

vclab_status vclab_coeff(const vclab_points *points, const vclab_options *options, vclab_report **out)
{
    VCLAB_REQUIRE(points && out, "null argument");
    *out = nullptr;
    return guarded([&] {
        const auto &o = opts(options);
        return emit(vclab::cmd_coeff(points->set, class_for(o, points->set.dim()), o.command), out);
    });
}

vclab_status vclab_witness(const char *kind, size_t dim, const vclab_options *options, vclab_report **out)
{
    VCLAB_REQUIRE(kind && out, "null argument");
    *out = nullptr;
    return guarded([&] { return emit(vclab::cmd_witness(kind, dim, opts(options).command), out); });
}

vclab_status vclab_ordinal_vc(size_t dim, size_t n_max, const vclab_options *options, vclab_report **out)
{
    VCLAB_REQUIRE(out, "null argument");
    *out = nullptr;
    return guarded([&] {
        const auto &o = opts(options);
        if (o.anchor)
            throw vclab::Error(vclab::ErrorCode::InvalidArgument, "ordinal search anchors at the origin");
        std::optional<std::size_t> limit;
        if (n_max > 0)
            limit = n_max;
        return emit(vclab::cmd_ordinal_vc(o.kind, dim, limit, o.command), out);
    });
}

vclab_status vclab_resolve_even(size_t dim, const vclab_options *options, vclab_report **out)
{
    VCLAB_REQUIRE(out, "null argument");
    *out = nullptr;
    return guarded([&] { return emit(vclab::cmd_resolve_even(dim, opts(options).command), out); });
}

vclab_status vclab_search_cubes(size_t dim, size_t n, uint64_t trials, uint32_t coordinate_range, size_t keep,
                                size_t climb_steps, const vclab_options *options, vclab_report **out)
{
    VCLAB_REQUIRE(out, "null argument");
    *out = nullptr;
    return guarded([&] {
        vclab::CubeSearchOptions s;
        s.d = dim;
        s.n = n;
        s.trials = trials;
        s.coordinate_range = coordinate_range;
        s.keep = keep;
        s.climb_steps = climb_steps;
        return emit(vclab::cmd_search_cubes(s, opts(options).command), out);
    });
}

vclab_status vclab_reproduce(const char *level, const vclab_options *options, vclab_report **out)
{
    VCLAB_REQUIRE(level && out, "null argument");
    *out = nullptr;
    return guarded([&] { return emit(vclab::cmd_reproduce(level, opts(options).command), out); });
}

vclab_status vclab_report_status(const vclab_report *report) { return report ? report->status : VCLAB_USAGE; }

char *vclab_report_json(const vclab_report *report, int include_timing)
{
    if (!report)
        return nullptr;
    return dup_string((include_timing ? report->json : vclab::without_timing(report->json)).dump(2));
}

char *vclab_report_result_json(const vclab_report *report)
{
    if (!report)
        return nullptr;
    return dup_string(vclab::without_timing(report->json.at("result")).dump());
}

void vclab_report_free(vclab_report *report) { delete report; }

} // extern "C"
