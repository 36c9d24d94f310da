#include "vclab/commands.hpp"

#include "vclab/constructions.hpp"
#include "vclab/error.hpp"
#include "vclab/verify.hpp"

#include <chrono>

namespace vclab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Json envelope(const char *command, const std::optional<ClassDescriptor> &cls, Json inputs, const CommandOptions &o)
{
    Json r;
    r["schema_version"] = schema_version;
    r["command"] = command;
    r["version"] = library_version();
    r["class"] = cls ? to_json(*cls) : Json(nullptr);
    r["inputs"] = std::move(inputs);
    r["inputs_digest"] = digest(r["inputs"]);
    r["seed"] = o.seed;
    r["result"] = Json::object();
    r["counters"] = Json::object();
    return r;
}

void check_class(const PointSet &s, const ClassDescriptor &cls)
{
    cls.validate();
    if (cls.dim != s.dim())
        throw Error(ErrorCode::DimensionMismatch, "class dimension " + std::to_string(cls.dim) +
                                                      " does not match point dimension " + std::to_string(s.dim()));
}

ShatterOptions shatter_options(const CommandOptions &o) { return ShatterOptions{o.cap, std::max(o.jobs, 1U)}; }

SearchOptions search_options(const CommandOptions &o)
{
    SearchOptions so;
    so.jobs = std::max(o.jobs, 1U);
    if (o.budget)
        so.budget = *o.budget;
    return so;
}

Json sauer_json(const ClassDescriptor &cls, std::uint64_t realized, std::size_t n)
{
    std::size_t v = expected_vc(cls.kind, cls.dim);
    if (v == 0 || n < v)
        return Json{{"v", v}, {"applies", false}};
    Scalar bound = sauer_shelah_bound(v, n);
    return Json{{"v", v}, {"applies", true}, {"bound", to_json(bound)}, {"holds", Scalar(static_cast<std::int64_t>(realized)) <= bound}};
}

} // namespace

Status status_for(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::Parse: return Status::Io;
        case ErrorCode::CapExceeded: return Status::Cap;
        case ErrorCode::BudgetExceeded: return Status::Budget;
        default: return Status::Usage;
    }
}

Json to_json(const VcSearchReport &r)
{
    Json sizes = Json::array();
    for (const auto &s : r.sizes)
        sizes.push_back(Json{{"n", s.n},
                             {"outcome", std::string(to_string(s.outcome))},
                             {"configs_examined", s.configs_examined},
                             {"configs_after_symmetry", s.configs_after_symmetry},
                             {"config", s.config ? to_json(*s.config) : Json(nullptr)},
                             {"witness", s.witness ? to_json(*s.witness) : Json(nullptr)}});
    Json out{{"class", to_json(r.cls)},
             {"n_max", r.n_max},
             {"vc_exact", r.vc_exact ? Json(*r.vc_exact) : Json(nullptr)},
             {"lower_bound", r.lower_bound},
             {"budget_exceeded", r.budget_exceeded},
             {"sizes", std::move(sizes)},
             {"assumptions", r.assumptions}};
    if (r.bracket) {
        out["bracket"] = Json::array({r.bracket->first, r.bracket->second});
        out["bracket_holds"] = r.bracket_holds;
    }
    out["configs_examined"] = r.configs_examined;
    out["configs_after_symmetry"] = r.configs_after_symmetry;
    out["wall_time_seconds"] = r.wall_time_seconds;
    return out;
}

Json to_json(const CubeSearchReport &r)
{
    Json best = Json::array();
    for (const auto &c : r.best)
        best.push_back(Json{{"set", to_json(c.set)},
                            {"score", c.score},
                            {"shattered", c.verdict.shattered},
                            {"failing_mask", c.verdict.failing_mask ? Json(c.verdict.failing_mask->to_bit_string()) : Json(nullptr)}});
    const auto &o = r.options;
    return Json{{"options", {{"d", o.d}, {"n", o.n}, {"trials", o.trials}, {"seed", o.seed},
                             {"coordinate_range", o.coordinate_range}, {"keep", o.keep}, {"climb_steps", o.climb_steps}}},
                {"found", r.found},
                {"best_score", r.best_score},
                {"full_score", r.full_score},
                {"best", std::move(best)},
                {"evidence_only", true},
                {"wall_time_seconds", r.wall_time_seconds}};
}

CommandResult cmd_carve(const PointSet &s, const std::string &mask_text, const ClassDescriptor &cls, const CommandOptions &o)
{
    auto start = Clock::now();
    check_class(s, cls);
    SubsetMask mask = parse_mask(mask_text, s.size());
    Json r = envelope("carve", cls, Json{{"points", to_json(s)}, {"mask", mask.to_bit_string()}}, o);
    auto w = carve(s, mask, cls);
    r["result"] = Json{{"feasible", w.has_value()},
                       {"mask", mask.to_bit_string()},
                       {"indices", mask_indices(mask)},
                       {"witness", w ? to_json(w->region) : Json(nullptr)}};
    r["wall_time_seconds"] = seconds_since(start);
    return {w ? Status::Ok : Status::Negative, std::move(r)};
}

CommandResult cmd_shatter(const PointSet &s, const ClassDescriptor &cls, const CommandOptions &o)
{
    auto start = Clock::now();
    check_class(s, cls);
    Json r = envelope("shatter", cls, Json{{"points", to_json(s)}}, o);
    auto v = is_shattered(s, cls, shatter_options(o));
    r["result"] = Json{{"shattered", v.shattered},
                       {"n", s.size()},
                       {"failing_mask", v.failing_mask ? Json(v.failing_mask->to_bit_string()) : Json(nullptr)},
                       {"certificate", v.certificate ? to_json(*v.certificate) : Json(nullptr)}};
    r["counters"]["masks"] = std::uint64_t{1} << s.size();
    r["wall_time_seconds"] = seconds_since(start);
    return {v.shattered ? Status::Ok : Status::Negative, std::move(r)};
}

CommandResult cmd_vcdim(const PointSet &s, const ClassDescriptor &cls, const CommandOptions &o)
{
    auto start = Clock::now();
    check_class(s, cls);
    Json r = envelope("vcdim", cls, Json{{"points", to_json(s)}}, o);
    auto lb = vc_lower_bound_on(s, cls, shatter_options(o));
    r["result"] = Json{{"vc_lower_bound", lb.size},
                       {"subset", mask_indices(lb.subset)},
                       {"certificate", to_json(lb.certificate)}};
    r["wall_time_seconds"] = seconds_since(start);
    return {Status::Ok, std::move(r)};
}

CommandResult cmd_coeff(const PointSet &s, const ClassDescriptor &cls, const CommandOptions &o)
{
    auto start = Clock::now();
    check_class(s, cls);
    Json r = envelope("coeff", cls, Json{{"points", to_json(s)}}, o);
    auto c = shattering_count(s, cls, shatter_options(o));
    r["result"] = Json{{"realized_masks", c.realized_masks},
                       {"n", c.n},
                       {"total_masks", std::uint64_t{1} << c.n},
                       {"sauer_shelah", sauer_json(cls, c.realized_masks, c.n)}};
    r["wall_time_seconds"] = seconds_since(start);
    return {Status::Ok, std::move(r)};
}

CommandResult cmd_witness(const std::string &kind, std::size_t d, const CommandOptions &o)
{
    auto start = Clock::now();
    if (d == 0)
        throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
    bool cubes = kind == "cubes";
    if (!cubes && kind != "d0")
        throw Error(ErrorCode::InvalidArgument, "witness kind must be d0 or cubes");
    auto cls = cubes ? ClassDescriptor::of(ClassKind::Cubes, d) : ClassDescriptor::origin_anchored(d);
    auto s = cubes ? witness_cubes(d) : witness_d0(d);
    Json r = envelope("witness", cls, Json{{"kind", kind}, {"dim", d}, {"verify", o.verify}}, o);
    r["result"] = Json{{"size", s.size()}, {"points", to_json(s)}, {"verified", nullptr}, {"certificate", nullptr}};
    Status status = Status::Ok;
    if (o.verify) {
        auto v = is_shattered(s, cls, shatter_options(o));
        r["result"]["verified"] = v.shattered;
        if (v.certificate)
            r["result"]["certificate"] = to_json(*v.certificate);
        if (!v.shattered)
            status = Status::VerifyFailed;
    }
    r["wall_time_seconds"] = seconds_since(start);
    return {status, std::move(r)};
}

CommandResult cmd_ordinal_vc(ClassKind kind, std::size_t d, std::optional<std::size_t> n_max, const CommandOptions &o)
{
    if (d == 0)
        throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
    std::size_t limit = n_max.value_or(expected_vc(kind, d) + 1);
    auto so = search_options(o);
    Json r = envelope("ordinal-vc", std::nullopt,
                      Json{{"kind", std::string(to_string(kind))}, {"dim", d}, {"n_max", limit}, {"budget", so.budget}}, o);
    auto rep = exact_vc_ordinal(kind, d, limit, so);
    r["class"] = to_json(rep.cls);
    r["result"] = to_json(rep);
    r["counters"] = Json{{"configs_examined", rep.configs_examined}, {"configs_after_symmetry", rep.configs_after_symmetry}};
    r["wall_time_seconds"] = rep.wall_time_seconds;
    r["result"].erase("wall_time_seconds");
    return {rep.budget_exceeded ? Status::Budget : Status::Ok, std::move(r)};
}

CommandResult cmd_resolve_even(std::size_t d, const CommandOptions &o)
{
    auto so = search_options(o);
    Json r = envelope("resolve-d2", std::nullopt, Json{{"dim", d}, {"budget", so.budget}}, o);
    auto rep = resolve_even_degenerate(d, so);
    r["class"] = to_json(rep.cls);
    r["result"] = to_json(rep);
    r["counters"] = Json{{"configs_examined", rep.configs_examined}, {"configs_after_symmetry", rep.configs_after_symmetry}};
    r["wall_time_seconds"] = rep.wall_time_seconds;
    r["result"].erase("wall_time_seconds");
    Status status = rep.budget_exceeded ? Status::Budget : rep.bracket_holds ? Status::Ok : Status::VerifyFailed;
    return {status, std::move(r)};
}

CommandResult cmd_search_cubes(const CubeSearchOptions &search, const CommandOptions &o)
{
    CubeSearchOptions opts = search;
    opts.seed = o.seed;
    opts.jobs = std::max(o.jobs, 1U);
    Json r = envelope("search-cubes", ClassDescriptor::of(ClassKind::Cubes, opts.d),
                      Json{{"d", opts.d}, {"n", opts.n}, {"trials", opts.trials}, {"coordinate_range", opts.coordinate_range},
                           {"keep", opts.keep}, {"climb_steps", opts.climb_steps}},
                      o);
    auto rep = random_cube_search(opts);
    r["result"] = to_json(rep);
    r["result"].erase("wall_time_seconds");
    r["counters"] = Json{{"trials", opts.trials}};
    r["wall_time_seconds"] = rep.wall_time_seconds;
    return {Status::Ok, std::move(r)};
}

CommandResult cmd_reproduce(const std::string &level, const CommandOptions &o)
{
    VerifyOptions vo;
    vo.level = parse_verify_level(level);
    vo.jobs = std::max(o.jobs, 1U);
    vo.seed = o.seed;
    Json r = envelope("verify-paper", std::nullopt, Json{{"level", level}}, o);
    auto rep = run_reproduction(vo);
    r["result"] = to_json(rep);
    r["result"].erase("wall_time_seconds");
    std::size_t passed = 0;
    for (const auto &item : rep.items)
        passed += item.passed;
    r["counters"] = Json{{"items", rep.items.size()}, {"passed", passed}};
    r["wall_time_seconds"] = rep.wall_time_seconds;
    return {rep.all_passed ? Status::Ok : Status::VerifyFailed, std::move(r)};
}

} // namespace vclab
