#include "vclab/verify.hpp"

#include "vclab/commands.hpp"
#include "vclab/constructions.hpp"
#include "vclab/error.hpp"
#include "vclab/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace vclab {

namespace {

using Clock = std::chrono::steady_clock;

struct Coefficient {
    ClassKind kind;
    std::size_t d;
    std::size_t n;
    std::uint64_t realized;
};

struct Context {
    VerifyOptions options;
    ShatterOptions shatter;
    std::vector<Coefficient> coefficients;
    std::vector<PointSet> d0_shattered;

    std::mt19937_64 rng_for(int item) const
    {
        std::seed_seq seq{options.seed, static_cast<std::uint64_t>(item)};
        return std::mt19937_64(seq);
    }

    void log(const ClassDescriptor &cls, std::size_t n, std::uint64_t realized)
    {
        coefficients.push_back({cls.kind, cls.dim, n, realized});
    }

    void log_shattered(const ClassDescriptor &cls, const PointSet &s)
    {
        log(cls, s.size(), std::uint64_t{1} << s.size());
        if (cls.kind == ClassKind::AnchoredDegenerateBalls)
            d0_shattered.push_back(s);
    }
};

int uniform(std::mt19937_64 &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scalar random_rational(std::mt19937_64 &rng, int range, int max_den)
{
    int den = uniform(rng, 1, max_den);
    return Scalar(uniform(rng, -range * den, range * den), den);
}

/// Distinct points with integer coordinates in [lo, hi]; ties are common.
PointSet random_grid_set(std::mt19937_64 &rng, std::size_t d, std::size_t n, int lo, int hi)
{
    std::set<Point> seen;
    std::vector<Point> pts;
    while (pts.size() < n) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < d; ++i)
            c.emplace_back(uniform(rng, lo, hi));
        Point p(std::move(c));
        if (seen.insert(p).second)
            pts.push_back(std::move(p));
    }
    return PointSet(d, std::move(pts));
}

Box random_bounded_box(std::mt19937_64 &rng, std::size_t d, int range, int max_den)
{
    std::vector<Interval> ivs;
    for (std::size_t i = 0; i < d; ++i) {
        Scalar a = random_rational(rng, range, max_den);
        Scalar w = abs(random_rational(rng, 2, max_den));
        ivs.emplace_back(a, a + w);
    }
    return Box(std::move(ivs));
}

std::string join(const std::vector<std::string> &parts)
{
    std::string out;
    for (const auto &p : parts)
        out += (out.empty() ? "" : "; ") + p;
    return out;
}

// 1. Cube witnesses for d = 1..5.
void cube_witnesses(Context &ctx, CriterionResult &r)
{
    const std::size_t sizes[] = {2, 3, 5, 6, 8};
    r.passed = true;
    Json rows = Json::array();
    for (std::size_t d = 1; d <= 5; ++d) {
        auto s = witness_cubes(d);
        auto cls = ClassDescriptor::of(ClassKind::Cubes, d);
        auto v = is_shattered(s, cls, ctx.shatter);
        bool ok = s.size() == sizes[d - 1] && v.shattered && v.certificate->revalidate();
        if (v.shattered)
            ctx.log_shattered(cls, s);
        rows.push_back(Json{{"d", d}, {"size", s.size()}, {"shattered", v.shattered}, {"ok", ok}});
        r.passed = r.passed && ok;
    }
    r.data["dims"] = std::move(rows);
    r.detail = r.passed ? "sizes 2,3,5,6,8, every certificate revalidated" : "a cube witness is missing or not shattered";
}

// 2. Anchored witnesses for d = 1..6.
void anchored_witnesses(Context &ctx, CriterionResult &r)
{
    const std::size_t sizes[] = {1, 3, 4, 6, 7, 9};
    r.passed = true;
    Json rows = Json::array();
    for (std::size_t d = 1; d <= 6; ++d) {
        auto s = witness_d0(d);
        auto cls = ClassDescriptor::origin_anchored(d);
        auto v = is_shattered(s, cls, ctx.shatter);
        bool ok = s.size() == sizes[d - 1] && v.shattered && v.certificate->revalidate();
        if (v.shattered)
            ctx.log_shattered(cls, s);
        rows.push_back(Json{{"d", d}, {"size", s.size()}, {"shattered", v.shattered}, {"ok", ok}});
        r.passed = r.passed && ok;
    }
    r.data["dims"] = std::move(rows);
    r.detail = r.passed ? "sizes 1,3,4,6,7,9, every certificate revalidated" : "an anchored witness is missing or not shattered";
}

Json search_row(const VcSearchReport &rep, std::size_t expected)
{
    return Json{{"class", std::string(to_string(rep.cls.kind))},
                {"d", rep.cls.dim},
                {"expected", expected},
                {"vc_exact", rep.vc_exact ? Json(*rep.vc_exact) : Json(nullptr)},
                {"lower_bound", rep.lower_bound},
                {"configs_examined", rep.configs_examined},
                {"configs_after_symmetry", rep.configs_after_symmetry}};
}

void log_search(Context &ctx, const VcSearchReport &rep)
{
    for (const auto &s : rep.sizes)
        if (s.witness)
            ctx.log_shattered(rep.cls, *s.witness);
}

// 3. Exhaustive ordinal VC values.
void ordinal_values(Context &ctx, CriterionResult &r)
{
    struct Case {
        ClassKind kind;
        std::size_t d, expected;
    };
    const Case cases[] = {
        {ClassKind::AnchoredDegenerateBalls, 1, 1}, {ClassKind::AnchoredDegenerateBalls, 2, 3},
        {ClassKind::Boxes, 1, 2},                   {ClassKind::Boxes, 2, 4},
        {ClassKind::AxisCuts, 1, 1},                {ClassKind::AxisCuts, 2, 2},
        {ClassKind::AxisCuts, 3, 3},                {ClassKind::Cubes, 1, 2},
    };
    SearchOptions so;
    so.jobs = ctx.options.jobs;
    r.passed = true;
    Json rows = Json::array();
    std::vector<std::string> bad;
    for (const auto &c : cases) {
        auto rep = exact_vc_ordinal(c.kind, c.d, c.expected + 1, so);
        log_search(ctx, rep);
        rows.push_back(search_row(rep, c.expected));
        if (rep.vc_exact != c.expected) {
            r.passed = false;
            bad.push_back(std::string(to_string(c.kind)) + " d=" + std::to_string(c.d));
        }
    }
    r.data["cases"] = std::move(rows);
    r.detail = r.passed ? "all eight values closed by exhaustion" : "mismatch: " + join(bad);
}

// 4. Degenerate balls: d = 1 exact, d = 3 witness of size 5, d = 2 resolved.
void degenerate_values(Context &ctx, CriterionResult &r)
{
    SearchOptions so;
    so.jobs = ctx.options.jobs;
    std::vector<std::string> notes;

    auto one = exact_vc_ordinal(ClassKind::DegenerateBalls, 1, 3, so);
    log_search(ctx, one);
    bool one_ok = one.vc_exact == 2u;
    notes.push_back("d=1 vc_exact " + (one.vc_exact ? std::to_string(*one.vc_exact) : std::string("open")));

    auto cls3 = ClassDescriptor::of(ClassKind::DegenerateBalls, 3);
    auto lift = witness_cubes(3);
    auto lift_fail = first_failing_mask(lift, cls3, ctx.shatter);
    std::optional<PointSet> five;
    if (!lift_fail)
        five = lift;
    auto three = exact_vc_ordinal(ClassKind::DegenerateBalls, 3, 5, so);
    log_search(ctx, three);
    for (const auto &s : three.sizes)
        if (s.n == 5 && s.witness)
            five = s.witness;
    bool three_ok = five.has_value();
    if (three_ok) {
        notes.push_back("d=3 size-5 witness found");
    } else {
        std::ostringstream msg;
        msg << "d=3 no size-5 witness: the cube lift fails mask " << lift_fail->to_bit_string();
        for (const auto &s : three.sizes)
            if (s.n == 5)
                msg << ", ordinal search at n=5 " << to_string(s.outcome) << " after " << s.configs_examined
                    << " configurations (" << s.configs_after_symmetry << " canonical)";
        if (three.vc_exact)
            msg << ", vc_exact " << *three.vc_exact;
        notes.push_back(msg.str());
    }

    auto two = resolve_even_degenerate(2, so);
    log_search(ctx, two);
    bool two_ok = false;
    if (two.vc_exact && two.bracket_holds && (*two.vc_exact == 3 || *two.vc_exact == 4)) {
        std::size_t v = *two.vc_exact;
        bool has_witness = false, exhausted = false;
        for (const auto &s : two.sizes) {
            if (s.n == v && s.witness)
                has_witness = is_shattered(*s.witness, two.cls, ctx.shatter).shattered;
            if (s.n == v + 1)
                exhausted = s.outcome == SearchOutcome::ExhaustedNone;
        }
        two_ok = has_witness && exhausted;
    }
    notes.push_back("d=2 resolved to " + (two.vc_exact ? std::to_string(*two.vc_exact) : std::string("open")));

    r.passed = one_ok && three_ok && two_ok;
    r.data["d1"] = search_row(one, 2);
    r.data["d3"] = search_row(three, 5);
    r.data["d3"]["lift_failing_mask"] = lift_fail ? Json(lift_fail->to_bit_string()) : Json(nullptr);
    r.data["d3"]["size5_witness"] = five ? to_json(*five) : Json(nullptr);
    r.data["d2"] = search_row(two, 3);
    r.data["d2"]["bracket"] = Json::array({3, 4});
    r.data["d2"]["assumptions"] = two.assumptions;
    r.detail = join(notes);
}

// 5. Cube-shattered sets project to anchored-shattered sets one dimension down.
void downward(Context &ctx, CriterionResult &r)
{
    r.passed = true;
    Json rows = Json::array();
    for (std::size_t d = 2; d <= 4; ++d) {
        auto cls = ClassDescriptor::of(ClassKind::Cubes, d);
        auto s = twitch(witness_cubes(d), cls, TwitchOptions{ctx.shatter, 64});
        auto down = cube_downward_projection(s, ctx.shatter);
        bool ok = down.anchored_shattered && down.projected.dim() == d - 1 && down.projected.size() + 2 == s.size();
        rows.push_back(Json{{"d", d}, {"axis", down.axis}, {"projected", to_json(down.projected)},
                            {"anchor", to_json(down.anchor)}, {"anchored_shattered", down.anchored_shattered}});
        r.passed = r.passed && ok;
    }
    r.data["dims"] = std::move(rows);
    r.detail = r.passed ? "anchored-shattered for d=2,3,4" : "a projection is not anchored-shattered";
}

Point translate(const Point &p, const std::vector<Scalar> &t)
{
    std::vector<Scalar> c(p.coords().begin(), p.coords().end());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += t[i];
    return Point(std::move(c));
}

// 6. Transport between an anchor box and the origin.
void transport(Context &ctx, CriterionResult &r)
{
    auto rng = ctx.rng_for(6);
    const int instances = 200;
    std::map<std::string, int> failures;
    std::uint64_t masks_checked = 0;
    for (int t = 0; t < instances; ++t) {
        std::size_t d = 1 + t % 3;
        auto base = witness_d0(d);
        Box f = random_bounded_box(rng, d, 5, 4);
        std::vector<Scalar> shift;
        for (std::size_t i = 0; i < d; ++i)
            shift.push_back(random_rational(rng, 6, 3));
        // A preimage of each base point under the collapse onto f, then a common translation.
        std::vector<Point> lifted;
        for (const auto &y : base) {
            std::vector<Scalar> c;
            for (std::size_t i = 0; i < d; ++i) {
                const Scalar &a = f[i].lo().value(), &b = f[i].hi().value();
                if (y[i].sign() > 0)
                    c.push_back(b + y[i]);
                else if (y[i].sign() < 0)
                    c.push_back(a + y[i]);
                else
                    c.push_back(a + (b - a) * Scalar(uniform(rng, 0, 4), 4));
            }
            lifted.push_back(translate(Point(std::move(c)), shift));
        }
        std::vector<Interval> moved;
        for (std::size_t i = 0; i < d; ++i)
            moved.emplace_back(f[i].lo().value() + shift[i], f[i].hi().value() + shift[i]);
        Box anchor(std::move(moved));
        PointSet s(d, std::move(lifted));

        if (anchor_collapse(anchor, s) != base)
            ++failures["image of the lift is not the base set"];
        auto cls = ClassDescriptor::anchored(anchor);
        auto v = is_shattered(s, cls, ctx.shatter);
        if (!v.shattered) {
            ++failures["lift not shattered by balls containing the anchor"];
            continue;
        }
        ctx.log(cls, s.size(), std::uint64_t{1} << s.size());
        auto origin = ClassDescriptor::origin_anchored(d);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m) {
            ++masks_checked;
            const Box &ball = std::get<Box>(v.certificate->witnesses[m].region);
            Box image = anchor_collapse_box(anchor, ball);
            if (!is_member_of(image, origin))
                ++failures["image ball not degenerate or missing the origin"];
            for (std::size_t i = 0; i < s.size(); ++i)
                if (image.contains(base[i]) != ball.contains(s[i]) || ball.contains(s[i]) != (((m >> i) & 1) != 0))
                    ++failures["image trace differs"];

            auto w = carve(base, SubsetMask(m, base.size()), origin);
            if (!w) {
                ++failures["base mask not carvable"];
                continue;
            }
            const Box &target = std::get<Box>(w->region);
            Box pre = anchor_expand_box(anchor, target);
            if (!is_member_of(pre, cls))
                ++failures["preimage ball not degenerate or missing the anchor"];
            for (std::size_t i = 0; i < s.size(); ++i)
                if (pre.contains(s[i]) != target.contains(base[i]))
                    ++failures["preimage trace differs"];
            if (anchor_collapse_box(anchor, pre) != target)
                ++failures["collapse of expand is not the identity"];
        }
    }
    int total = 0;
    Json fails = Json::object();
    for (const auto &[what, count] : failures) {
        fails[what] = count;
        total += count;
    }
    r.passed = total == 0;
    r.data = Json{{"instances", instances}, {"masks_checked", masks_checked}, {"failures", std::move(fails)}};
    r.detail = r.passed ? std::to_string(instances) + " instances, " + std::to_string(masks_checked) + " masks, no failures"
                        : std::to_string(total) + " transport failures";
}

// 7. Perturbation to injective projections keeps shattering.
void twitching(Context &ctx, CriterionResult &r)
{
    auto rng = ctx.rng_for(7);
    const ClassKind kinds[] = {ClassKind::Boxes, ClassKind::Cubes, ClassKind::DegenerateBalls,
                               ClassKind::AnchoredDegenerateBalls};
    int inputs = 0, colliding = 0, ok = 0;
    Json per_class = Json::object();
    std::vector<std::string> bad;
    for (int t = 0; t < 100; ++t) {
        ClassKind kind = kinds[t % 4];
        std::size_t d = 1 + (t / 4) % 3;
        auto cls = kind == ClassKind::AnchoredDegenerateBalls ? ClassDescriptor::origin_anchored(d)
                                                              : ClassDescriptor::of(kind, d);
        std::size_t top = std::min<std::size_t>(expected_vc(kind, d), kind == ClassKind::Boxes ? 5 : 6);
        std::optional<PointSet> input;
        for (int attempt = 0; attempt < 4000 && !input; ++attempt) {
            std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(top)));
            auto s = kind == ClassKind::AnchoredDegenerateBalls ? random_grid_set(rng, d, n, -2, 2)
                                                                : random_grid_set(rng, d, n, 0, 3);
            // Prefer inputs with collisions; in one dimension there are none.
            if (d > 1 && s.has_injective_projections() && attempt < 3000)
                continue;
            if (n < 2 && attempt < 3000)
                continue;
            if (!first_failing_mask(s, cls, ctx.shatter))
                input = s;
        }
        if (!input) {
            bad.push_back("no shattered input for " + cls.to_string());
            continue;
        }
        ++inputs;
        colliding += !input->has_injective_projections();
        ctx.log_shattered(cls, *input);
        auto out = twitch(*input, cls, TwitchOptions{ctx.shatter, 64});
        bool good = out.size() == input->size() && out.has_injective_projections() &&
                    !first_failing_mask(out, cls, ctx.shatter);
        ok += good;
        if (!good)
            bad.push_back("twitch broke " + cls.to_string());
        per_class[std::string(to_string(kind))] = per_class.value(std::string(to_string(kind)), 0) + 1;
    }
    r.passed = inputs == 100 && ok == 100;
    r.data = Json{{"inputs", inputs}, {"with_collisions", colliding}, {"passed", ok}, {"per_class", per_class}};
    r.detail = r.passed ? "100 inputs (" + std::to_string(colliding) + " with collisions), all injective and still shattered"
                        : join(bad);
}

// 8. Extremal counting on every anchored-shattered set met so far.
void extremal(Context &ctx, CriterionResult &r)
{
    int checked = 0, good = 0;
    Json rows = Json::array();
    for (const auto &s : ctx.d0_shattered) {
        std::size_t d = s.dim();
        auto cls = ClassDescriptor::origin_anchored(d);
        auto t = s.has_injective_projections() ? s : twitch(s, cls, TwitchOptions{ctx.shatter, 64});
        auto c = extremal_certificate(t);
        bool ok = c.nonextremal.empty() && c.once_count <= d && 2 * t.size() <= 2 * d + c.once_count;
        ++checked;
        good += ok;
        rows.push_back(Json{{"d", d}, {"size", t.size()}, {"once_count", c.once_count},
                            {"nonextremal", c.nonextremal.size()}, {"ok", ok}});
    }
    r.passed = checked > 0 && good == checked;
    r.data = Json{{"configurations", checked}, {"rows", std::move(rows)}};
    r.detail = std::to_string(good) + "/" + std::to_string(checked) + " configurations satisfy the extremal bound";
}

// 9. Deciders against the enumerative oracles.
void oracles(Context &ctx, CriterionResult &r)
{
    auto rng = ctx.rng_for(9);
    const int instances = 1000;
    std::map<std::string, int> mismatches;
    std::uint64_t comparisons = 0;
    for (int t = 0; t < instances; ++t) {
        std::size_t d = 1 + t % 3, n = 1 + (t / 3) % 6;
        auto s = random_grid_set(rng, d, n, 0, 3 + static_cast<int>(n / 3));
        std::vector<ClassDescriptor> classes{ClassDescriptor::of(ClassKind::Boxes, d),
                                             ClassDescriptor::of(ClassKind::BoxesNondegenerate, d),
                                             ClassDescriptor::of(ClassKind::DegenerateBalls, d),
                                             ClassDescriptor::of(ClassKind::AxisCuts, d),
                                             ClassDescriptor::anchored(random_bounded_box(rng, d, 2, 2))};
        for (const auto &cls : classes) {
            // Widening a point interval never picks up another point, so both box variants share one oracle.
            auto traces = oracle::enumerative_traces(
                s, cls.kind == ClassKind::BoxesNondegenerate ? ClassDescriptor::of(ClassKind::Boxes, d) : cls);
            std::uint64_t realized = 0;
            for (std::uint64_t m = 0; m < traces.size(); ++m) {
                ++comparisons;
                bool got = carvable(s, SubsetMask(m, n), cls);
                realized += got;
                if (got != traces[m])
                    ++mismatches[std::string(to_string(cls.kind))];
            }
            ctx.log(cls, n, realized);
        }
        auto cubes = ClassDescriptor::of(ClassKind::Cubes, d);
        auto traces = oracle::cube_assignment_traces(s);
        std::uint64_t realized = 0;
        for (std::uint64_t m = 0; m < traces.size(); ++m) {
            ++comparisons;
            bool got = carvable(s, SubsetMask(m, n), cubes);
            realized += got;
            if (got != traces[m])
                ++mismatches["CUBES"];
        }
        ctx.log(cubes, n, realized);
    }
    int total = 0;
    Json mm = Json::object();
    for (const auto &[k, v] : mismatches) {
        mm[k] = v;
        total += v;
    }
    r.passed = total == 0;
    r.data = Json{{"instances", instances}, {"comparisons", comparisons}, {"mismatches", std::move(mm)}};
    r.detail = std::to_string(instances) + " instances, " + std::to_string(comparisons) + " mask verdicts, " +
               std::to_string(total) + " mismatches";
}

// 10. Growth bound on every coefficient logged by the other items.
void growth(Context &ctx, CriterionResult &r)
{
    std::map<std::pair<std::size_t, std::size_t>, Scalar> bounds;
    std::uint64_t checked = 0, skipped = 0, violated = 0;
    for (const auto &c : ctx.coefficients) {
        std::size_t v = expected_vc(c.kind, c.d);
        if (v == 0 || c.n < v) {
            ++skipped;
            continue;
        }
        auto key = std::make_pair(v, c.n);
        auto it = bounds.find(key);
        if (it == bounds.end())
            it = bounds.emplace(key, sauer_shelah_bound(v, c.n)).first;
        ++checked;
        if (Scalar(static_cast<std::int64_t>(c.realized)) > it->second)
            ++violated;
    }
    r.passed = checked > 0 && violated == 0;
    r.data = Json{{"coefficients", ctx.coefficients.size()}, {"checked", checked}, {"below_vc", skipped}, {"violations", violated}};
    r.detail = std::to_string(checked) + " coefficients checked, " + std::to_string(skipped) + " with n below v, " +
               std::to_string(violated) + " violations";
}

// 11. Random search for a shattered 4-set of squares.
void negative_control(Context &ctx, CriterionResult &r)
{
    CubeSearchOptions o;
    o.d = 2;
    o.n = 4;
    o.trials = 100'000;
    o.seed = ctx.options.seed;
    o.jobs = ctx.options.jobs;
    auto rep = random_cube_search(o);
    auto cls = ClassDescriptor::of(ClassKind::Cubes, 2);
    for (const auto &c : rep.best)
        ctx.log(cls, c.set.size(), c.score);
    r.passed = !rep.found;
    r.evidence_only = true;
    r.data = to_json(rep);
    r.data.erase("wall_time_seconds");
    r.detail = std::string(rep.found ? "found a shattered 4-set" : "no shattered 4-set") + " in 100000 trials, best " +
               std::to_string(rep.best_score) + "/16 masks; evidence, not proof";
}

struct Item {
    int id = 0;
    const char *title;
    double budget;
    bool fast;
    void (*run)(Context &, CriterionResult &);
};

const Item items[] = {
    {1, "cube witnesses d=1..5", 60, true, cube_witnesses},
    {2, "anchored witnesses d=1..6", 60, true, anchored_witnesses},
    {3, "exact ordinal VC values", 600, false, ordinal_values},
    {4, "degenerate balls d=1, d=3 witness, d=2 resolved", 900, false, degenerate_values},
    {5, "cube-to-anchored downward projection", 300, true, downward},
    {6, "anchor transport", 0, false, transport},
    {7, "twitch keeps shattering", 0, false, twitching},
    {8, "extremal bound on anchored-shattered sets", 0, false, extremal},
    {9, "deciders match oracles", 0, true, oracles},
    {10, "growth bound on coefficients", 0, false, growth},
    {11, "random square search (negative control)", 0, false, negative_control},
};

} // namespace

VerifyLevel parse_verify_level(std::string_view text)
{
    if (text == "fast")
        return VerifyLevel::Fast;
    if (text == "full")
        return VerifyLevel::Full;
    throw Error(ErrorCode::InvalidArgument, "level must be fast or full");
}

std::size_t expected_vc(ClassKind kind, std::size_t d)
{
    switch (kind) {
        case ClassKind::Boxes:
        case ClassKind::BoxesNondegenerate: return 2 * d;
        case ClassKind::AnchoredDegenerateBalls: return 3 * d / 2;
        case ClassKind::Cubes:
        case ClassKind::DegenerateBalls: return (3 * d + 1) / 2;
        case ClassKind::AxisCuts: {
            // Largest m whose middle binomial coefficient is at most d.
            std::size_t m = 0;
            for (;;) {
                std::size_t next = m + 1, k = next / 2;
                std::uint64_t c = 1;
                for (std::size_t i = 1; i <= k && c <= d; ++i)
                    c = c * (next - k + i) / i;
                if (c > d)
                    return m;
                m = next;
            }
        }
    }
    return 0;
}

VerifyReport run_reproduction(const VerifyOptions &options)
{
    auto start = Clock::now();
    Context ctx{options, ShatterOptions{20, std::max(options.jobs, 1U)}, {}, {}};
    VerifyReport report{options.level, {}, true, 0};
    std::vector<const Item *> order;
    for (const auto &item : items)
        if (options.level == VerifyLevel::Full || item.fast)
            order.push_back(&item);
    // The growth check reads coefficients logged by every other item, so it runs last.
    std::stable_partition(order.begin(), order.end(), [](const Item *i) { return i->id != 10; });
    for (const Item *item : order) {
        CriterionResult r;
        r.id = item->id;
        r.title = item->title;
        r.budget_seconds = item->budget;
        auto t0 = Clock::now();
        try {
            item->run(ctx, r);
        } catch (const std::exception &e) {
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (r.budget_seconds > 0 && r.wall_time_seconds > r.budget_seconds) {
            r.passed = false;
            r.detail += "; over the time budget";
        }
        if (options.on_item)
            options.on_item(r);
        report.all_passed = report.all_passed && r.passed;
        report.items.push_back(std::move(r));
    }
    std::sort(report.items.begin(), report.items.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    report.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

Json to_json(const CriterionResult &item)
{
    Json out{{"id", item.id},          {"title", item.title}, {"passed", item.passed},
             {"evidence_only", item.evidence_only}, {"detail", item.detail}, {"data", item.data}};
    if (item.budget_seconds > 0)
        out["budget_seconds"] = item.budget_seconds;
    out["wall_time_seconds"] = item.wall_time_seconds;
    return out;
}

Json to_json(const VerifyReport &report)
{
    Json items_json = Json::array();
    for (const auto &item : report.items)
        items_json.push_back(to_json(item));
    return Json{{"level", report.level == VerifyLevel::Fast ? "fast" : "full"},
                {"all_passed", report.all_passed},
                {"items", std::move(items_json)},
                {"wall_time_seconds", report.wall_time_seconds}};
}

} // namespace vclab
