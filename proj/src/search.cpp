#include "vclab/search.hpp"
#include "vclab/error.hpp"
#include "vclab/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace vclab {

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > saturated / a)
        return saturated;
    return a * b;
}

std::uint64_t factorial_sat(std::size_t m)
{
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= m; ++k)
        f = mul_sat(f, k);
    return f;
}

/// Permutation of 0..m-1 with the given lexicographic rank.
std::vector<std::uint32_t> unrank_permutation(std::size_t m, std::uint64_t index)
{
    std::vector<std::uint32_t> pool(m);
    std::iota(pool.begin(), pool.end(), 0U);
    std::vector<std::uint32_t> out;
    out.reserve(m);
    for (std::size_t k = m; k > 0; --k) {
        std::uint64_t f = factorial_sat(k - 1);
        std::size_t pick = static_cast<std::size_t>(index / f);
        index %= f;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

Symmetry Symmetry::for_class(ClassKind kind)
{
    Symmetry s;
    s.reflect_axes = kind != ClassKind::AxisCuts;
    return s;
}

PointSet OrderConfig::realize() const
{
    const std::size_t off = with_origin ? 1 : 0;
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> c;
        c.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            std::int64_t r = ranks[i][off + k];
            c.emplace_back(with_origin ? r - static_cast<std::int64_t>(ranks[i][0]) : r);
        }
        pts.emplace_back(std::move(c));
    }
    return PointSet(d, std::move(pts));
}

std::string OrderConfig::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        out << (i ? " | " : "");
        for (std::size_t k = 0; k < ranks[i].size(); ++k)
            out << (k ? " " : "") << ranks[i][k];
    }
    out << ']';
    return out.str();
}

OrderTypeSpace::OrderTypeSpace(std::size_t n, std::size_t d, bool with_origin, Symmetry symmetry)
    : n_(n), d_(d), with_origin_(with_origin), symmetry_(symmetry)
{
    if (n == 0 || d == 0)
        throw Error(ErrorCode::InvalidArgument, "order types need n >= 1 and d >= 1");
    if (d > 8)
        throw Error(ErrorCode::InvalidArgument, "order-type enumeration supports at most 8 axes");
    const std::size_t m = n + (with_origin ? 1 : 0);
    other_axis_choices_ = factorial_sat(m);
    first_axis_choices_ = symmetry.relabel ? (with_origin ? m : 1) : other_axis_choices_;
    raw_count_ = first_axis_choices_;
    for (std::size_t i = 1; i < d; ++i)
        raw_count_ = mul_sat(raw_count_, other_axis_choices_);

    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        axis_perms_.push_back(perm);
    } while (symmetry.permute_axes && std::next_permutation(perm.begin(), perm.end()));
}

OrderConfig OrderTypeSpace::at(std::uint64_t index) const
{
    if (index >= raw_count_)
        throw Error(ErrorCode::InvalidArgument, "order-type index out of range");
    const std::size_t m = n_ + (with_origin_ ? 1 : 0);
    OrderConfig c{n_, d_, with_origin_, std::vector<std::vector<std::uint32_t>>(d_)};
    for (std::size_t i = d_; i-- > 1;) {
        c.ranks[i] = unrank_permutation(m, index % other_axis_choices_);
        index /= other_axis_choices_;
    }
    if (!symmetry_.relabel) {
        c.ranks[0] = unrank_permutation(m, index);
    } else {
        // Points listed in increasing order; with an origin, index is the origin's rank.
        std::vector<std::uint32_t> row(m);
        std::uint32_t next = 0;
        if (with_origin_)
            row[0] = static_cast<std::uint32_t>(index);
        for (std::size_t k = with_origin_ ? 1 : 0; k < m; ++k) {
            if (with_origin_ && next == row[0])
                ++next;
            row[k] = next++;
        }
        c.ranks[0] = std::move(row);
    }
    return c;
}

OrderConfig OrderTypeSpace::transform(const OrderConfig &config, const std::vector<std::size_t> &perm,
                                      std::uint64_t reflect_mask, const std::vector<std::size_t> &labels)
{
    const std::size_t m = config.items(), off = config.with_origin ? 1 : 0;
    OrderConfig out{config.n, config.d, config.with_origin, std::vector<std::vector<std::uint32_t>>(config.d)};
    for (std::size_t j = 0; j < config.d; ++j) {
        const auto &src = config.ranks[perm[j]];
        auto &row = out.ranks[j];
        row.resize(m);
        const bool flip = (reflect_mask >> j) & 1U;
        auto map = [&](std::uint32_t r) { return flip ? static_cast<std::uint32_t>(m - 1 - r) : r; };
        if (off)
            row[0] = map(src[0]);
        for (std::size_t k = 0; k < config.n; ++k)
            row[off + k] = map(src[off + labels[k]]);
    }
    return out;
}

OrderConfig OrderTypeSpace::canonical(const OrderConfig &config) const
{
    const std::size_t off = with_origin_ ? 1 : 0;
    std::vector<std::size_t> identity(n_);
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    const std::uint64_t reflections = symmetry_.reflect_axes ? (std::uint64_t{1} << d_) : 1;
    OrderConfig best = config;
    for (const auto &perm : axis_perms_) {
        for (std::uint64_t mask = 0; mask < reflections; ++mask) {
            OrderConfig t = transform(config, perm, mask, identity);
            if (symmetry_.relabel) {
                std::vector<std::size_t> labels = identity;
                std::sort(labels.begin(), labels.end(),
                          [&](std::size_t a, std::size_t b) { return t.ranks[0][off + a] < t.ranks[0][off + b]; });
                t = transform(t, axis_perms_.front(), 0, labels);
            }
            if (t < best)
                best = std::move(t);
        }
    }
    return best;
}

bool OrderTypeSpace::is_canonical(const OrderConfig &config) const { return canonical(config) == config; }

std::vector<OrderConfig> enumerate_order_types(std::size_t n, std::size_t d, bool with_origin, Symmetry symmetry,
                                               std::uint64_t budget)
{
    OrderTypeSpace space(n, d, with_origin, symmetry);
    if (space.raw_count() > budget)
        throw Error(ErrorCode::BudgetExceeded, "order-type space has more than " + std::to_string(budget) + " matrices");
    std::vector<OrderConfig> out;
    for (std::uint64_t i = 0; i < space.raw_count(); ++i) {
        OrderConfig c = space.at(i);
        if (space.is_canonical(c))
            out.push_back(std::move(c));
    }
    return out;
}

std::string_view to_string(SearchOutcome outcome) noexcept
{
    switch (outcome) {
        case SearchOutcome::ShatteredWitness: return "SHATTERED_WITNESS";
        case SearchOutcome::ExhaustedNone: return "EXHAUSTED_NONE";
        case SearchOutcome::BudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

namespace {

constexpr std::size_t config_chunk = 64;

ClassDescriptor ordinal_class(ClassKind kind, std::size_t d)
{
    switch (kind) {
        case ClassKind::Boxes:
        case ClassKind::BoxesNondegenerate:
        case ClassKind::DegenerateBalls:
        case ClassKind::AxisCuts: return ClassDescriptor::of(kind, d);
        case ClassKind::AnchoredDegenerateBalls: return ClassDescriptor::origin_anchored(d);
        case ClassKind::Cubes:
            if (d == 1)
                return ClassDescriptor::of(kind, d);
            throw Error(ErrorCode::InvalidArgument, "cubes are ordinal only in dimension 1");
    }
    throw Error(ErrorCode::InvalidArgument, "unknown class kind");
}

std::uint64_t count_canonical(const OrderTypeSpace &space, std::uint64_t limit, unsigned jobs)
{
    const std::size_t chunks = static_cast<std::size_t>((limit + config_chunk - 1) / config_chunk);
    std::vector<std::uint64_t> counts(chunks, 0);
    parallel_for(chunks, jobs, 1, [&](std::size_t c) {
        std::uint64_t end = std::min<std::uint64_t>(limit, (c + 1) * config_chunk);
        for (std::uint64_t i = c * config_chunk; i < end; ++i)
            counts[c] += space.is_canonical(space.at(i)) ? 1 : 0;
    });
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

} // namespace

VcSearchReport exact_vc_ordinal(ClassKind kind, std::size_t d, std::size_t n_max, const SearchOptions &options)
{
    const auto start = std::chrono::steady_clock::now();
    const ClassDescriptor cls = ordinal_class(kind, d);
    const bool with_origin = kind == ClassKind::AnchoredDegenerateBalls;
    const Symmetry symmetry = Symmetry::for_class(kind);
    const unsigned jobs = std::max(options.jobs, 1U);

    VcSearchReport report{.cls = cls, .n_max = n_max};
    report.assumptions.push_back("only configurations with injective coordinate projections are enumerated");
    if (kind == ClassKind::DegenerateBalls)
        report.assumptions.push_back(
            "unanchored degenerate balls are treated as ordinal; the projection-injectivity reduction is assumed "
            "to carry over to this class");

    for (std::size_t n = 1; n <= n_max; ++n) {
        OrderTypeSpace space(n, d, with_origin, symmetry);
        const std::uint64_t remaining = options.budget - std::min(options.budget, report.configs_examined);
        const std::uint64_t limit = std::min(space.raw_count(), remaining);
        const ShatterOptions shatter{std::max<std::size_t>(20, n), 1};

        std::uint64_t hit = parallel_find_first(limit, jobs, config_chunk, [&](std::size_t i) {
            OrderConfig c = space.at(i);
            return space.is_canonical(c) && !first_failing_mask(c.realize(), cls, shatter);
        });

        SizeOutcome out{n, SearchOutcome::ExhaustedNone, std::nullopt, std::nullopt, 0, 0};
        if (hit < limit) {
            out.outcome = SearchOutcome::ShatteredWitness;
            out.config = space.at(hit);
            out.witness = out.config->realize();
            if (!is_shattered(*out.witness, cls, ShatterOptions{shatter.cap, jobs}).shattered)
                throw Error(ErrorCode::Internal, "order-type witness failed re-verification");
            out.configs_examined = hit + 1;
        } else {
            out.outcome = limit < space.raw_count() ? SearchOutcome::BudgetExceeded : SearchOutcome::ExhaustedNone;
            out.configs_examined = limit;
        }
        out.configs_after_symmetry = count_canonical(space, out.configs_examined, jobs);
        report.configs_examined += out.configs_examined;
        report.configs_after_symmetry += out.configs_after_symmetry;
        report.sizes.push_back(out);

        if (out.outcome == SearchOutcome::ShatteredWitness) {
            report.lower_bound = n;
            continue;
        }
        if (out.outcome == SearchOutcome::ExhaustedNone)
            report.vc_exact = n - 1;
        else
            report.budget_exceeded = true;
        break;
    }
    report.wall_time_seconds = seconds_since(start);
    return report;
}

VcSearchReport resolve_even_degenerate(std::size_t d, const SearchOptions &options)
{
    if (d == 0 || d % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "resolve_even_degenerate needs an even dimension");
    const std::size_t lo = 3 * d / 2, hi = lo + 1;
    VcSearchReport report = exact_vc_ordinal(ClassKind::DegenerateBalls, d, lo + 2, options);
    report.bracket = std::pair{lo, hi};
    report.bracket_holds = report.vc_exact ? (*report.vc_exact >= lo && *report.vc_exact <= hi) : report.lower_bound <= hi;
    return report;
}

PointSet cube_canonical_key(const PointSet &s)
{
    if (s.empty())
        return s;
    std::vector<Scalar> lo(s[0].coords().begin(), s[0].coords().end());
    for (const auto &p : s)
        for (std::size_t i = 0; i < s.dim(); ++i)
            lo[i] = std::min(lo[i], p[i]);
    std::vector<Point> pts;
    for (const auto &p : s) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < s.dim(); ++i)
            c.push_back(p[i] - lo[i]);
        pts.emplace_back(std::move(c));
    }
    std::sort(pts.begin(), pts.end());
    return PointSet(s.dim(), std::move(pts));
}

namespace {

constexpr std::uint64_t trial_chunk = 256;

struct Scored {
    std::uint64_t score;
    PointSet key;
    PointSet set;
};

bool better(const Scored &a, const Scored &b)
{
    if (a.score != b.score)
        return a.score > b.score;
    auto pa = a.key.points(), pb = b.key.points();
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

/// Keeps the best `keep` entries with distinct keys.
void merge_into(std::vector<Scored> &best, Scored entry, std::size_t keep)
{
    for (const auto &b : best)
        if (b.key == entry.key)
            return;
    best.push_back(std::move(entry));
    std::sort(best.begin(), best.end(), better);
    if (best.size() > keep)
        best.erase(best.begin() + static_cast<std::ptrdiff_t>(keep), best.end());
}

std::uint64_t cube_score(const PointSet &s, const ClassDescriptor &cls)
{
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m)
        count += carvable(s, SubsetMask(m, s.size()), cls) ? 1 : 0;
    return count;
}

PointSet to_point_set(std::size_t d, const std::vector<std::vector<std::uint32_t>> &coords)
{
    std::vector<Point> pts;
    for (const auto &c : coords) {
        std::vector<Scalar> x;
        for (auto v : c)
            x.emplace_back(static_cast<std::int64_t>(v));
        pts.emplace_back(std::move(x));
    }
    return PointSet(d, std::move(pts));
}

std::vector<Scored> run_chunk(const CubeSearchOptions &o, std::uint64_t chunk, std::uint64_t trials, std::size_t steps)
{
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 rng(seq);
    const ClassDescriptor cls = ClassDescriptor::of(ClassKind::Cubes, o.d);
    const std::uint64_t full = std::uint64_t{1} << o.n;
    std::uniform_int_distribution<std::uint32_t> value(0, o.coordinate_range - 1);
    std::uniform_int_distribution<std::size_t> point(0, o.n - 1), axis(0, o.d - 1);

    std::vector<Scored> best;
    for (std::uint64_t t = 0; t < trials; ++t) {
        // coords[k][i]; each axis uses distinct values.
        std::vector<std::vector<std::uint32_t>> coords(o.n, std::vector<std::uint32_t>(o.d));
        for (std::size_t i = 0; i < o.d; ++i) {
            std::set<std::uint32_t> used;
            for (std::size_t k = 0; k < o.n; ++k) {
                std::uint32_t v;
                do
                    v = value(rng);
                while (!used.insert(v).second);
                coords[k][i] = v;
            }
        }
        std::uint64_t score = cube_score(to_point_set(o.d, coords), cls);
        for (std::size_t step = 0; step < steps && score < full; ++step) {
            std::size_t k = point(rng), i = axis(rng);
            std::uint32_t v = value(rng);
            bool taken = false;
            for (std::size_t j = 0; j < o.n; ++j)
                taken = taken || coords[j][i] == v;
            if (taken)
                continue;
            std::uint32_t old = coords[k][i];
            coords[k][i] = v;
            std::uint64_t s = cube_score(to_point_set(o.d, coords), cls);
            if (s >= score)
                score = s;
            else
                coords[k][i] = old;
        }
        PointSet set = to_point_set(o.d, coords);
        merge_into(best, Scored{score, cube_canonical_key(set), std::move(set)}, o.keep);
    }
    return best;
}

} // namespace

CubeSearchReport random_cube_search(const CubeSearchOptions &options)
{
    const auto start = std::chrono::steady_clock::now();
    if (options.trials == 0)
        throw Error(ErrorCode::InvalidArgument, "random_cube_search needs at least one trial");
    if (options.d == 0 || options.n == 0 || options.n > 20)
        throw Error(ErrorCode::InvalidArgument, "random_cube_search needs d >= 1 and 1 <= n <= 20");
    if (options.coordinate_range < options.n)
        throw Error(ErrorCode::InvalidArgument, "coordinate range must be at least n for injective projections");
    const std::size_t steps = options.climb_steps ? options.climb_steps : 2 * options.n * options.d;

    const std::uint64_t chunks = (options.trials + trial_chunk - 1) / trial_chunk;
    std::vector<std::vector<Scored>> results(static_cast<std::size_t>(chunks));
    parallel_for(results.size(), std::max(options.jobs, 1U), 1, [&](std::size_t c) {
        std::uint64_t trials = std::min<std::uint64_t>(trial_chunk, options.trials - c * trial_chunk);
        results[c] = run_chunk(options, c, trials, steps);
    });

    std::vector<Scored> best;
    for (auto &chunk : results)
        for (auto &entry : chunk)
            merge_into(best, std::move(entry), std::max<std::size_t>(options.keep, 1));

    CubeSearchReport report{.options = options};
    report.full_score = std::uint64_t{1} << options.n;
    const ClassDescriptor cls = ClassDescriptor::of(ClassKind::Cubes, options.d);
    for (auto &b : best) {
        ShatterVerdict v = is_shattered(b.set, cls, ShatterOptions{20, 1});
        report.found = report.found || v.shattered;
        report.best_score = std::max(report.best_score, b.score);
        report.best.push_back(CubeCandidate{std::move(b.set), b.score, std::move(v)});
    }
    report.wall_time_seconds = seconds_since(start);
    return report;
}

} // namespace vclab
