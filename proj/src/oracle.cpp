#include "vclab/oracle.hpp"
#include "vclab/error.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace vclab::oracle {

namespace {

using Bits = std::uint64_t;

struct End {
    bool infinite;
    Scalar value;
};

/// Trace bits of the interval [lo, hi] on axis i (infinite ends open the side).
Bits axis_trace(const PointSet &s, std::size_t axis, const End &lo, const End &hi)
{
    Bits b = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const Scalar &x = s[k][axis];
        if ((lo.infinite || lo.value <= x) && (hi.infinite || x <= hi.value))
            b |= Bits{1} << k;
    }
    return b;
}

std::vector<Scalar> axis_values(const PointSet &s, std::size_t axis, const std::optional<Box> &anchor)
{
    std::set<Scalar> v;
    for (const auto &p : s)
        v.insert(p[axis]);
    // One value beyond each end so bounded boxes can miss every point.
    if (!v.empty()) {
        Scalar below = *v.begin() - Scalar(1), above = *v.rbegin() + Scalar(1);
        v.insert(below);
        v.insert(above);
    }
    if (anchor) {
        v.insert((*anchor)[axis].lo().value());
        v.insert((*anchor)[axis].hi().value());
    }
    return {v.begin(), v.end()};
}

} // namespace

std::vector<bool> enumerative_traces(const PointSet &s, const ClassDescriptor &cls)
{
    const std::size_t n = s.size(), d = s.dim();
    if (n > 20)
        throw Error(ErrorCode::CapExceeded, "oracle limited to 20 points");
    std::vector<bool> hit(std::size_t{1} << n, false);

    if (cls.kind == ClassKind::AxisCuts) {
        hit[0] = true; // threshold below every coordinate
        for (std::size_t i = 0; i < d; ++i)
            for (const auto &a : axis_values(s, i, std::nullopt))
                hit[axis_trace(s, i, End{true, {}}, End{false, a})] = true;
        return hit;
    }

    const bool degenerate = cls.kind == ClassKind::DegenerateBalls || cls.kind == ClassKind::AnchoredDegenerateBalls;
    const std::optional<Box> anchor = cls.kind == ClassKind::AnchoredDegenerateBalls ? cls.anchor : std::nullopt;
    if (cls.kind == ClassKind::AnchoredDegenerateBalls && !anchor)
        throw Error(ErrorCode::AnchorMissing, "anchored class without anchor");
    if (cls.kind != ClassKind::Boxes && !degenerate)
        throw Error(ErrorCode::InvalidArgument, "enumerative oracle does not cover this class");

    // Per axis, the trace of every admissible interval.
    std::vector<std::vector<Bits>> per_axis(d);
    for (std::size_t i = 0; i < d; ++i) {
        auto vals = axis_values(s, i, anchor);
        std::vector<End> los{End{true, {}}}, his;
        for (const auto &v : vals) {
            los.push_back(End{false, v});
            his.push_back(End{false, v});
        }
        his.push_back(End{true, {}});
        std::set<Bits> traces;
        for (const auto &lo : los) {
            for (const auto &hi : his) {
                if (!lo.infinite && !hi.infinite && hi.value < lo.value)
                    continue;
                if (degenerate && !lo.infinite && !hi.infinite)
                    continue;
                if (anchor) {
                    const auto &f = (*anchor)[i];
                    if (!lo.infinite && lo.value > f.lo().value())
                        continue;
                    if (!hi.infinite && hi.value < f.hi().value())
                        continue;
                }
                traces.insert(axis_trace(s, i, lo, hi));
            }
        }
        per_axis[i].assign(traces.begin(), traces.end());
    }

    const Bits full = n == 64 ? ~Bits{0} : (Bits{1} << n) - 1;
    std::vector<Bits> acc{full};
    for (std::size_t i = 0; i < d; ++i) {
        std::set<Bits> next;
        for (Bits a : acc)
            for (Bits b : per_axis[i])
                next.insert(a & b);
        acc.assign(next.begin(), next.end());
    }
    for (Bits b : acc)
        hit[b] = true;
    return hit;
}

namespace {

/// Accumulated lower and upper bounds on a scalar unknown.
struct RadiusBounds {
    std::optional<Scalar> lower; // strongest lower bound value
    bool lower_strict = false;
    std::optional<Scalar> upper;
    bool upper_strict = false;
    bool contradiction = false;

    void add_lower(const Scalar &v, bool strict)
    {
        if (!lower || v > *lower || (v == *lower && strict)) {
            lower = v;
            lower_strict = strict;
        }
    }
    void add_upper(const Scalar &v, bool strict)
    {
        if (!upper || v < *upper || (v == *upper && strict)) {
            upper = v;
            upper_strict = strict;
        }
    }
    bool feasible() const
    {
        if (contradiction)
            return false;
        if (!lower || !upper)
            return true;
        if (*lower < *upper)
            return true;
        return *lower == *upper && !lower_strict && !upper_strict;
    }
};

/// Bound on c_i of the form base + coef*r, strict or not.
struct CenterBound {
    Scalar base;
    int coef; // +1 or -1
    bool strict;
};

/// Eliminates c_i from lo <= c_i <= up (or strict), recording the result as a bound on t = 2r.
void eliminate(const CenterBound &lo, const CenterBound &up, RadiusBounds &rb)
{
    bool strict = lo.strict || up.strict;
    int k = lo.coef - up.coef; // k*r (<|<=) up.base - lo.base, k in {-2, 0, 2}
    Scalar rhs = up.base - lo.base;
    if (k == 0) {
        if (strict ? rhs.sign() <= 0 : rhs.sign() < 0)
            rb.contradiction = true;
    } else if (k > 0) {
        rb.add_upper(rhs, strict);
    } else {
        rb.add_lower(-rhs, strict);
    }
}

struct CubeQuery {
    std::vector<std::vector<CenterBound>> lowers, uppers; // per axis, from included points
    RadiusBounds base;
};

CubeQuery prepare(const PointSet &s, Bits mask)
{
    CubeQuery cq{std::vector<std::vector<CenterBound>>(s.dim()), std::vector<std::vector<CenterBound>>(s.dim()), {}};
    cq.base.add_lower(Scalar(0), false);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::size_t k = 0; k < s.size(); ++k) {
            if ((mask >> k) & 1U) {
                // c_i - r <= p_i  and  p_i <= c_i + r
                cq.lowers[i].push_back({s[k][i], -1, false});
                cq.uppers[i].push_back({s[k][i], +1, false});
            }
        }
        for (const auto &lo : cq.lowers[i])
            for (const auto &up : cq.uppers[i])
                eliminate(lo, up, cq.base);
    }
    return cq;
}

bool assignment_feasible(const PointSet &s, const CubeQuery &cq, const std::vector<std::size_t> &excluded,
                         const std::vector<std::pair<std::size_t, bool>> &choice)
{
    RadiusBounds rb = cq.base;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::vector<CenterBound> lowers, uppers;
        for (std::size_t e = 0; e < excluded.size(); ++e) {
            if (choice[e].first != i)
                continue;
            const Scalar &x = s[excluded[e]][i];
            if (choice[e].second)
                uppers.push_back({x, -1, true}); // c_i + r < x
            else
                lowers.push_back({x, +1, true}); // c_i - r > x
        }
        for (const auto &lo : lowers) {
            for (const auto &up : cq.uppers[i])
                eliminate(lo, up, rb);
            for (const auto &up : uppers)
                eliminate(lo, up, rb);
        }
        for (const auto &up : uppers)
            for (const auto &lo : cq.lowers[i])
                eliminate(lo, up, rb);
    }
    return rb.feasible();
}

} // namespace

bool cube_assignment_feasible(const PointSet &s, std::uint64_t mask)
{
    std::vector<std::size_t> excluded;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (!((mask >> k) & 1U))
            excluded.push_back(k);
    if (mask == 0)
        return true;
    const CubeQuery cq = prepare(s, mask);
    const std::size_t options = 2 * s.dim();
    std::vector<std::size_t> digit(excluded.size(), 0);
    std::vector<std::pair<std::size_t, bool>> choice(excluded.size());
    for (;;) {
        for (std::size_t e = 0; e < excluded.size(); ++e)
            choice[e] = {digit[e] / 2, digit[e] % 2 == 1};
        if (assignment_feasible(s, cq, excluded, choice))
            return true;
        std::size_t pos = 0;
        while (pos < digit.size() && ++digit[pos] == options)
            digit[pos++] = 0;
        if (pos == digit.size())
            return false;
    }
}

std::vector<bool> cube_assignment_traces(const PointSet &s)
{
    std::vector<bool> hit(std::size_t{1} << s.size());
    for (std::size_t m = 0; m < hit.size(); ++m)
        hit[m] = cube_assignment_feasible(s, m);
    return hit;
}

namespace {

std::vector<Scalar> with_midpoints(std::set<Scalar> values)
{
    std::vector<Scalar> v(values.begin(), values.end());
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(v[i]);
        if (i + 1 < v.size())
            out.push_back((v[i] + v[i + 1]) / Scalar(2));
    }
    return out;
}

} // namespace

std::vector<bool> cube_grid_traces(const PointSet &s)
{
    const std::size_t n = s.size(), d = s.dim();
    std::vector<bool> hit(std::size_t{1} << n, false);
    hit[0] = true;
    if (n == 0)
        return hit;

    std::set<Scalar> radii;
    Scalar spread(0);
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto &a : s)
            for (const auto &b : s) {
                Scalar half = abs(a[i] - b[i]) / Scalar(2);
                radii.insert(half);
                spread = std::max(spread, half);
            }
    }
    radii.insert(spread * Scalar(4) + Scalar(1));

    const Bits full = (Bits{1} << n) - 1;
    for (const auto &r : with_midpoints(radii)) {
        std::vector<std::vector<Bits>> per_axis(d);
        for (std::size_t i = 0; i < d; ++i) {
            std::set<Scalar> critical;
            for (const auto &p : s) {
                critical.insert(p[i] - r);
                critical.insert(p[i] + r);
            }
            std::set<Bits> traces;
            for (const auto &c : with_midpoints(critical)) {
                Bits b = 0;
                for (std::size_t k = 0; k < n; ++k)
                    if (abs(s[k][i] - c) <= r)
                        b |= Bits{1} << k;
                traces.insert(b);
            }
            per_axis[i].assign(traces.begin(), traces.end());
        }
        std::set<Bits> acc{full};
        for (std::size_t i = 0; i < d; ++i) {
            std::set<Bits> next;
            for (Bits a : acc)
                for (Bits b : per_axis[i])
                    next.insert(a & b);
            acc = std::move(next);
        }
        for (Bits b : acc)
            hit[b] = true;
    }
    return hit;
}

} // namespace vclab::oracle
