#include "vclab/constructions.hpp"
#include "vclab/error.hpp"

#include <algorithm>
#include <set>

namespace vclab {

namespace {

Point pad(const Point &p, std::size_t leading, std::size_t trailing)
{
    std::vector<Scalar> c(leading, Scalar(0));
    c.insert(c.end(), p.coords().begin(), p.coords().end());
    c.resize(c.size() + trailing, Scalar(0));
    return Point(std::move(c));
}

PointSet d0_base_pair()
{
    return PointSet(2, {Point{Scalar(-1), Scalar(1)}, Point{Scalar(1), Scalar(-1)}, Point{Scalar(2), Scalar(1)}});
}

} // namespace

PointSet witness_d0(std::size_t d)
{
    if (d == 0)
        throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    if (d == 1)
        return PointSet(1, {Point{Scalar(1)}});
    if (d == 2)
        return d0_base_pair();

    std::vector<Point> pts;
    if (d % 2 == 0) {
        for (const auto &s : witness_d0(d - 2))
            pts.push_back(pad(s, 0, 2));
        for (const auto &x : d0_base_pair())
            pts.push_back(pad(x, d - 2, 0));
    } else {
        for (const auto &s : witness_d0(d - 1))
            pts.push_back(pad(s, 0, 1));
        std::vector<Scalar> top(d, Scalar(0));
        top.back() = Scalar(1);
        pts.emplace_back(std::move(top));
    }
    return PointSet(d, std::move(pts));
}

CubeLift CubeLift::for_base(PointSet base)
{
    Scalar norm(0);
    for (const auto &p : base)
        for (const auto &c : p.coords())
            norm = std::max(norm, abs(c));
    Scalar height = std::max(Scalar(2) * norm, Scalar(1));
    return CubeLift{std::move(base), std::move(height)};
}

PointSet CubeLift::lift() const
{
    const std::size_t d = base.dim() + 1;
    std::vector<Point> pts;
    pts.reserve(base.size() + 2);
    for (const auto &a : base)
        pts.push_back(pad(a, 0, 1));
    std::vector<Scalar> pole(d, Scalar(0));
    pole.back() = half_height;
    pts.emplace_back(pole);
    pole.back() = -half_height;
    pts.emplace_back(std::move(pole));
    return PointSet(d, std::move(pts));
}

PointSet witness_cubes(std::size_t d)
{
    if (d == 0)
        throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    if (d == 1)
        return PointSet(1, {Point{Scalar(0)}, Point{Scalar(1)}});
    return CubeLift::for_base(witness_d0(d - 1)).lift();
}

namespace {

void check_anchor(const Box &anchor, std::size_t dim)
{
    if (!anchor.is_bounded())
        throw Error(ErrorCode::UnboundedAnchor, "anchor box must be bounded");
    if (anchor.dim() != dim)
        throw Error(ErrorCode::DimensionMismatch, "anchor and argument dimensions differ");
}

Scalar collapse_coord(const Interval &f, const Scalar &x)
{
    const Scalar &a = f.lo().value();
    const Scalar &b = f.hi().value();
    if (x < a)
        return x - a;
    if (x > b)
        return x - b;
    return Scalar(0);
}

} // namespace

Point anchor_collapse(const Box &anchor, const Point &x)
{
    check_anchor(anchor, x.dim());
    std::vector<Scalar> c;
    c.reserve(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        c.push_back(collapse_coord(anchor[i], x[i]));
    return Point(std::move(c));
}

PointSet anchor_collapse(const Box &anchor, const PointSet &s)
{
    std::vector<Point> pts;
    pts.reserve(s.size());
    for (const auto &p : s)
        pts.push_back(anchor_collapse(anchor, p));
    return PointSet(s.dim(), std::move(pts)); // throws DuplicatePoint when the collapse is not injective
}

Box anchor_collapse_box(const Box &anchor, const Box &ball)
{
    check_anchor(anchor, ball.dim());
    if (!ball.is_degenerate_ball())
        throw Error(ErrorCode::InvalidArgument, "argument is not a degenerate ball");
    if (!ball.contains(anchor))
        throw Error(ErrorCode::NotContainingAnchor, "degenerate ball does not contain the anchor");
    std::vector<Interval> ivs;
    ivs.reserve(ball.dim());
    for (std::size_t i = 0; i < ball.dim(); ++i) {
        const auto &iv = ball[i];
        ExtendedScalar lo = iv.lo().is_finite() ? ExtendedScalar(collapse_coord(anchor[i], iv.lo().value())) : iv.lo();
        ExtendedScalar hi = iv.hi().is_finite() ? ExtendedScalar(collapse_coord(anchor[i], iv.hi().value())) : iv.hi();
        ivs.emplace_back(std::move(lo), std::move(hi));
    }
    return Box(std::move(ivs));
}

Box anchor_expand_box(const Box &anchor, const Box &ball)
{
    check_anchor(anchor, ball.dim());
    if (!ball.is_degenerate_ball())
        throw Error(ErrorCode::InvalidArgument, "argument is not a degenerate ball");
    if (!ball.contains(Point(std::vector<Scalar>(ball.dim(), Scalar(0)))))
        throw Error(ErrorCode::NotContainingZero, "degenerate ball does not contain the origin");
    std::vector<Interval> ivs;
    ivs.reserve(ball.dim());
    for (std::size_t i = 0; i < ball.dim(); ++i) {
        const auto &iv = ball[i];
        ExtendedScalar lo = iv.lo().is_finite() ? ExtendedScalar(anchor[i].lo().value() + iv.lo().value()) : iv.lo();
        ExtendedScalar hi = iv.hi().is_finite() ? ExtendedScalar(anchor[i].hi().value() + iv.hi().value()) : iv.hi();
        ivs.emplace_back(std::move(lo), std::move(hi));
    }
    return Box(std::move(ivs));
}

namespace {

bool collides(const std::vector<Point> &pts, std::size_t idx, std::size_t axis, const Scalar &value)
{
    for (std::size_t k = 0; k < pts.size(); ++k)
        if (k != idx && pts[k][axis] == value)
            return true;
    return false;
}

/// Half the least positive gap between coordinate values on any axis, or 1.
Scalar initial_step(const PointSet &s)
{
    std::optional<Scalar> gap;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::set<Scalar> values;
        for (const auto &p : s)
            values.insert(p[i]);
        for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it) {
            Scalar g = *std::next(it) - *it;
            if (!gap || g < *gap)
                gap = g;
        }
    }
    return gap ? *gap / Scalar(2) : Scalar(1);
}

} // namespace

PointSet twitch(const PointSet &s, const ClassDescriptor &cls, const TwitchOptions &options)
{
    switch (cls.kind) {
        case ClassKind::Boxes:
        case ClassKind::BoxesNondegenerate:
        case ClassKind::Cubes:
        case ClassKind::DegenerateBalls:
        case ClassKind::AnchoredDegenerateBalls: break;
        case ClassKind::AxisCuts: throw Error(ErrorCode::InvalidArgument, "twitch does not support axis cuts");
    }
    if (first_failing_mask(s, cls, options.shatter))
        throw Error(ErrorCode::NotShattered, "twitch requires a shattered input");

    std::vector<Point> pts(s.begin(), s.end());
    const Scalar start = initial_step(s);
    for (std::size_t idx = 0; idx < pts.size(); ++idx) {
        std::vector<std::size_t> axes;
        for (std::size_t i = 0; i < s.dim(); ++i)
            if (collides(pts, idx, i, pts[idx][i]))
                axes.push_back(i);
        if (axes.empty())
            continue;

        Scalar step = start;
        bool moved = false;
        for (int h = 0; h <= options.max_halvings && !moved; ++h, step /= Scalar(2)) {
            std::vector<Scalar> c(pts[idx].coords().begin(), pts[idx].coords().end());
            bool fresh = true;
            for (auto i : axes) {
                c[i] += step;
                fresh = fresh && !collides(pts, idx, i, c[i]);
            }
            if (!fresh)
                continue;
            std::vector<Point> trial = pts;
            trial[idx] = Point(std::move(c));
            PointSet candidate(s.dim(), trial);
            if (!first_failing_mask(candidate, cls, options.shatter)) {
                pts = std::move(trial);
                moved = true;
            }
        }
        if (!moved)
            throw Error(ErrorCode::NoConvergence, "twitch step fell below its floor at point " + std::to_string(idx));
    }
    return PointSet(s.dim(), std::move(pts));
}

std::optional<SubsetMask> ExtremalCertificate::obstruction() const
{
    if (nonextremal.empty())
        return std::nullopt;
    return SubsetMask(std::uint64_t{1} << nonextremal.front(), set.size()).complement();
}

bool ExtremalCertificate::refutes_anchored() const
{
    if (!projections_injective)
        return false;
    const std::size_t d = set.dim();
    return once_count >= d + 1 || 2 * set.size() > 2 * d + once_count;
}

ExtremalCertificate extremal_certificate(const PointSet &s)
{
    const std::size_t d = s.dim();
    ExtremalCertificate cert{s, std::vector<std::size_t>(d, 0), std::vector<std::size_t>(d, 0), 0,
                             s.has_injective_projections(), {}};
    if (s.empty())
        return cert;
    std::vector<bool> extremal(s.size(), false);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 1; k < s.size(); ++k) {
            if (s[k][i] < s[cert.lower[i]][i])
                cert.lower[i] = k;
            if (s[k][i] > s[cert.upper[i]][i])
                cert.upper[i] = k;
        }
        for (std::size_t k = 0; k < s.size(); ++k)
            if (s[k][i] == s[cert.lower[i]][i] || s[k][i] == s[cert.upper[i]][i])
                extremal[k] = true;
    }
    std::vector<std::size_t> appearances(s.size(), 0);
    for (std::size_t i = 0; i < d; ++i) {
        ++appearances[cert.lower[i]];
        ++appearances[cert.upper[i]];
    }
    cert.once_count = static_cast<std::size_t>(std::count(appearances.begin(), appearances.end(), 1));
    for (std::size_t k = 0; k < s.size(); ++k)
        if (!extremal[k])
            cert.nonextremal.push_back(k);
    return cert;
}

DownwardProjection cube_downward_projection(const PointSet &s, const ShatterOptions &options)
{
    const std::size_t d = s.dim();
    if (d < 2)
        throw Error(ErrorCode::InvalidArgument, "downward projection needs d >= 2");
    if (s.size() < 2)
        throw Error(ErrorCode::InvalidArgument, "downward projection needs at least two points");
    if (!s.has_injective_projections())
        throw Error(ErrorCode::InvalidArgument, "downward projection needs injective coordinate projections");
    if (first_failing_mask(s, ClassDescriptor::of(ClassKind::Cubes, d), options))
        throw Error(ErrorCode::NotShattered, "downward projection needs a cube-shattered set");

    const Box hull = rect_hull(s);
    std::size_t axis = 0;
    for (std::size_t i = 1; i < d; ++i)
        if (hull[i].hi().value() - hull[i].lo().value() > hull[axis].hi().value() - hull[axis].lo().value())
            axis = i;

    std::size_t low = 0, high = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k][axis] < s[low][axis])
            low = k;
        if (s[k][axis] > s[high][axis])
            high = k;
    }

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d; ++i)
        if (i != axis)
            keep.push_back(i);

    std::vector<Point> rest;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (k != low && k != high)
            rest.push_back(s[k]);
    PointSet projected = project(PointSet(d, std::move(rest)), keep);
    std::vector<Point> poles{project(s[low], keep), project(s[high], keep)};
    Box anchor = rect_hull(poles);

    bool shattered = !first_failing_mask(projected, ClassDescriptor::anchored(anchor), options);
    return DownwardProjection{axis, low, high, std::move(projected), std::move(anchor), shattered};
}

} // namespace vclab
