#include "vclab/geometry.hpp"
#include "vclab/error.hpp"

#include <algorithm>
#include <set>

namespace vclab {

Interval::Interval(ExtendedScalar lo, ExtendedScalar hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_.is_pos_inf() || hi_.is_neg_inf() || hi_ < lo_)
        throw Error(ErrorCode::InvalidArgument, "invalid interval [" + lo_.to_string() + ", " + hi_.to_string() + "]");
}

bool Interval::contains(const Scalar &x) const
{
    if (lo_.is_finite() && x < lo_.value())
        return false;
    return !hi_.is_finite() || x <= hi_.value();
}

bool Interval::contains(const Interval &other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

std::string Interval::to_string() const
{
    return (lo_.is_finite() ? "[" : "(") + lo_.to_string() + ", " + hi_.to_string() + (hi_.is_finite() ? "]" : ")");
}

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw Error(ErrorCode::InvalidArgument, "point must have dimension >= 1");
}

std::string Point::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ", ";
        out += coords_[i].to_string();
    }
    return out + ")";
}

PointSet::PointSet(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points))
{
    if (dim_ == 0)
        throw Error(ErrorCode::InvalidArgument, "point set dimension must be >= 1");
    std::set<Point> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].dim() != dim_)
            throw Error(ErrorCode::DimensionMismatch,
                        "point " + std::to_string(i) + " has dimension " + std::to_string(points_[i].dim()) +
                            ", expected " + std::to_string(dim_));
        if (!seen.insert(points_[i]).second)
            throw Error(ErrorCode::DuplicatePoint, "duplicate point " + points_[i].to_string());
    }
}

PointSet PointSet::subset(std::uint64_t mask) const
{
    std::vector<Point> out;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if ((mask >> i) & 1U)
            out.push_back(points_[i]);
    return PointSet(dim_, std::move(out));
}

bool PointSet::has_injective_projections() const
{
    for (std::size_t axis = 0; axis < dim_; ++axis) {
        std::vector<const Scalar *> values;
        values.reserve(points_.size());
        for (const auto &p : points_)
            values.push_back(&p[axis]);
        std::sort(values.begin(), values.end(), [](auto *a, auto *b) { return *a < *b; });
        for (std::size_t i = 1; i < values.size(); ++i)
            if (*values[i - 1] == *values[i])
                return false;
    }
    return true;
}

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals))
{
    if (intervals_.empty())
        throw Error(ErrorCode::InvalidArgument, "box must have dimension >= 1");
}

Box Box::whole_space(std::size_t dim) { return Box(std::vector<Interval>(dim, Interval::real_line())); }

bool Box::contains(const Point &x) const
{
    for (std::size_t i = 0; i < intervals_.size(); ++i)
        if (!intervals_[i].contains(x[i]))
            return false;
    return true;
}

bool Box::contains(const Box &other) const
{
    for (std::size_t i = 0; i < intervals_.size(); ++i)
        if (!intervals_[i].contains(other.intervals_[i]))
            return false;
    return true;
}

bool Box::is_bounded() const
{
    return std::all_of(intervals_.begin(), intervals_.end(), [](const Interval &iv) { return iv.is_bounded(); });
}

bool Box::is_degenerate_ball() const
{
    return std::all_of(intervals_.begin(), intervals_.end(), [](const Interval &iv) { return iv.has_infinite_side(); });
}

bool Box::is_nondegenerate() const
{
    return std::all_of(intervals_.begin(), intervals_.end(), [](const Interval &iv) { return iv.is_nondegenerate(); });
}

std::string Box::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (i)
            out += " x ";
        out += intervals_[i].to_string();
    }
    return out;
}

Cube::Cube(Point center, Scalar radius) : center_(std::move(center)), radius_(std::move(radius))
{
    if (radius_.sign() < 0)
        throw Error(ErrorCode::InvalidArgument, "cube radius must be >= 0");
}

bool Cube::contains(const Point &x) const
{
    for (std::size_t i = 0; i < center_.dim(); ++i)
        if (abs(x[i] - center_[i]) > radius_)
            return false;
    return true;
}

Box Cube::to_box() const
{
    std::vector<Interval> ivs;
    ivs.reserve(center_.dim());
    for (const auto &c : center_.coords())
        ivs.emplace_back(c - radius_, c + radius_);
    return Box(std::move(ivs));
}

std::string Cube::to_string() const { return "cube(center " + center_.to_string() + ", r " + radius_.to_string() + ")"; }

Box rect_hull(std::span<const Point> points)
{
    if (points.empty())
        throw Error(ErrorCode::EmptySet, "rect_hull of an empty set");
    const std::size_t dim = points.front().dim();
    std::vector<Interval> ivs;
    ivs.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const Scalar *lo = &points.front()[i];
        const Scalar *hi = lo;
        for (const auto &p : points) {
            if (p.dim() != dim)
                throw Error(ErrorCode::DimensionMismatch, "rect_hull over mixed dimensions");
            if (p[i] < *lo)
                lo = &p[i];
            if (p[i] > *hi)
                hi = &p[i];
        }
        ivs.emplace_back(*lo, *hi);
    }
    return Box(std::move(ivs));
}

Point project(const Point &p, std::span<const std::size_t> keep)
{
    std::vector<Scalar> coords;
    coords.reserve(keep.size());
    for (auto k : keep)
        coords.push_back(p[k]);
    return Point(std::move(coords));
}

PointSet project(const PointSet &s, std::span<const std::size_t> keep)
{
    if (keep.empty())
        throw Error(ErrorCode::InvalidArgument, "projection must keep at least one coordinate");
    std::set<std::size_t> distinct(keep.begin(), keep.end());
    if (distinct.size() != keep.size())
        throw Error(ErrorCode::InvalidArgument, "projection indices must be distinct");
    if (*distinct.rbegin() >= s.dim())
        throw Error(ErrorCode::InvalidArgument, "projection index out of range");

    std::vector<Point> out;
    out.reserve(s.size());
    std::set<Point> seen;
    for (const auto &p : s) {
        Point q = project(p, keep);
        if (!seen.insert(q).second)
            throw Error(ErrorCode::DuplicateAfterProjection, "projection collides at " + q.to_string());
        out.push_back(std::move(q));
    }
    return PointSet(keep.size(), std::move(out));
}

bool membership(const Box &region, const Point &x)
{
    if (region.dim() != x.dim())
        throw Error(ErrorCode::DimensionMismatch, "membership: box and point dimensions differ");
    return region.contains(x);
}

bool membership(const Cube &region, const Point &x)
{
    if (region.dim() != x.dim())
        throw Error(ErrorCode::DimensionMismatch, "membership: cube and point dimensions differ");
    return region.contains(x);
}

} // namespace vclab
