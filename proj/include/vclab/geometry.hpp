#ifndef VCLAB_GEOMETRY_HPP
#define VCLAB_GEOMETRY_HPP

#include "vclab/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace vclab {

/// Closed interval [lo, hi] with possibly infinite endpoints; lo <= hi.
class Interval {
public:
    Interval(ExtendedScalar lo, ExtendedScalar hi);

    static Interval point(const Scalar &x) { return Interval(x, x); }
    static Interval real_line() { return Interval(ExtendedScalar::neg_inf(), ExtendedScalar::pos_inf()); }

    const ExtendedScalar &lo() const noexcept { return lo_; }
    const ExtendedScalar &hi() const noexcept { return hi_; }

    bool contains(const Scalar &x) const;
    bool contains(const Interval &other) const;
    bool is_bounded() const noexcept { return lo_.is_finite() && hi_.is_finite(); }
    /// Unbounded to at least one side.
    bool has_infinite_side() const noexcept { return lo_.is_neg_inf() || hi_.is_pos_inf(); }
    /// lo < hi.
    bool is_nondegenerate() const { return lo_ < hi_; }

    std::string to_string() const;

    friend bool operator==(const Interval &, const Interval &) = default;

private:
    ExtendedScalar lo_;
    ExtendedScalar hi_;
};

class Point {
public:
    Point() = default;
    explicit Point(std::vector<Scalar> coords);
    Point(std::initializer_list<Scalar> coords) : Point(std::vector<Scalar>(coords)) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    const Scalar &operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Scalar> coords() const noexcept { return coords_; }

    std::string to_string() const;

    friend bool operator==(const Point &, const Point &) = default;
    friend auto operator<=>(const Point &a, const Point &b) { return a.coords_ <=> b.coords_; }

private:
    std::vector<Scalar> coords_;
};

/// Ordered sample; masks refer to point indices, so order is significant.
class PointSet {
public:
    /// Throws DimensionMismatch or DuplicatePoint.
    PointSet(std::size_t dim, std::vector<Point> points);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const Point &operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const noexcept { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    /// Points whose bit is set in mask, in index order.
    PointSet subset(std::uint64_t mask) const;

    /// True when every coordinate projection is injective.
    bool has_injective_projections() const;

    friend bool operator==(const PointSet &, const PointSet &) = default;

private:
    std::size_t dim_;
    std::vector<Point> points_;
};

class Box {
public:
    explicit Box(std::vector<Interval> intervals);

    static Box whole_space(std::size_t dim);

    std::size_t dim() const noexcept { return intervals_.size(); }
    const Interval &operator[](std::size_t i) const { return intervals_[i]; }
    std::span<const Interval> intervals() const noexcept { return intervals_; }

    bool contains(const Point &x) const;
    bool contains(const Box &other) const;
    bool is_bounded() const;
    /// Every interval is unbounded on at least one side.
    bool is_degenerate_ball() const;
    bool is_nondegenerate() const;

    std::string to_string() const;

    friend bool operator==(const Box &, const Box &) = default;

private:
    std::vector<Interval> intervals_;
};

/// Closed l-infinity ball: max_i |x_i - c_i| <= radius.
class Cube {
public:
    Cube(Point center, Scalar radius);

    std::size_t dim() const noexcept { return center_.dim(); }
    const Point &center() const noexcept { return center_; }
    const Scalar &radius() const noexcept { return radius_; }

    bool contains(const Point &x) const;
    Box to_box() const;

    std::string to_string() const;

    friend bool operator==(const Cube &, const Cube &) = default;

private:
    Point center_;
    Scalar radius_;
};

/// Smallest box containing the points. Throws EmptySet.
Box rect_hull(std::span<const Point> points);
inline Box rect_hull(const PointSet &s) { return rect_hull(s.points()); }

/// Keeps the listed coordinates, in the listed order. Throws DuplicateAfterProjection on collisions.
PointSet project(const PointSet &s, std::span<const std::size_t> keep);
Point project(const Point &p, std::span<const std::size_t> keep);

/// Throws DimensionMismatch.
bool membership(const Box &region, const Point &x);
bool membership(const Cube &region, const Point &x);

} // namespace vclab

#endif
