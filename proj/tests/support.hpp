#ifndef VCLAB_TESTS_SUPPORT_HPP
#define VCLAB_TESTS_SUPPORT_HPP

#include "vclab/carve.hpp"

#include <random>
#include <set>
#include <vector>

namespace vclab::testing {

inline Scalar q(std::int64_t num, std::int64_t den = 1) { return Scalar(num, den); }

inline Point pt(std::initializer_list<std::int64_t> coords)
{
    std::vector<Scalar> c;
    for (auto x : coords)
        c.emplace_back(x);
    return Point(std::move(c));
}

inline PointSet ps(std::size_t dim, std::initializer_list<std::initializer_list<std::int64_t>> points)
{
    std::vector<Point> out;
    for (auto p : points)
        out.push_back(pt(p));
    return PointSet(dim, std::move(out));
}

inline SubsetMask mask_of(std::size_t width, std::initializer_list<std::size_t> indices)
{
    std::uint64_t bits = 0;
    for (auto i : indices)
        bits |= std::uint64_t{1} << i;
    return SubsetMask(bits, width);
}

inline Scalar random_rational(std::mt19937_64 &rng, int range = 10, int max_den = 4)
{
    std::uniform_int_distribution<int> num(-range * max_den, range * max_den);
    std::uniform_int_distribution<int> den(1, max_den);
    return Scalar(num(rng), den(rng));
}

/// Distinct random points with small integer coordinates in [0, range); ties are frequent.
/// range grows until range^dim >= n.
inline PointSet random_int_set(std::mt19937_64 &rng, std::size_t dim, std::size_t n, int range)
{
    auto capacity = [&] {
        std::size_t c = 1;
        for (std::size_t i = 0; i < dim && c < n; ++i)
            c *= static_cast<std::size_t>(range);
        return c;
    };
    while (capacity() < n)
        ++range;
    std::uniform_int_distribution<int> coord(0, range - 1);
    std::set<Point> seen;
    std::vector<Point> pts;
    while (pts.size() < n) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < dim; ++i)
            c.emplace_back(coord(rng));
        Point p(std::move(c));
        if (seen.insert(p).second)
            pts.push_back(std::move(p));
    }
    return PointSet(dim, std::move(pts));
}

inline PointSet random_rational_set(std::mt19937_64 &rng, std::size_t dim, std::size_t n)
{
    std::set<Point> seen;
    std::vector<Point> pts;
    while (pts.size() < n) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < dim; ++i)
            c.push_back(random_rational(rng, 3, 3));
        Point p(std::move(c));
        if (seen.insert(p).second)
            pts.push_back(std::move(p));
    }
    return PointSet(dim, std::move(pts));
}

inline Box random_bounded_box(std::mt19937_64 &rng, std::size_t dim)
{
    std::vector<Interval> ivs;
    for (std::size_t i = 0; i < dim; ++i) {
        Scalar a = random_rational(rng, 3, 3), b = random_rational(rng, 3, 3);
        if (b < a)
            std::swap(a, b);
        ivs.emplace_back(a, b);
    }
    return Box(std::move(ivs));
}

} // namespace vclab::testing

#endif
