#include "doctest.h"

#include "support.hpp"
#include "vclab/error.hpp"
#include "vclab/geometry.hpp"

using namespace vclab;
using namespace vclab::testing;

namespace {

ErrorCode code_of(auto &&fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected vclab::Error");
    return ErrorCode::Internal;
}

} // namespace

TEST_CASE("scalars are normalised")
{
    CHECK(Scalar(6, 4).to_string() == "3/2");
    CHECK(Scalar(-10, -4).to_string() == "5/2");
    CHECK(Scalar(3, -6).to_string() == "-1/2");
    CHECK(Scalar::parse("-10/6") == Scalar(-5, 3));
    CHECK(Scalar::parse("42").is_integer());
    CHECK(Scalar::parse("+7") == Scalar(7));
    CHECK(Scalar(1, 3).denominator() == 3);
    CHECK(code_of([] { Scalar::parse("1/0"); }) == ErrorCode::Parse);
    CHECK(code_of([] { Scalar::parse("1/-2"); }) == ErrorCode::Parse);
    CHECK(code_of([] { Scalar::parse("1.5"); }) == ErrorCode::Parse);
    CHECK(code_of([] { Scalar(1) / Scalar(0); }) == ErrorCode::Domain);
}

TEST_CASE("scalar arithmetic is exact beyond 64 bits")
{
    Scalar big = Scalar::parse("123456789012345678901234567890");
    Scalar third(1, 3);
    CHECK((big * third * Scalar(3)) == big);
    CHECK(((big + third) - big) == third);
    CHECK(Scalar::parse("340282366920938463463374607431768211456/3").to_string() ==
          "340282366920938463463374607431768211456/3");
}

TEST_CASE("field axioms hold on random triples")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        Scalar a = random_rational(rng, 50, 97), b = random_rational(rng, 50, 97), c = random_rational(rng, 50, 97);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (b.sign() != 0)
            CHECK((a / b) * b == a);
    }
}

TEST_CASE("extended scalar order is total, transitive and antisymmetric")
{
    std::mt19937_64 rng(11);
    auto draw = [&]() -> ExtendedScalar {
        int k = std::uniform_int_distribution<int>(0, 9)(rng);
        if (k == 0)
            return ExtendedScalar::neg_inf();
        if (k == 1)
            return ExtendedScalar::pos_inf();
        return random_rational(rng, 3, 2);
    };
    for (int t = 0; t < 5000; ++t) {
        auto a = draw(), b = draw(), c = draw();
        if (a <= b && b <= c)
            CHECK(a <= c);
        if (a <= b && b <= a)
            CHECK(a == b);
        CHECK(((a < b) + (a == b) + (a > b)) == 1);
    }
    CHECK(ExtendedScalar::neg_inf() < ExtendedScalar(Scalar::parse("-1000000000000000000000")));
    CHECK(ExtendedScalar(Scalar::parse("1000000000000000000000")) < ExtendedScalar::pos_inf());
    CHECK(ExtendedScalar::parse("-inf").is_neg_inf());
    CHECK(ExtendedScalar::parse("inf").is_pos_inf());
}

TEST_CASE("rect_hull")
{
    CHECK(rect_hull(ps(2, {{0, 0}, {2, 1}})) == Box({Interval(0, 2), Interval(0, 1)}));
    CHECK(rect_hull(ps(2, {{1, 1}})) == Box({Interval(1, 1), Interval(1, 1)}));
    CHECK(rect_hull(ps(2, {{-1, 1}, {1, -1}, {2, 1}})) == Box({Interval(-1, 2), Interval(-1, 1)}));
    CHECK(code_of([] { rect_hull(std::span<const Point>{}); }) == ErrorCode::EmptySet);
}

TEST_CASE("rect_hull is the smallest containing box")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        std::size_t d = 1 + t % 3;
        auto s = random_rational_set(rng, d, 1 + t % 6);
        Box h = rect_hull(s);
        for (const auto &p : s)
            CHECK(h.contains(p));
        Scalar eps = random_rational(rng, 1, 5);
        eps = abs(eps) + Scalar(1, 1000);
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Interval> lo_shrunk(h.intervals().begin(), h.intervals().end());
            std::vector<Interval> hi_shrunk = lo_shrunk;
            const Scalar &lo = h[i].lo().value(), &hi = h[i].hi().value();
            lo_shrunk[i] = Interval(lo + eps, std::max(hi, lo + eps));
            hi_shrunk[i] = Interval(std::min(lo, hi - eps), hi - eps);
            bool lost_lo = false, lost_hi = false;
            for (const auto &p : s) {
                lost_lo = lost_lo || !Box(lo_shrunk).contains(p);
                lost_hi = lost_hi || !Box(hi_shrunk).contains(p);
            }
            CHECK(lost_lo);
            CHECK(lost_hi);
        }
    }
}

TEST_CASE("project")
{
    std::vector<std::size_t> first{0}, second{1}, both{0, 1};
    CHECK(code_of([&] { project(ps(2, {{1, 0}, {0, 2}, {0, -2}}), first); }) == ErrorCode::DuplicateAfterProjection);
    CHECK(project(ps(2, {{1, 2}, {3, 4}}), second) == ps(1, {{2}, {4}}));
    CHECK(project(ps(3, {{-1, 1, 0}, {1, -1, 0}, {2, 1, 0}}), both) == ps(2, {{-1, 1}, {1, -1}, {2, 1}}));
    std::vector<std::size_t> dup{0, 0};
    CHECK(code_of([&] { project(ps(2, {{1, 2}}), dup); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("membership")
{
    Box quadrant({Interval(0, ExtendedScalar::pos_inf()), Interval(ExtendedScalar::neg_inf(), 1)});
    CHECK(membership(quadrant, pt({5, 1})));
    Cube unit(pt({0, 0}), q(1));
    CHECK(membership(unit, pt({1, 1})));
    CHECK_FALSE(membership(unit, Point{q(3, 2), q(0)}));
    CHECK(code_of([&] { membership(unit, pt({0})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("cube to box conversion preserves membership")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10000; ++t) {
        std::size_t d = 1 + t % 4;
        std::vector<Scalar> c, x;
        for (std::size_t i = 0; i < d; ++i) {
            c.push_back(random_rational(rng, 4, 3));
            x.push_back(random_rational(rng, 4, 3));
        }
        Cube cube(Point(c), abs(random_rational(rng, 3, 3)));
        Point p(x);
        REQUIRE(cube.contains(p) == cube.to_box().contains(p));
    }
}

TEST_CASE("point set construction")
{
    CHECK(code_of([] { ps(2, {{0, 0}, {0, 0}}); }) == ErrorCode::DuplicatePoint);
    CHECK(code_of([] { PointSet(2, {pt({1})}); }) == ErrorCode::DimensionMismatch);
    CHECK(ps(2, {{0, 1}, {1, 0}}).has_injective_projections());
    CHECK_FALSE(ps(2, {{0, 1}, {0, 2}}).has_injective_projections());
    CHECK(ps(2, {{0, 1}, {1, 0}, {2, 2}}).subset(0b101) == ps(2, {{0, 1}, {2, 2}}));
}

TEST_CASE("interval invariants")
{
    CHECK(code_of([] { Interval(2, 1); }) == ErrorCode::InvalidArgument);
    CHECK(Interval(ExtendedScalar::neg_inf(), 0).has_infinite_side());
    CHECK_FALSE(Interval(0, 1).has_infinite_side());
    CHECK_FALSE(Interval::point(q(3)).is_nondegenerate());
}
