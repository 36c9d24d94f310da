#include "doctest.h"

#include "support.hpp"
#include "vclab/constructions.hpp"
#include "vclab/error.hpp"

using namespace vclab;
using namespace vclab::testing;

namespace {

Box unit_square() { return Box({Interval(0, 1), Interval(0, 1)}); }

const ExtendedScalar ninf = ExtendedScalar::neg_inf(), pinf = ExtendedScalar::pos_inf();

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

TEST_CASE("witness_d0 examples")
{
    CHECK(witness_d0(1) == ps(1, {{1}}));
    CHECK(witness_d0(2) == ps(2, {{-1, 1}, {1, -1}, {2, 1}}));
    CHECK(witness_d0(3) == ps(3, {{-1, 1, 0}, {1, -1, 0}, {2, 1, 0}, {0, 0, 1}}));
    for (std::size_t d = 1; d <= 6; ++d)
        CHECK(witness_d0(d).size() == 3 * d / 2);
}

TEST_CASE("witness_d0 is shattered by degenerate balls containing the origin")
{
    for (std::size_t d = 1; d <= 5; ++d) {
        auto v = is_shattered(witness_d0(d), ClassDescriptor::origin_anchored(d), ShatterOptions{20, 4});
        INFO("d=", d);
        CHECK(v.shattered);
    }
}

TEST_CASE("witness_cubes examples")
{
    CHECK(witness_cubes(1) == ps(1, {{0}, {1}}));
    CHECK(witness_cubes(2) == ps(2, {{1, 0}, {0, 2}, {0, -2}}));
    CHECK(witness_cubes(3).size() == 5);
    CHECK(witness_cubes(4).size() == 6);
    for (std::size_t d = 1; d <= 4; ++d) {
        INFO("d=", d);
        CHECK(witness_cubes(d).size() == (3 * d + 1) / 2);
        CHECK(is_shattered(witness_cubes(d), ClassDescriptor::of(ClassKind::Cubes, d), ShatterOptions{20, 4}).shattered);
    }
}

TEST_CASE("lift keeps poles outside the base")
{
    auto lift = CubeLift::for_base(ps(1, {{1}}));
    CHECK(lift.half_height == q(2));
    CHECK(lift.lift() == ps(2, {{1, 0}, {0, 2}, {0, -2}}));
    CHECK(CubeLift::for_base(ps(1, {{0}})).half_height == q(1));
}

TEST_CASE("anchor_collapse examples")
{
    CHECK(anchor_collapse(unit_square(), Point{q(2), q(1, 2)}) == pt({1, 0}));
    CHECK(anchor_collapse(unit_square(), pt({-3, 5})) == pt({-3, 4}));
    CHECK(anchor_collapse(unit_square(), Point{q(1, 3), q(1)}) == pt({0, 0}));
    Box half_line({Interval(0, pinf)});
    CHECK(code_of([&] { anchor_collapse(half_line, pt({1})); }) == ErrorCode::UnboundedAnchor);
}

TEST_CASE("anchor_collapse_box examples")
{
    Box f1({Interval(0, 1)});
    CHECK(anchor_collapse_box(f1, Box({Interval(ninf, 3)})) == Box({Interval(ninf, 2)}));
    CHECK(anchor_collapse_box(f1, Box::whole_space(1)) == Box::whole_space(1));
    CHECK(anchor_collapse_box(unit_square(), Box({Interval(-2, pinf), Interval(ninf, 5)})) ==
          Box({Interval(-2, pinf), Interval(ninf, 4)}));
    CHECK(code_of([&] { anchor_collapse_box(f1, Box({Interval(ninf, Scalar(1, 2))})); }) ==
          ErrorCode::NotContainingAnchor);
}

TEST_CASE("anchor_expand_box examples")
{
    Box f1({Interval(0, 1)});
    CHECK(anchor_expand_box(f1, Box({Interval(ninf, 2)})) == Box({Interval(ninf, 3)}));
    CHECK(anchor_expand_box(f1, Box({Interval(-1, pinf)})) == Box({Interval(-1, pinf)}));
    CHECK(anchor_expand_box(Box({Interval(2, 3)}), Box({Interval(0, pinf)})) == Box({Interval(2, pinf)}));
    CHECK(code_of([&] { anchor_expand_box(f1, Box({Interval(1, pinf)})); }) == ErrorCode::NotContainingZero);
}

TEST_CASE("anchor collapse transports membership")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 500; ++t) {
        std::size_t d = 1 + t % 3;
        Box f = random_bounded_box(rng, d);
        auto s = random_rational_set(rng, d, 4);
        // A random degenerate ball containing f.
        std::vector<Interval> ivs;
        for (std::size_t i = 0; i < d; ++i) {
            Scalar a = f[i].lo().value() - abs(random_rational(rng, 2, 3));
            Scalar b = f[i].hi().value() + abs(random_rational(rng, 2, 3));
            switch (rng() % 3) {
                case 0: ivs.emplace_back(ninf, b); break;
                case 1: ivs.emplace_back(a, pinf); break;
                default: ivs.push_back(Interval::real_line()); break;
            }
        }
        Box ball(ivs);
        Box image = anchor_collapse_box(f, ball);
        CHECK(anchor_expand_box(f, image) == ball);
        CHECK(image.contains(Point(std::vector<Scalar>(d, Scalar(0)))));
        for (const auto &p : s)
            REQUIRE(ball.contains(p) == image.contains(anchor_collapse(f, p)));
    }
}

TEST_CASE("twitch examples")
{
    auto boxes = ClassDescriptor::of(ClassKind::Boxes, 2);
    CHECK(code_of([&] { twitch(ps(2, {{0, 0}, {0, 2}, {2, 0}}), boxes); }) == ErrorCode::NotShattered);
    auto out = twitch(ps(2, {{0, 1}, {1, 0}, {1, 2}}), boxes);
    CHECK(out.has_injective_projections());
    CHECK(is_shattered(out, boxes).shattered);

    auto injective = ps(2, {{0, 1}, {1, 0}});
    CHECK(twitch(injective, boxes) == injective);

    auto cubes = ClassDescriptor::of(ClassKind::Cubes, 2);
    auto lifted = twitch(witness_cubes(2), cubes);
    CHECK(lifted.has_injective_projections());
    CHECK(is_shattered(lifted, cubes).shattered);

    CHECK(code_of([&] { twitch(ps(1, {{0}, {1}, {2}}), ClassDescriptor::of(ClassKind::Cubes, 1)); }) ==
          ErrorCode::NotShattered);
    CHECK(code_of([&] { twitch(injective, ClassDescriptor::of(ClassKind::AxisCuts, 2)); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("twitch preserves shattering on witness sets")
{
    for (std::size_t d = 2; d <= 4; ++d) {
        auto cls = ClassDescriptor::origin_anchored(d);
        auto out = twitch(witness_d0(d), cls, TwitchOptions{ShatterOptions{20, 4}, 64});
        INFO("d=", d);
        CHECK(out.has_injective_projections());
        CHECK(is_shattered(out, cls).shattered);
    }
}

TEST_CASE("extremal certificate examples")
{
    auto c = extremal_certificate(witness_d0(2));
    CHECK(c.lower == std::vector<std::size_t>{0, 1});
    CHECK(c.upper == std::vector<std::size_t>{2, 0});
    CHECK(c.once_count == 2);
    CHECK(c.nonextremal.empty());
    CHECK_FALSE(c.obstruction());
    CHECK_FALSE(c.refutes_anchored());

    auto interior = extremal_certificate(ps(2, {{0, 0}, {2, 2}, {1, 1}}));
    CHECK(interior.nonextremal == std::vector<std::size_t>{2});
    REQUIRE(interior.obstruction());
    CHECK(*interior.obstruction() == mask_of(3, {0, 1}));
    CHECK_FALSE(carvable(interior.set, *interior.obstruction(), ClassDescriptor::of(ClassKind::Boxes, 2)));

    auto four = extremal_certificate(witness_d0(4));
    CHECK(four.nonextremal.empty());
    CHECK(four.once_count <= 4);
}

TEST_CASE("extremal bound holds for anchored-shattered sets")
{
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int t = 0; t < 3000 && checked < 200; ++t) {
        std::size_t d = 1 + t % 3, n = 1 + t % 5;
        auto s = random_int_set(rng, d, n, 7);
        auto cls = ClassDescriptor::origin_anchored(d);
        if (!s.has_injective_projections() || !is_shattered(s, cls).shattered)
            continue;
        ++checked;
        auto c = extremal_certificate(s);
        REQUIRE(c.nonextremal.empty());
        REQUIRE_FALSE(c.refutes_anchored());
        REQUIRE(c.once_count <= d);
        REQUIRE(2 * s.size() <= 2 * d + c.once_count);
    }
    CHECK(checked > 20);
}

TEST_CASE("cube downward projection")
{
    for (std::size_t d = 2; d <= 4; ++d) {
        auto s = twitch(witness_cubes(d), ClassDescriptor::of(ClassKind::Cubes, d), TwitchOptions{ShatterOptions{20, 4}, 64});
        auto down = cube_downward_projection(s, ShatterOptions{20, 4});
        INFO("d=", d);
        CHECK(down.projected.dim() == d - 1);
        CHECK(down.projected.size() == s.size() - 2);
        CHECK(down.anchored_shattered);
    }
    CHECK(code_of([] { cube_downward_projection(ps(1, {{0}, {1}})); }) == ErrorCode::InvalidArgument);
}
