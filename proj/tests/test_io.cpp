#include "doctest.h"

#include "support.hpp"
#include "vclab/constructions.hpp"
#include "vclab/error.hpp"
#include "vclab/io.hpp"

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

const ExtendedScalar ninf = ExtendedScalar::neg_inf(), pinf = ExtendedScalar::pos_inf();

} // namespace

TEST_CASE("scalars: integers as numbers, other rationals as strings")
{
    CHECK(to_json(q(3)) == Json(3));
    CHECK(to_json(q(-3, 4)) == Json("-3/4"));
    CHECK(to_json(Scalar::parse("1180591620717411303424")) == Json("1180591620717411303424"));
    CHECK(scalar_from_json(Json(5)) == q(5));
    CHECK(scalar_from_json(Json("-10/6")) == q(-5, 3));
    CHECK(scalar_from_json(Json::parse("18446744073709551615")) == Scalar::parse("18446744073709551615"));
    CHECK(code_of([] { scalar_from_json(Json(0.5)); }) == ErrorCode::Parse);
    CHECK(code_of([] { scalar_from_json(Json(true)); }) == ErrorCode::Parse);
    CHECK(code_of([] { scalar_from_json(Json("1/0")); }) == ErrorCode::Parse);
    CHECK(code_of([] { scalar_from_json(Json("x")); }) == ErrorCode::Parse);
    CHECK(extended_from_json(Json("-inf")) == ninf);
    CHECK(extended_from_json(Json("inf")) == pinf);
}

TEST_CASE("point-set files round-trip")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        std::size_t d = 1 + t % 4, n = 1 + t % 7;
        auto s = t % 2 ? random_rational_set(rng, d, n) : random_int_set(rng, d, n, 5);
        auto text = to_json(s).dump();
        REQUIRE(parse_point_set(text) == s);
        REQUIRE(to_json(parse_point_set(text)).dump() == text);
    }
}

TEST_CASE("malformed point-set files")
{
    for (const char *bad : {"", "[", "{}", R"({"dim":2})", R"({"dim":0,"points":[]})", R"({"dim":-1,"points":[]})",
                            R"({"dim":2,"points":[[1]]})", R"({"dim":1,"points":[[1],[1]]})",
                            R"({"dim":1,"points":[[0.25]]})", R"({"dim":1,"points":[["a"]]})",
                            R"({"dim":1,"points":{}})"}) {
        INFO(bad);
        CHECK(code_of([&] { parse_point_set(bad); }) == ErrorCode::Parse);
    }
    CHECK(code_of([] { read_point_set_file("/nonexistent/points.json"); }) == ErrorCode::Parse);
    CHECK(parse_point_set(R"({"dim":2,"points":[[1,"1/2"],["-3/6",4]]})") ==
          PointSet(2, {Point{q(1), q(1, 2)}, Point{q(-1, 2), q(4)}}));
}

TEST_CASE("regions round-trip")
{
    Box b({Interval(ninf, q(3, 2)), Interval(q(-1), pinf), Interval::real_line(), Interval(q(0), q(0))});
    CHECK(to_json(b) == Json::parse(R"([["-inf","3/2"],["-1","inf"],["-inf","inf"],["0","0"]])"));
    CHECK(box_from_json(to_json(b)) == b);
    CHECK(box_from_json(Json::parse(R"([[0, "1/2"]])")) == Box({Interval(q(0), q(1, 2))}));

    Concept regions[] = {b, Cube(Point{q(1), q(-1, 3)}, q(5, 2)), AxisCut{1, q(-7, 4)}};
    for (const auto &r : regions)
        CHECK(concept_from_json(Json::parse(to_json(r).dump())) == r);
    CHECK(code_of([] { concept_from_json(Json::parse(R"({"type":"ball"})")); }) == ErrorCode::Parse);
    CHECK(code_of([] { box_from_json(Json::parse(R"([["2","1"]])")); }) == ErrorCode::Parse);
}

TEST_CASE("class descriptors round-trip")
{
    for (auto cls : {ClassDescriptor::of(ClassKind::Cubes, 3), ClassDescriptor::origin_anchored(2),
                     ClassDescriptor::anchored(Box({Interval(q(0), q(1, 2))}))})
        CHECK(class_from_json(Json::parse(to_json(cls).dump())) == cls);
    CHECK(code_of([] { class_from_json(Json::parse(R"({"kind":"ANCHORED_DEGENERATE_BALLS","dim":1})")); }) ==
          ErrorCode::Parse);
}

TEST_CASE("mask notation")
{
    CHECK(parse_mask("101", 3) == mask_of(3, {0, 2}));
    CHECK(parse_mask("{0,2}", 3) == mask_of(3, {0, 2}));
    CHECK(parse_mask("[0, 2]", 3) == mask_of(3, {0, 2}));
    CHECK(parse_mask("2,0", 3) == mask_of(3, {0, 2}));
    CHECK(parse_mask("{}", 3) == mask_of(3, {}));
    CHECK(parse_mask("", 3) == mask_of(3, {}));
    CHECK(parse_mask("1", 1) == mask_of(1, {0}));
    CHECK(parse_mask("1", 3) == mask_of(3, {1}));
    CHECK(parse_mask("{10}", 11) == mask_of(11, {10}));
    CHECK(code_of([] { parse_mask("10", 3); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { parse_mask("{3}", 3); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { parse_mask("{0,x}", 3); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { parse_mask("{0,1", 3); }) == ErrorCode::InvalidArgument);
    CHECK(mask_indices(mask_of(4, {1, 3})) == "{1,3}");
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + t % 20;
        SubsetMask m(rng() & SubsetMask::full_bits(n), n);
        REQUIRE(parse_mask(m.to_bit_string(), n) == m);
        REQUIRE(parse_mask(mask_indices(m), n) == m);
    }
}

TEST_CASE("certificates re-validate after a round trip")
{
    auto cases = {std::pair{witness_d0(2), ClassDescriptor::origin_anchored(2)},
                  std::pair{witness_cubes(3), ClassDescriptor::of(ClassKind::Cubes, 3)},
                  std::pair{ps(2, {{0, 1}, {1, 0}}), ClassDescriptor::of(ClassKind::AxisCuts, 2)},
                  std::pair{ps(2, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}), ClassDescriptor::of(ClassKind::Boxes, 2)}};
    for (const auto &[s, cls] : cases) {
        auto v = is_shattered(s, cls);
        REQUIRE(v.shattered);
        auto text = to_json(*v.certificate).dump();
        auto back = certificate_from_json(Json::parse(text));
        CHECK(back.set == s);
        CHECK(back.cls == cls);
        CHECK(back.revalidate());
        // A region swapped between two masks no longer carves either.
        std::swap(back.witnesses[1], back.witnesses[2]);
        CHECK_FALSE(back.revalidate());
    }
    auto j = to_json(*is_shattered(witness_d0(2), ClassDescriptor::origin_anchored(2)).certificate);
    j["witnesses"].erase(j["witnesses"].begin());
    CHECK(code_of([&] { certificate_from_json(j); }) == ErrorCode::Parse);
}

TEST_CASE("digests and timing removal")
{
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    Json j = Json::parse(R"({"a":1,"wall_time_seconds":2,"b":[{"wall_time_seconds":3,"c":4}],"d":{"wall_time_seconds":5}})");
    CHECK(without_timing(j) == Json::parse(R"({"a":1,"b":[{"c":4}],"d":{}})"));
    CHECK(digest(without_timing(j)) == sha256_hex(R"({"a":1,"b":[{"c":4}],"d":{}})"));
}
