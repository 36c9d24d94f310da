#include "doctest.h"

#include "support.hpp"
#include "vclab/commands.hpp"
#include "vclab/constructions.hpp"
#include "vclab/verify.hpp"

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

const CommandOptions defaults{};

void check_envelope(const Json &r, const char *command)
{
    CHECK(r.at("schema_version") == schema_version);
    CHECK(r.at("command") == command);
    CHECK(r.at("version") == std::string(library_version()));
    CHECK(r.at("inputs_digest") == digest(r.at("inputs")));
    CHECK(r.contains("result"));
    CHECK(r.contains("counters"));
    CHECK(r.contains("seed"));
}

} // namespace

TEST_CASE("carve command")
{
    auto d0 = ClassDescriptor::origin_anchored(2);
    auto ok = cmd_carve(witness_d0(2), "{0,2}", d0, defaults);
    CHECK(ok.status == Status::Ok);
    check_envelope(ok.report, "carve");
    const Json &res = ok.report["result"];
    CHECK(res["feasible"] == true);
    CHECK(res["mask"] == "101");
    auto region = concept_from_json(res["witness"]);
    CHECK(validates(CarveWitness{region, d0}, witness_d0(2), SubsetMask(0b101, 3)));

    auto line = cmd_carve(ps(1, {{0}, {1}, {2}}), "{0,2}", ClassDescriptor::of(ClassKind::Cubes, 1), defaults);
    CHECK(line.status == Status::Negative);
    CHECK(line.report["result"]["witness"].is_null());

    CHECK(code_of([] { cmd_carve(ps(1, {{0}, {1}, {2}}), "10", ClassDescriptor::of(ClassKind::Cubes, 1), defaults); }) ==
          ErrorCode::InvalidArgument);
    CHECK(status_for(ErrorCode::InvalidArgument) == Status::Usage);
    CHECK(code_of([] { cmd_carve(ps(1, {{0}}), "1", ClassDescriptor::of(ClassKind::Cubes, 2), defaults); }) ==
          ErrorCode::DimensionMismatch);
}

TEST_CASE("shatter, vcdim and coeff commands")
{
    auto d0 = ClassDescriptor::origin_anchored(2);
    auto sh = cmd_shatter(witness_d0(2), d0, defaults);
    CHECK(sh.status == Status::Ok);
    check_envelope(sh.report, "shatter");
    auto cert = certificate_from_json(Json::parse(sh.report["result"]["certificate"].dump()));
    CHECK(cert.witnesses.size() == 8);
    CHECK(cert.revalidate());

    auto notsh = cmd_shatter(ps(1, {{0}, {1}, {2}}), ClassDescriptor::of(ClassKind::Boxes, 1), defaults);
    CHECK(notsh.status == Status::Negative);
    CHECK(notsh.report["result"]["failing_mask"] == "101");

    auto coeff = cmd_coeff(ps(1, {{0}, {1}, {2}}), ClassDescriptor::of(ClassKind::Boxes, 1), defaults);
    CHECK(coeff.report["result"]["realized_masks"] == 7);
    CHECK(coeff.report["result"]["sauer_shelah"]["holds"] == true);

    for (ClassKind kind : {ClassKind::Boxes, ClassKind::BoxesNondegenerate, ClassKind::Cubes, ClassKind::DegenerateBalls,
                           ClassKind::AxisCuts}) {
        auto r = cmd_vcdim(ps(3, {{1, 2, 3}}), ClassDescriptor::of(kind, 3), defaults);
        CHECK(r.report["result"]["vc_lower_bound"] == 1);
    }
    auto vc = cmd_vcdim(ps(1, {{0}, {1}, {2}}), ClassDescriptor::of(ClassKind::Cubes, 1), defaults);
    CHECK(vc.report["result"]["vc_lower_bound"] == 2);
    CHECK(vc.report["result"]["subset"] == "{0,1}");
    CHECK(certificate_from_json(vc.report["result"]["certificate"]).revalidate());

    CommandOptions small;
    small.cap = 2;
    CHECK(code_of([&] { cmd_shatter(witness_d0(2), d0, small); }) == ErrorCode::CapExceeded);
    CHECK(status_for(ErrorCode::CapExceeded) == Status::Cap);
}

TEST_CASE("witness command")
{
    auto cubes = cmd_witness("cubes", 3, defaults);
    CHECK(cubes.status == Status::Ok);
    CHECK(cubes.report["result"]["size"] == 5);
    CHECK(cubes.report["result"]["verified"] == true);
    CHECK(certificate_from_json(cubes.report["result"]["certificate"]).revalidate());
    CHECK(point_set_from_json(cubes.report["result"]["points"]) == witness_cubes(3));
    CHECK(cmd_witness("d0", 6, defaults).report["result"]["size"] == 9);
    CHECK(cmd_witness("d0", 1, defaults).report["result"]["size"] == 1);

    CommandOptions quick;
    quick.verify = false;
    for (std::size_t d = 1; d <= 16; ++d) {
        auto r = cmd_witness("d0", d, quick);
        CHECK(r.report["result"]["size"] == 3 * d / 2);
        CHECK(r.report["result"]["verified"].is_null());
        CHECK(cmd_witness("cubes", d, quick).report["result"]["size"] == (3 * d + 1) / 2);
    }
    CHECK(code_of([] { cmd_witness("d0", 16, defaults); }) == ErrorCode::CapExceeded);
    CHECK(code_of([] { cmd_witness("balls", 2, defaults); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("search commands")
{
    auto boxes = cmd_ordinal_vc(ClassKind::Boxes, 2, std::nullopt, defaults);
    CHECK(boxes.status == Status::Ok);
    CHECK(boxes.report["result"]["vc_exact"] == 4);
    CHECK(cmd_ordinal_vc(ClassKind::AxisCuts, 2, std::nullopt, defaults).report["result"]["vc_exact"] == 2);
    CHECK(cmd_ordinal_vc(ClassKind::AnchoredDegenerateBalls, 2, 5, defaults).report["result"]["vc_exact"] == 3);

    CommandOptions tight;
    tight.budget = 50;
    auto partial = cmd_ordinal_vc(ClassKind::Boxes, 2, std::nullopt, tight);
    CHECK(partial.status == Status::Budget);
    CHECK(partial.report["result"]["vc_exact"].is_null());
    CHECK(partial.report["result"]["budget_exceeded"] == true);

    auto resolved = cmd_resolve_even(2, defaults);
    CHECK(resolved.status == Status::Ok);
    CHECK(resolved.report["result"]["bracket_holds"] == true);
    CHECK(code_of([] { cmd_resolve_even(3, defaults); }) == ErrorCode::InvalidArgument);

    CubeSearchOptions so;
    so.trials = 300;
    CommandOptions one, four;
    four.jobs = 4;
    auto a = cmd_search_cubes(so, one), b = cmd_search_cubes(so, four);
    CHECK(a.report["result"]["found"] == true);
    CHECK(without_timing(a.report).dump() == without_timing(b.report).dump());
}

TEST_CASE("expected VC values per class")
{
    CHECK(expected_vc(ClassKind::Boxes, 3) == 6);
    CHECK(expected_vc(ClassKind::AnchoredDegenerateBalls, 5) == 7);
    CHECK(expected_vc(ClassKind::Cubes, 4) == 6);
    const std::size_t cuts[] = {1, 2, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 6};
    for (std::size_t d = 1; d <= 20; ++d) {
        INFO("d=", d);
        CHECK(expected_vc(ClassKind::AxisCuts, d) == cuts[d - 1]);
    }
}

TEST_CASE("fast reproduction level")
{
    CommandOptions o;
    o.jobs = 2;
    auto r = cmd_reproduce("fast", o);
    CHECK(r.status == Status::Ok);
    const auto &items = r.report["result"]["items"];
    REQUIRE(items.size() == 4);
    std::vector<int> ids;
    for (const auto &item : items) {
        ids.push_back(item["id"].get<int>());
        CHECK(item["passed"] == true);
    }
    CHECK(ids == std::vector<int>{1, 2, 5, 9});
    auto again = cmd_reproduce("fast", CommandOptions{});
    CHECK(without_timing(r.report["result"]).dump() == without_timing(again.report["result"]).dump());
    CHECK(code_of([] { cmd_reproduce("medium", CommandOptions{}); }) == ErrorCode::InvalidArgument);
}
