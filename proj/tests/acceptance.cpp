// Runs every reproduction item at full scale and prints one line per item.
//
// Item 4 asks for a five-point set in three dimensions shattered by degenerate
// balls. Exhaustive search finds none, so that item is expected to print FAIL;
// the run still succeeds when that is the only failure and the other parts of
// item 4 (d = 1 exact, d = 2 resolved) hold.
#include "vclab/parallel.hpp"
#include "vclab/verify.hpp"

#include <cstdio>

using namespace vclab;

namespace {

bool degenerate_item_fails_only_at_d3(const CriterionResult &item)
{
    const Json &d = item.data;
    if (!d.contains("d1") || !d.contains("d2") || !d.contains("d3"))
        return false;
    const Json &two = d["d2"]["vc_exact"];
    return d["d1"]["vc_exact"] == 2 && two.is_number() && (two == 3 || two == 4) && d["d3"]["size5_witness"].is_null();
}

} // namespace

int main()
{
    VerifyOptions options;
    options.level = VerifyLevel::Full;
    options.jobs = default_jobs();
    options.on_item = [](const CriterionResult &item) {
        std::fprintf(stderr, "[done] item %d in %.1f s\n", item.id, item.wall_time_seconds);
    };
    auto report = run_reproduction(options);

    int unexpected = 0;
    for (const auto &item : report.items) {
        bool expected_failure = item.id == 4 && !item.passed && degenerate_item_fails_only_at_d3(item);
        std::printf("criterion %2d: %s  %s (%.1f s)%s%s\n         %s\n", item.id, item.passed ? "PASS" : "FAIL",
                    item.title.c_str(), item.wall_time_seconds, item.evidence_only ? " [evidence, not proof]" : "",
                    expected_failure ? " [expected: no such set exists]" : "", item.detail.c_str());
        if (!item.passed && !expected_failure)
            ++unexpected;
        if (item.id == 4 && item.passed)
            std::printf("         note: a five-point witness was found; the exhaustive result it contradicts needs review\n");
    }
    std::printf("%zu items, %d unexpected failures, %.1f s\n", report.items.size(), unexpected, report.wall_time_seconds);
    return unexpected == 0 ? 0 : 1;
}
