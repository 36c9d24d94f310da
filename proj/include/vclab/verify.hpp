#ifndef VCLAB_VERIFY_HPP
#define VCLAB_VERIFY_HPP

#include "vclab/io.hpp"

#include <functional>
#include <string>
#include <vector>

namespace vclab {

enum class VerifyLevel { Fast, Full };
VerifyLevel parse_verify_level(std::string_view text);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    bool evidence_only = false; ///< passing is evidence, not proof
    std::string detail;
    Json data = Json::object();
    double budget_seconds = 0; ///< 0 when the item has no time limit
    double wall_time_seconds = 0;
};

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Fast;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    /// Called as each item finishes.
    std::function<void(const CriterionResult &)> on_item{};
};

struct VerifyReport {
    VerifyLevel level;
    std::vector<CriterionResult> items; ///< by id
    bool all_passed = true;
    double wall_time_seconds = 0;
};

/// Items 1, 2, 5, 9 at the fast level; all eleven at the full level.
VerifyReport run_reproduction(const VerifyOptions &options);

Json to_json(const CriterionResult &item);
Json to_json(const VerifyReport &report);

/// VC dimension the reproduction expects for the class at dimension d.
std::size_t expected_vc(ClassKind kind, std::size_t d);

} // namespace vclab

#endif
