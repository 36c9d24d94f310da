#ifndef VCLAB_COMMANDS_HPP
#define VCLAB_COMMANDS_HPP

#include "vclab/error.hpp"
#include "vclab/io.hpp"

#include <optional>
#include <string>

namespace vclab {

/// Process exit status of a command.
enum class Status : int {
    Ok = 0,
    Usage = 1,
    Io = 2,
    Negative = 3, ///< infeasible mask or set not shattered
    Cap = 4,
    Budget = 5,   ///< the report is partial
    VerifyFailed = 6,
};

/// Usage for invalid arguments, Io for parse errors, Cap, Budget; anything else maps to Usage.
Status status_for(ErrorCode code) noexcept;

struct CommandOptions {
    unsigned jobs = 1;
    std::size_t cap = 20;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> budget{}; ///< configurations (ordinal search) or trials (cube search)
    bool verify = true;
};

struct CommandResult {
    Status status;
    Json report;
};

CommandResult cmd_carve(const PointSet &s, const std::string &mask, const ClassDescriptor &cls, const CommandOptions &o);
CommandResult cmd_shatter(const PointSet &s, const ClassDescriptor &cls, const CommandOptions &o);
/// Largest shattered subset of the file.
CommandResult cmd_vcdim(const PointSet &s, const ClassDescriptor &cls, const CommandOptions &o);
CommandResult cmd_coeff(const PointSet &s, const ClassDescriptor &cls, const CommandOptions &o);
/// kind is "d0" or "cubes". The report carries the point set under "points".
CommandResult cmd_witness(const std::string &kind, std::size_t d, const CommandOptions &o);
/// n_max defaults to one past the largest value the class can reach at this dimension.
CommandResult cmd_ordinal_vc(ClassKind kind, std::size_t d, std::optional<std::size_t> n_max, const CommandOptions &o);
CommandResult cmd_resolve_even(std::size_t d, const CommandOptions &o);
CommandResult cmd_search_cubes(const CubeSearchOptions &search, const CommandOptions &o);
/// level is "fast" or "full".
CommandResult cmd_reproduce(const std::string &level, const CommandOptions &o);

Json to_json(const VcSearchReport &r);
Json to_json(const CubeSearchReport &r);

} // namespace vclab

#endif
