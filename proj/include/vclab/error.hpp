#ifndef VCLAB_ERROR_HPP
#define VCLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace vclab {

enum class ErrorCode {
    InvalidArgument,
    EmptySet,
    DimensionMismatch,
    DuplicatePoint,
    DuplicateAfterProjection,
    AnchorMissing,
    UnboundedAnchor,
    NotContainingAnchor,
    NotContainingZero,
    CapExceeded,
    BudgetExceeded,
    NotShattered,
    NoConvergence,
    Domain,
    Parse,
    Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; the C API maps it onto a status value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace vclab

#endif
