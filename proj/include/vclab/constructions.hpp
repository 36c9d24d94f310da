#ifndef VCLAB_CONSTRUCTIONS_HPP
#define VCLAB_CONSTRUCTIONS_HPP

#include "vclab/shatter.hpp"

#include <optional>
#include <vector>

namespace vclab {

/**
 * floor(3d/2) points shattered by degenerate balls containing the origin.
 *
 * d = 1: {(1)}. d = 2: {(-1,1), (1,-1), (2,1)}. Even d is the product of the
 * d-2 set (padded with two zero coordinates) with the d = 2 set placed on the
 * last two axes. Odd d >= 3 pads the d-1 set with a zero coordinate and
 * appends (0,...,0,1).
 */
PointSet witness_d0(std::size_t d);

/// A base set in dimension d-1 lifted by two poles (0,...,0,+-L).
struct CubeLift {
    PointSet base;
    Scalar half_height; ///< L; every base point has sup norm <= L/2

    /// L = max(2 * max sup norm of base, 1).
    static CubeLift for_base(PointSet base);
    /// {(a, 0) : a in base} followed by (0,...,0,L) and (0,...,0,-L).
    PointSet lift() const;
};

/// floor((3d+1)/2) points shattered by cubes: {(0),(1)} for d = 1, else the lift of witness_d0(d-1).
PointSet witness_cubes(std::size_t d);

/**
 * Coordinatewise collapse of the bounded box F onto the origin:
 * x - a_i below F, 0 inside, x - b_i above. Throws UnboundedAnchor.
 */
Point anchor_collapse(const Box &anchor, const Point &x);
PointSet anchor_collapse(const Box &anchor, const PointSet &s);

/// Image of a degenerate ball containing F. Throws NotContainingAnchor.
Box anchor_collapse_box(const Box &anchor, const Box &ball);

/// Preimage of a degenerate ball containing 0; contains F. Throws NotContainingZero.
Box anchor_expand_box(const Box &anchor, const Box &ball);

struct TwitchOptions {
    ShatterOptions shatter;
    int max_halvings = 64; ///< step floor is (initial step) * 2^-max_halvings
};

/**
 * Perturbs colliding points one at a time until every coordinate projection is
 * injective, re-verifying shattering after each move and halving the step on
 * failure. Supported kinds: boxes (both variants), cubes, degenerate and
 * anchored degenerate balls.
 *
 * Throws NotShattered if s is not shattered, NoConvergence if the step floor is hit.
 */
PointSet twitch(const PointSet &s, const ClassDescriptor &cls, const TwitchOptions &options = {});

/// Per-axis extreme points and the counting data used to bound shattered sets.
struct ExtremalCertificate {
    PointSet set;
    std::vector<std::size_t> lower; ///< lower[i]: least index attaining the axis-i minimum
    std::vector<std::size_t> upper; ///< upper[i]: least index attaining the axis-i maximum
    /// Points appearing exactly once in (lower[0], upper[0], ..., lower[d-1], upper[d-1]).
    std::size_t once_count;
    bool projections_injective;
    /// Points attaining no axis minimum or maximum under any tie-break.
    std::vector<std::size_t> nonextremal;

    /// S minus a nonextremal point: no box-like class can carve it.
    std::optional<SubsetMask> obstruction() const;
    /// For injective projections: once_count > d or #S > d + once_count/2 rules out
    /// shattering by anchored degenerate balls.
    bool refutes_anchored() const;
};

ExtremalCertificate extremal_certificate(const PointSet &s);

/// Projection of a cube-shattered set to an anchored-degenerate-ball-shattered set one dimension down.
struct DownwardProjection {
    std::size_t axis;        ///< widest hull axis (first on ties)
    std::size_t low_index;   ///< point attaining the minimum on axis
    std::size_t high_index;  ///< point attaining the maximum on axis
    PointSet projected;      ///< remaining points with axis dropped
    Box anchor;              ///< hull of the two projected poles
    bool anchored_shattered; ///< is_shattered(projected, anchored(anchor))
};

/// Requires s cube-shattered, injective projections, d >= 2.
DownwardProjection cube_downward_projection(const PointSet &s, const ShatterOptions &options = {});

} // namespace vclab

#endif
