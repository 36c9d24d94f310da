#ifndef VCLAB_ORACLE_HPP
#define VCLAB_ORACLE_HPP

#include "vclab/carve.hpp"

#include <vector>

// Brute-force reference deciders. They share no code with carve.cpp and are
// meant for cross-checking it on small instances only.
namespace vclab::oracle {

/**
 * realizable[m] for every mask m of s, by enumerating all boxes whose finite
 * endpoints come from the coordinates of s and the anchor corners, each side
 * optionally infinite. Complete for Boxes, DegenerateBalls,
 * AnchoredDegenerateBalls and AxisCuts (thresholds drawn from the same values).
 */
std::vector<bool> enumerative_traces(const PointSet &s, const ClassDescriptor &cls);

/**
 * Cube feasibility by trying every assignment of each excluded point to any
 * (axis, side) pair, with no pruning, and eliminating the center coordinates
 * by Fourier-Motzkin over all constraint pairs.
 */
bool cube_assignment_feasible(const PointSet &s, std::uint64_t mask);
std::vector<bool> cube_assignment_traces(const PointSet &s);

/**
 * Masks carved by cubes drawn from a finite grid: radii are half-differences
 * of same-axis coordinates (plus midpoints between consecutive ones and one
 * large radius), centers per axis are v +- r and midpoints between consecutive
 * such values. Sound but not claimed complete.
 */
std::vector<bool> cube_grid_traces(const PointSet &s);

} // namespace vclab::oracle

#endif
