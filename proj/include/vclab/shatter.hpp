#ifndef VCLAB_SHATTER_HPP
#define VCLAB_SHATTER_HPP

#include "vclab/carve.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace vclab {

struct ShatterOptions {
    std::size_t cap = 20; ///< largest set size accepted
    unsigned jobs = 1;
};

/// One validated witness per mask; witnesses[m] carves mask m.
struct ShatteringCertificate {
    PointSet set;
    ClassDescriptor cls;
    std::vector<CarveWitness> witnesses;

    /// Re-checks completeness and every witness against the set.
    bool revalidate() const;
};

struct ShatterVerdict {
    bool shattered;
    std::optional<ShatteringCertificate> certificate;
    std::optional<SubsetMask> failing_mask;
};

struct CoefficientReport {
    PointSet set;
    ClassDescriptor cls;
    std::uint64_t realized_masks;
    std::size_t n;
};

struct LowerBoundReport {
    std::size_t size;
    SubsetMask subset; ///< which points of the input form the shattered subset
    ShatteringCertificate certificate;
};

/**
 * Masks of an n-point set in checking order: singletons, then complements of
 * singletons, then the rest by ascending cardinality and value. Most sets that
 * are not shattered fail on a complement-singleton (an interior point).
 */
std::vector<std::uint64_t> canonical_mask_order(std::size_t n);

/// First mask in canonical order that cannot be carved, or nullopt when shattered. Throws CapExceeded.
std::optional<SubsetMask> first_failing_mask(const PointSet &s, const ClassDescriptor &cls,
                                             const ShatterOptions &options = {});

ShatterVerdict is_shattered(const PointSet &s, const ClassDescriptor &cls, const ShatterOptions &options = {});

CoefficientReport shattering_count(const PointSet &s, const ClassDescriptor &cls, const ShatterOptions &options = {});

/// Largest shattered subset of s; ties go to the lexicographically first index list.
LowerBoundReport vc_lower_bound_on(const PointSet &s, const ClassDescriptor &cls, const ShatterOptions &options = {});

/// Rational upper bound on Euler's number, within 1e-12.
const Scalar &e_upper_bound();

/// Certified upper bound on (e*n/v)^v. Throws Domain unless n >= v >= 1.
Scalar sauer_shelah_bound(std::uint64_t v, std::uint64_t n);

} // namespace vclab

#endif
