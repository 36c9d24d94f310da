#ifndef VCLAB_CARVE_HPP
#define VCLAB_CARVE_HPP

#include "vclab/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace vclab {

enum class ClassKind {
    Boxes,                   ///< products of closed intervals, point intervals allowed
    BoxesNondegenerate,      ///< products of closed intervals with lo < hi on every axis
    Cubes,                   ///< closed l-infinity balls
    DegenerateBalls,         ///< every interval unbounded on at least one side
    AnchoredDegenerateBalls, ///< degenerate balls containing a bounded anchor box
    AxisCuts,                ///< {x : x_i <= a}
};

std::string_view to_string(ClassKind kind) noexcept;
/// Accepts the names produced by to_string (case-insensitive) and the short CLI spellings.
ClassKind parse_class_kind(std::string_view text);

/// Which concept class a query runs against.
struct ClassDescriptor {
    ClassKind kind;
    std::size_t dim;
    std::optional<Box> anchor; ///< required iff kind == AnchoredDegenerateBalls; bounded

    static ClassDescriptor of(ClassKind kind, std::size_t dim) { return {kind, dim, std::nullopt}; }
    static ClassDescriptor anchored(Box anchor);
    /// Degenerate balls containing the origin.
    static ClassDescriptor origin_anchored(std::size_t dim);

    /// Throws AnchorMissing / UnboundedAnchor / DimensionMismatch.
    void validate() const;
    /// Ordinal kinds: verdicts depend only on per-axis order of points and anchor corners.
    bool is_ordinal() const noexcept;
    std::string to_string() const;

    friend bool operator==(const ClassDescriptor &, const ClassDescriptor &) = default;
};

/// Bit i set iff point i belongs to the target subset.
class SubsetMask {
public:
    static constexpr std::size_t max_width = 64;

    SubsetMask(std::uint64_t bits, std::size_t width);

    std::uint64_t bits() const noexcept { return bits_; }
    std::size_t width() const noexcept { return width_; }
    bool test(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
    std::size_t count() const noexcept;
    bool empty() const noexcept { return bits_ == 0; }
    bool full() const noexcept { return bits_ == full_bits(width_); }
    SubsetMask complement() const { return SubsetMask(~bits_ & full_bits(width_), width_); }

    static std::uint64_t full_bits(std::size_t width) noexcept
    {
        return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    }

    /// Little-endian bit string: character i is point i.
    std::string to_bit_string() const;
    static SubsetMask from_bit_string(std::string_view bits);

    friend bool operator==(const SubsetMask &, const SubsetMask &) = default;

private:
    std::uint64_t bits_;
    std::size_t width_;
};

/// Half-space {x : x[axis] <= threshold}.
struct AxisCut {
    std::size_t axis;
    Scalar threshold;

    bool contains(const Point &x) const { return x[axis] <= threshold; }
    friend bool operator==(const AxisCut &, const AxisCut &) = default;
};

using Concept = std::variant<Box, Cube, AxisCut>;

bool contains(const Concept &region, const Point &x);
/// Structural membership of a concept in a class (kind, dimension, degeneracy, anchor).
bool is_member_of(const Concept &region, const ClassDescriptor &cls);
std::string to_string(const Concept &region);

struct CarveWitness {
    Concept region;
    ClassDescriptor cls;
};

/// True when the witness belongs to its class and contains exactly the masked points of s.
bool validates(const CarveWitness &witness, const PointSet &s, const SubsetMask &mask);

std::optional<CarveWitness> carve_box(const PointSet &s, const SubsetMask &mask, bool nondegenerate);
std::optional<CarveWitness> carve_degenerate(const PointSet &s, const SubsetMask &mask, const std::optional<Box> &anchor);
std::optional<CarveWitness> carve_cube(const PointSet &s, const SubsetMask &mask);
std::optional<CarveWitness> carve_axis_cut(const PointSet &s, const SubsetMask &mask);

/// Dispatches to the per-class decider; every returned witness has been validated.
std::optional<CarveWitness> carve(const PointSet &s, const SubsetMask &mask, const ClassDescriptor &cls);

/// Verdict only, no witness construction. Same decision procedures as carve().
bool carvable(const PointSet &s, const SubsetMask &mask, const ClassDescriptor &cls);

} // namespace vclab

#endif
