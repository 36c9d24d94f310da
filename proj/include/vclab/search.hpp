#ifndef VCLAB_SEARCH_HPP
#define VCLAB_SEARCH_HPP

#include "vclab/shatter.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vclab {

/// Symmetries quotiented out when enumerating order types.
struct Symmetry {
    bool relabel = true;      ///< permute point labels
    bool permute_axes = true; ///< permute coordinate axes
    bool reflect_axes = true; ///< reverse the order on an axis

    static Symmetry none() { return {false, false, false}; }
    /// Everything the class is invariant under; reflections are dropped for axis cuts.
    static Symmetry for_class(ClassKind kind);
};

/**
 * Per-axis rankings of n points (plus the origin when with_origin). Every axis
 * is a permutation of 0..m-1, m = n + with_origin; item 0 is the origin when
 * present, the points follow.
 */
struct OrderConfig {
    std::size_t n = 0;
    std::size_t d = 0;
    bool with_origin = false;
    std::vector<std::vector<std::uint32_t>> ranks; ///< ranks[axis][item]

    std::size_t items() const noexcept { return n + (with_origin ? 1 : 0); }
    /// Integer points: coordinate = rank, shifted so the origin sits at 0.
    PointSet realize() const;
    std::string to_string() const;

    friend bool operator==(const OrderConfig &, const OrderConfig &) = default;
    friend auto operator<=>(const OrderConfig &a, const OrderConfig &b) { return a.ranks <=> b.ranks; }
};

/**
 * Indexed space of rank matrices. When relabelling is a symmetry only matrices
 * whose first axis lists the points in increasing order are indexed, since
 * every orbit contains one. Index order is lexicographic, first axis most
 * significant.
 */
class OrderTypeSpace {
public:
    OrderTypeSpace(std::size_t n, std::size_t d, bool with_origin, Symmetry symmetry);

    /// Number of indexed matrices, saturating at UINT64_MAX.
    std::uint64_t raw_count() const noexcept { return raw_count_; }
    OrderConfig at(std::uint64_t index) const;
    /// Lexicographically least element of the orbit.
    OrderConfig canonical(const OrderConfig &config) const;
    bool is_canonical(const OrderConfig &config) const;

    /// Image of config under an axis permutation (new axis j is old axis perm[j]),
    /// per-axis reflections and a point relabelling (new point k is old point labels[k]).
    static OrderConfig transform(const OrderConfig &config, const std::vector<std::size_t> &perm,
                                 std::uint64_t reflect_mask, const std::vector<std::size_t> &labels);

private:
    std::size_t n_, d_;
    bool with_origin_;
    Symmetry symmetry_;
    std::uint64_t first_axis_choices_, other_axis_choices_, raw_count_;
    std::vector<std::vector<std::size_t>> axis_perms_;
};

/// Canonical representatives in index order. Throws BudgetExceeded when the space is larger than budget.
std::vector<OrderConfig> enumerate_order_types(std::size_t n, std::size_t d, bool with_origin, Symmetry symmetry,
                                               std::uint64_t budget = 10'000'000);

struct SearchOptions {
    unsigned jobs = 1;
    std::uint64_t budget = 50'000'000; ///< raw configurations examined over the whole run
};

enum class SearchOutcome { ShatteredWitness, ExhaustedNone, BudgetExceeded };
std::string_view to_string(SearchOutcome outcome) noexcept;

struct SizeOutcome {
    std::size_t n;
    SearchOutcome outcome;
    std::optional<OrderConfig> config; ///< first canonical shattered configuration
    std::optional<PointSet> witness;   ///< its realization, re-verified by is_shattered
    std::uint64_t configs_examined;
    std::uint64_t configs_after_symmetry;
};

struct VcSearchReport {
    ClassDescriptor cls;
    std::size_t n_max;
    std::vector<SizeOutcome> sizes{};
    std::optional<std::size_t> vc_exact{};
    std::size_t lower_bound = 0; ///< largest n with a shattered witness
    std::uint64_t configs_examined = 0;
    std::uint64_t configs_after_symmetry = 0;
    bool budget_exceeded = false;
    std::vector<std::string> assumptions{};
    /// Set by resolve_even_degenerate: the bracket [lo, hi] the exact value must fall in.
    std::optional<std::pair<std::size_t, std::size_t>> bracket{};
    bool bracket_holds = true;
    double wall_time_seconds = 0;
};

/**
 * Exact VC dimension of an ordinal class by exhausting order types for
 * n = 1..n_max, stopping at the first n without a shattered configuration.
 * kind: Boxes, BoxesNondegenerate, DegenerateBalls, AnchoredDegenerateBalls
 * (anchored at the origin), AxisCuts, or Cubes with d = 1.
 */
VcSearchReport exact_vc_ordinal(ClassKind kind, std::size_t d, std::size_t n_max, const SearchOptions &options = {});

/// exact_vc_ordinal(DegenerateBalls, d, 3d/2 + 2) for even d, checked against [3d/2, 3d/2 + 1].
VcSearchReport resolve_even_degenerate(std::size_t d, const SearchOptions &options = {});

struct CubeSearchOptions {
    std::size_t d = 2;
    std::size_t n = 3;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    std::uint32_t coordinate_range = 16; ///< coordinates drawn from [0, range)
    unsigned jobs = 1;
    std::size_t keep = 5;        ///< best candidates reported
    std::size_t climb_steps = 0; ///< hill-climbing moves per trial; 0 means 2 * n * d
};

struct CubeCandidate {
    PointSet set;
    std::uint64_t score; ///< carvable masks
    ShatterVerdict verdict;
};

struct CubeSearchReport {
    CubeSearchOptions options;
    bool found = false;
    std::uint64_t best_score = 0;
    std::uint64_t full_score = 0; ///< 2^n
    std::vector<CubeCandidate> best{};
    double wall_time_seconds = 0;
};

/// Translates each axis to start at 0 and sorts the points; used to merge and deduplicate candidates.
PointSet cube_canonical_key(const PointSet &s);

/**
 * Random integer configurations with injective projections, each improved by
 * hill climbing on the number of cube-carvable masks. Trials are grouped in
 * fixed chunks seeded from (seed, chunk), so the result does not depend on jobs.
 */
CubeSearchReport random_cube_search(const CubeSearchOptions &options);

} // namespace vclab

#endif
