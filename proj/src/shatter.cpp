#include "vclab/shatter.hpp"
#include "vclab/error.hpp"
#include "vclab/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>

namespace vclab {

unsigned default_jobs()
{
    if (const char *env = std::getenv("VCLAB_JOBS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

bool ShatteringCertificate::revalidate() const
{
    if (set.size() >= 64 || witnesses.size() != (std::uint64_t{1} << set.size()))
        return false;
    for (std::uint64_t m = 0; m < witnesses.size(); ++m) {
        if (!(witnesses[m].cls == cls))
            return false;
        if (!validates(witnesses[m], set, SubsetMask(m, set.size())))
            return false;
    }
    return true;
}

std::vector<std::uint64_t> canonical_mask_order(std::size_t n)
{
    if (n >= 63)
        throw Error(ErrorCode::CapExceeded, "mask enumeration supports fewer than 63 points");
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t full = total - 1;
    std::vector<char> used(total, 0);
    std::vector<std::uint64_t> order;
    order.reserve(total);
    auto push = [&](std::uint64_t m) {
        if (!used[m]) {
            used[m] = 1;
            order.push_back(m);
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        push(std::uint64_t{1} << i);
    for (std::size_t i = 0; i < n; ++i)
        push(full & ~(std::uint64_t{1} << i));
    std::vector<std::uint64_t> rest;
    rest.reserve(total - order.size());
    for (std::uint64_t m = 0; m < total; ++m)
        if (!used[m])
            rest.push_back(m);
    std::stable_sort(rest.begin(), rest.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    order.insert(order.end(), rest.begin(), rest.end());
    return order;
}

namespace {

void check_cap(const PointSet &s, const ClassDescriptor &cls, const ShatterOptions &options)
{
    cls.validate();
    if (s.dim() != cls.dim)
        throw Error(ErrorCode::DimensionMismatch, "class dimension differs from point set dimension");
    if (s.size() > options.cap || s.size() >= 63)
        throw Error(ErrorCode::CapExceeded,
                    "set of " + std::to_string(s.size()) + " points exceeds cap " + std::to_string(options.cap));
}

constexpr std::size_t mask_chunk = 64;

} // namespace

std::optional<SubsetMask> first_failing_mask(const PointSet &s, const ClassDescriptor &cls, const ShatterOptions &options)
{
    check_cap(s, cls, options);
    const auto order = canonical_mask_order(s.size());
    std::size_t idx = parallel_find_first(order.size(), options.jobs, mask_chunk, [&](std::size_t i) {
        return !carvable(s, SubsetMask(order[i], s.size()), cls);
    });
    if (idx == order.size())
        return std::nullopt;
    return SubsetMask(order[idx], s.size());
}

ShatterVerdict is_shattered(const PointSet &s, const ClassDescriptor &cls, const ShatterOptions &options)
{
    if (auto failing = first_failing_mask(s, cls, options))
        return ShatterVerdict{false, std::nullopt, failing};

    const std::uint64_t total = std::uint64_t{1} << s.size();
    std::vector<std::optional<CarveWitness>> slots(total);
    parallel_for(total, options.jobs, mask_chunk, [&](std::size_t m) { slots[m] = carve(s, SubsetMask(m, s.size()), cls); });

    ShatteringCertificate cert{s, cls, {}};
    cert.witnesses.reserve(total);
    for (auto &w : slots) {
        if (!w)
            throw Error(ErrorCode::Internal, "verdict and witness pass disagree");
        cert.witnesses.push_back(std::move(*w));
    }
    return ShatterVerdict{true, std::move(cert), std::nullopt};
}

CoefficientReport shattering_count(const PointSet &s, const ClassDescriptor &cls, const ShatterOptions &options)
{
    check_cap(s, cls, options);
    const std::uint64_t total = std::uint64_t{1} << s.size();
    std::vector<char> hit(total, 0);
    parallel_for(total, options.jobs, mask_chunk,
                 [&](std::size_t m) { hit[m] = carvable(s, SubsetMask(m, s.size()), cls) ? 1 : 0; });
    auto realized = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
    return CoefficientReport{s, cls, realized, s.size()};
}

LowerBoundReport vc_lower_bound_on(const PointSet &s, const ClassDescriptor &cls, const ShatterOptions &options)
{
    check_cap(s, cls, options);
    const std::size_t n = s.size();
    if (n == 0)
        return LowerBoundReport{0, SubsetMask(0, 0), std::move(*is_shattered(s, cls, options).certificate)};

    // Carving a mask from a superset implies carving it from every subset containing it,
    // so masks carvable from all of s are settled once for the whole query.
    std::map<std::uint64_t, bool> carvable_from_all;
    auto carvable_in = [&](const PointSet &sub, std::uint64_t global_mask, std::uint64_t local) {
        auto it = carvable_from_all.find(global_mask);
        if (it == carvable_from_all.end())
            it = carvable_from_all.emplace(global_mask, carvable(s, SubsetMask(global_mask, n), cls)).first;
        if (it->second)
            return true;
        return carvable(sub, SubsetMask(local, sub.size()), cls);
    };

    for (std::size_t k = n; k >= 1; --k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (;;) {
            std::uint64_t subset = 0;
            for (auto i : idx)
                subset |= std::uint64_t{1} << i;
            PointSet sub = s.subset(subset);
            bool all = true;
            for (std::uint64_t local : canonical_mask_order(k)) {
                std::uint64_t global = 0;
                for (std::size_t j = 0; j < k; ++j)
                    if ((local >> j) & 1U)
                        global |= std::uint64_t{1} << idx[j];
                if (!carvable_in(sub, global, local)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                auto verdict = is_shattered(sub, cls, options);
                return LowerBoundReport{k, SubsetMask(subset, n), std::move(*verdict.certificate)};
            }
            // next k-combination in lexicographic order
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == n - k + (pos - 1))
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    // Only anchored classes get here: every point lies inside the anchor.
    PointSet none(s.dim(), {});
    return LowerBoundReport{0, SubsetMask(0, n), std::move(*is_shattered(none, cls, options).certificate)};
}

const Scalar &e_upper_bound()
{
    // sum_{k<=15} 1/k! plus 2/16!, which exceeds the tail sum_{k>=16} 1/k!.
    static const Scalar value = [] {
        Scalar sum(0);
        Scalar term(1);
        for (int k = 0; k <= 15; ++k) {
            if (k > 0)
                term /= Scalar(k);
            sum += term;
        }
        return sum + Scalar(2) * term / Scalar(16);
    }();
    return value;
}

Scalar sauer_shelah_bound(std::uint64_t v, std::uint64_t n)
{
    if (v < 1 || n < v)
        throw Error(ErrorCode::Domain, "sauer_shelah_bound requires n >= v >= 1");
    Scalar base = e_upper_bound() * Scalar(static_cast<std::int64_t>(n)) / Scalar(static_cast<std::int64_t>(v));
    Scalar out(1);
    for (std::uint64_t i = 0; i < v; ++i)
        out *= base;
    return out;
}

} // namespace vclab
