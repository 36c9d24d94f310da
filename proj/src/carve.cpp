#include "vclab/carve.hpp"
#include "vclab/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace vclab {

std::string_view to_string(ClassKind kind) noexcept
{
    switch (kind) {
        case ClassKind::Boxes: return "BOXES";
        case ClassKind::BoxesNondegenerate: return "BOXES_NONDEGENERATE";
        case ClassKind::Cubes: return "CUBES";
        case ClassKind::DegenerateBalls: return "DEGENERATE_BALLS";
        case ClassKind::AnchoredDegenerateBalls: return "ANCHORED_DEGENERATE_BALLS";
        case ClassKind::AxisCuts: return "AXIS_CUTS";
    }
    return "UNKNOWN";
}

ClassKind parse_class_kind(std::string_view text)
{
    std::string t;
    for (char c : text)
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)) == '-' ? '_' : std::tolower(static_cast<unsigned char>(c)));
    if (t == "boxes")
        return ClassKind::Boxes;
    if (t == "boxes_nondegenerate" || t == "boxes_nd")
        return ClassKind::BoxesNondegenerate;
    if (t == "cubes")
        return ClassKind::Cubes;
    if (t == "degenerate_balls" || t == "degenerate")
        return ClassKind::DegenerateBalls;
    if (t == "anchored_degenerate_balls" || t == "anchored" || t == "d0")
        return ClassKind::AnchoredDegenerateBalls;
    if (t == "axis_cuts" || t == "cuts")
        return ClassKind::AxisCuts;
    throw Error(ErrorCode::InvalidArgument, "unknown class '" + std::string(text) + "'");
}

ClassDescriptor ClassDescriptor::anchored(Box anchor)
{
    std::size_t dim = anchor.dim();
    ClassDescriptor cls{ClassKind::AnchoredDegenerateBalls, dim, std::move(anchor)};
    cls.validate();
    return cls;
}

ClassDescriptor ClassDescriptor::origin_anchored(std::size_t dim)
{
    return anchored(Box(std::vector<Interval>(dim, Interval::point(Scalar(0)))));
}

void ClassDescriptor::validate() const
{
    if (dim == 0)
        throw Error(ErrorCode::InvalidArgument, "class dimension must be >= 1");
    if (kind == ClassKind::AnchoredDegenerateBalls) {
        if (!anchor)
            throw Error(ErrorCode::AnchorMissing, "anchored class requires an anchor box");
        if (anchor->dim() != dim)
            throw Error(ErrorCode::DimensionMismatch, "anchor dimension differs from class dimension");
        if (!anchor->is_bounded())
            throw Error(ErrorCode::UnboundedAnchor, "anchor box must be bounded");
    }
}

bool ClassDescriptor::is_ordinal() const noexcept
{
    return kind != ClassKind::Cubes || dim == 1;
}

std::string ClassDescriptor::to_string() const
{
    std::string out = std::string(vclab::to_string(kind)) + "(d=" + std::to_string(dim);
    if (anchor)
        out += ", anchor " + anchor->to_string();
    return out + ")";
}

SubsetMask::SubsetMask(std::uint64_t bits, std::size_t width) : bits_(bits), width_(width)
{
    if (width > max_width)
        throw Error(ErrorCode::CapExceeded, "subset masks support at most 64 points");
    if ((bits & ~full_bits(width)) != 0)
        throw Error(ErrorCode::InvalidArgument, "mask has bits beyond its width");
}

std::size_t SubsetMask::count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::string SubsetMask::to_bit_string() const
{
    std::string out(width_, '0');
    for (std::size_t i = 0; i < width_; ++i)
        if (test(i))
            out[i] = '1';
    return out;
}

SubsetMask SubsetMask::from_bit_string(std::string_view bits)
{
    if (bits.size() > max_width)
        throw Error(ErrorCode::CapExceeded, "subset masks support at most 64 points");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            value |= std::uint64_t{1} << i;
        else if (bits[i] != '0')
            throw Error(ErrorCode::Parse, "mask bit string may contain only 0 and 1");
    }
    return SubsetMask(value, bits.size());
}

bool contains(const Concept &region, const Point &x)
{
    return std::visit([&](const auto &r) { return r.contains(x); }, region);
}

bool is_member_of(const Concept &region, const ClassDescriptor &cls)
{
    switch (cls.kind) {
        case ClassKind::Boxes: {
            auto *b = std::get_if<Box>(&region);
            return b && b->dim() == cls.dim;
        }
        case ClassKind::BoxesNondegenerate: {
            auto *b = std::get_if<Box>(&region);
            return b && b->dim() == cls.dim && b->is_nondegenerate();
        }
        case ClassKind::Cubes: {
            auto *c = std::get_if<Cube>(&region);
            return c && c->dim() == cls.dim;
        }
        case ClassKind::DegenerateBalls: {
            auto *b = std::get_if<Box>(&region);
            return b && b->dim() == cls.dim && b->is_degenerate_ball();
        }
        case ClassKind::AnchoredDegenerateBalls: {
            auto *b = std::get_if<Box>(&region);
            return b && cls.anchor && b->dim() == cls.dim && b->is_degenerate_ball() && b->contains(*cls.anchor);
        }
        case ClassKind::AxisCuts: {
            auto *c = std::get_if<AxisCut>(&region);
            return c && c->axis < cls.dim;
        }
    }
    return false;
}

std::string to_string(const Concept &region)
{
    struct Printer {
        std::string operator()(const Box &b) const { return b.to_string(); }
        std::string operator()(const Cube &c) const { return c.to_string(); }
        std::string operator()(const AxisCut &c) const
        {
            return "{x : x" + std::to_string(c.axis) + " <= " + c.threshold.to_string() + "}";
        }
    };
    return std::visit(Printer{}, region);
}

bool validates(const CarveWitness &witness, const PointSet &s, const SubsetMask &mask)
{
    if (!is_member_of(witness.region, witness.cls) || mask.width() != s.size())
        return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (contains(witness.region, s[i]) != mask.test(i))
            return false;
    return true;
}

namespace {

void check_query(const PointSet &s, const SubsetMask &mask)
{
    if (mask.width() != s.size())
        throw Error(ErrorCode::InvalidArgument,
                    "mask width " + std::to_string(mask.width()) + " differs from set size " + std::to_string(s.size()));
}

/// Per-axis min/max over the masked points. Precondition: mask nonempty.
struct Hull {
    std::vector<const Scalar *> lo, hi;
};

Hull hull_of(const PointSet &s, const SubsetMask &mask)
{
    Hull h{std::vector<const Scalar *>(s.dim(), nullptr), std::vector<const Scalar *>(s.dim(), nullptr)};
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!mask.test(k))
            continue;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            const Scalar &x = s[k][i];
            if (!h.lo[i] || x < *h.lo[i])
                h.lo[i] = &x;
            if (!h.hi[i] || x > *h.hi[i])
                h.hi[i] = &x;
        }
    }
    return h;
}

const Scalar &axis_min(const PointSet &s, std::size_t axis)
{
    const Scalar *m = &s[0][axis];
    for (const auto &p : s)
        if (p[axis] < *m)
            m = &p[axis];
    return *m;
}

/// A box strictly below every point on axis 0; unconstrained elsewhere.
Box box_missing_all(const PointSet &s, bool bounded_side)
{
    std::vector<Interval> ivs(s.dim(), Interval::real_line());
    if (!s.empty()) {
        Scalar m = axis_min(s, 0);
        ivs[0] = bounded_side ? Interval(m - Scalar(2), m - Scalar(1)) : Interval(ExtendedScalar::neg_inf(), m - Scalar(1));
    }
    return Box(std::move(ivs));
}

bool decide_box(const PointSet &s, const SubsetMask &mask, bool nondegenerate, Concept *out)
{
    if (mask.empty()) {
        if (out)
            *out = box_missing_all(s, true);
        return true;
    }
    const Hull h = hull_of(s, mask);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (mask.test(k))
            continue;
        bool inside = true;
        for (std::size_t i = 0; i < s.dim() && inside; ++i)
            inside = *h.lo[i] <= s[k][i] && s[k][i] <= *h.hi[i];
        if (inside)
            return false;
    }
    if (!out)
        return true;

    // Inflate point intervals by half the least exclusion slack so excluded points stay out.
    Scalar margin(1);
    if (nondegenerate) {
        bool first = true;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (mask.test(k))
                continue;
            Scalar slack(0);
            for (std::size_t i = 0; i < s.dim(); ++i) {
                const Scalar &x = s[k][i];
                if (x < *h.lo[i])
                    slack = std::max(slack, *h.lo[i] - x);
                else if (x > *h.hi[i])
                    slack = std::max(slack, x - *h.hi[i]);
            }
            if (first || slack < margin)
                margin = slack;
            first = false;
        }
        margin /= Scalar(2);
    }
    std::vector<Interval> ivs;
    ivs.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (nondegenerate && *h.lo[i] == *h.hi[i])
            ivs.emplace_back(*h.lo[i] - margin, *h.hi[i] + margin);
        else
            ivs.emplace_back(*h.lo[i], *h.hi[i]);
    }
    *out = Box(std::move(ivs));
    return true;
}

enum class Side : std::uint8_t { Free, Low, High };

/// Depth-first cover search: each axis closes at most one side, every excluded point must be cut off.
class DegenerateCover {
public:
    DegenerateCover(std::vector<std::uint64_t> low, std::vector<std::uint64_t> high, std::size_t dim)
        : low_(std::move(low)), high_(std::move(high)), sides_(dim, Side::Free)
    {
    }

    bool solve() { return search(); }
    const std::vector<Side> &sides() const { return sides_; }

private:
    bool search()
    {
        std::uint64_t low_closed = 0, high_closed = 0, free = 0;
        for (std::size_t i = 0; i < sides_.size(); ++i) {
            std::uint64_t bit = std::uint64_t{1} << i;
            if (sides_[i] == Side::Low)
                low_closed |= bit;
            else if (sides_[i] == Side::High)
                high_closed |= bit;
            else
                free |= bit;
        }
        std::size_t pick = low_.size();
        int best = 65;
        for (std::size_t k = 0; k < low_.size(); ++k) {
            if ((low_[k] & low_closed) || (high_[k] & high_closed))
                continue;
            int options = std::popcount(low_[k] & free) + std::popcount(high_[k] & free);
            if (options == 0)
                return false;
            if (options < best) {
                best = options;
                pick = k;
            }
        }
        if (pick == low_.size())
            return true;
        for (std::size_t i = 0; i < sides_.size(); ++i) {
            std::uint64_t bit = std::uint64_t{1} << i;
            if (!(free & bit))
                continue;
            for (Side side : {Side::Low, Side::High}) {
                if (!((side == Side::Low ? low_[pick] : high_[pick]) & bit))
                    continue;
                sides_[i] = side;
                if (search())
                    return true;
                sides_[i] = Side::Free;
            }
        }
        return false;
    }

    std::vector<std::uint64_t> low_, high_;
    std::vector<Side> sides_;
};

bool decide_degenerate(const PointSet &s, const SubsetMask &mask, const std::optional<Box> &anchor, Concept *out)
{
    if (!anchor) {
        if (mask.empty()) {
            if (out)
                *out = box_missing_all(s, false);
            return true;
        }
        if (mask.full()) {
            if (out)
                *out = Box::whole_space(s.dim());
            return true;
        }
    }

    const std::size_t d = s.dim();
    if (d > 64)
        throw Error(ErrorCode::CapExceeded, "degenerate-ball decider supports at most 64 axes");
    std::vector<const Scalar *> lo(d, nullptr), hi(d, nullptr);
    if (anchor) {
        for (std::size_t i = 0; i < d; ++i) {
            lo[i] = &(*anchor)[i].lo().value();
            hi[i] = &(*anchor)[i].hi().value();
        }
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!mask.test(k))
            continue;
        for (std::size_t i = 0; i < d; ++i) {
            const Scalar &x = s[k][i];
            if (!lo[i] || x < *lo[i])
                lo[i] = &x;
            if (!hi[i] || x > *hi[i])
                hi[i] = &x;
        }
    }
    if (s.empty()) {
        if (out)
            *out = Box::whole_space(d);
        return true;
    }

    std::vector<std::uint64_t> low, high;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (mask.test(k))
            continue;
        std::uint64_t l = 0, h = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const Scalar &x = s[k][i];
            // lo[i] is null only for an unanchored query with an empty mask, handled above.
            if (x < *lo[i])
                l |= std::uint64_t{1} << i;
            else if (x > *hi[i])
                h |= std::uint64_t{1} << i;
        }
        if (!l && !h)
            return false;
        low.push_back(l);
        high.push_back(h);
    }
    DegenerateCover cover(std::move(low), std::move(high), d);
    if (!cover.solve())
        return false;
    if (out) {
        std::vector<Interval> ivs;
        ivs.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            switch (cover.sides()[i]) {
                case Side::Free: ivs.push_back(Interval::real_line()); break;
                case Side::Low: ivs.emplace_back(*lo[i], ExtendedScalar::pos_inf()); break;
                case Side::High: ivs.emplace_back(ExtendedScalar::neg_inf(), *hi[i]); break;
            }
        }
        *out = Box(std::move(ivs));
    }
    return true;
}

struct CubeOption {
    std::size_t axis;
    bool high;
};

/**
 * Assignment search for cubes.
 *
 * Each excluded point q is assigned to an (axis, side) that cuts it off. Side
 * high on axis i needs q_i > max_i(S') and side low needs q_i < min_i(S');
 * both are r-free. A high point q and a low point q' on the same axis force
 * 2r < q_i - q'_i, while containment forces 2r >= W = max_i width_i(S').
 * Only the tightest high and low value per axis matter, so the assignment is
 * feasible iff hmin_i - lmax_i > W on every axis carrying both.
 */
class CubeAssignment {
public:
    CubeAssignment(const PointSet &s, const SubsetMask &mask, const Hull &hull, Scalar width)
        : s_(s), hull_(hull), width_(std::move(width)), hmin_(s.dim(), nullptr), lmax_(s.dim(), nullptr)
    {
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (mask.test(k))
                continue;
            std::vector<CubeOption> opts;
            for (std::size_t i = 0; i < s.dim(); ++i) {
                if (s[k][i] > *hull.hi[i])
                    opts.push_back({i, true});
                else if (s[k][i] < *hull.lo[i])
                    opts.push_back({i, false});
            }
            points_.push_back(k);
            options_.push_back(std::move(opts));
        }
        std::vector<std::size_t> order(points_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return options_[a].size() < options_[b].size(); });
        std::vector<std::size_t> p;
        std::vector<std::vector<CubeOption>> o;
        for (auto idx : order) {
            p.push_back(points_[idx]);
            o.push_back(std::move(options_[idx]));
        }
        points_ = std::move(p);
        options_ = std::move(o);
    }

    bool solve()
    {
        for (const auto &opts : options_)
            if (opts.empty())
                return false;
        return search(0);
    }

    Cube witness() const
    {
        const std::size_t d = s_.dim();
        Scalar r0 = width_ / Scalar(2);
        std::optional<Scalar> bound;
        for (std::size_t i = 0; i < d; ++i) {
            if (hmin_[i] && lmax_[i]) {
                Scalar b = (*hmin_[i] - *lmax_[i]) / Scalar(2);
                if (!bound || b < *bound)
                    bound = b;
            }
        }
        Scalar r = bound ? midpoint(r0, *bound) : r0;
        std::vector<Scalar> center;
        center.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            Scalar lower = *hull_.hi[i] - r;
            if (lmax_[i])
                lower = std::max(lower, *lmax_[i] + r);
            Scalar upper = *hull_.lo[i] + r;
            if (hmin_[i])
                upper = std::min(upper, *hmin_[i] - r);
            center.push_back(midpoint(lower, upper));
        }
        return Cube(Point(std::move(center)), std::move(r));
    }

private:
    bool excluded_already(const Point &q) const
    {
        for (std::size_t i = 0; i < s_.dim(); ++i) {
            if (hmin_[i] && q[i] >= *hmin_[i])
                return true;
            if (lmax_[i] && q[i] <= *lmax_[i])
                return true;
        }
        return false;
    }

    bool search(std::size_t depth)
    {
        if (depth == points_.size())
            return true;
        const Point &q = s_[points_[depth]];
        if (excluded_already(q))
            return search(depth + 1);
        for (const auto &opt : options_[depth]) {
            const Scalar *&slot = opt.high ? hmin_[opt.axis] : lmax_[opt.axis];
            const Scalar *saved = slot;
            slot = &q[opt.axis];
            const Scalar *h = hmin_[opt.axis], *l = lmax_[opt.axis];
            if ((!h || !l || *h - *l > width_) && search(depth + 1))
                return true;
            slot = saved;
        }
        return false;
    }

    const PointSet &s_;
    const Hull &hull_;
    Scalar width_;
    std::vector<std::size_t> points_;
    std::vector<std::vector<CubeOption>> options_;
    std::vector<const Scalar *> hmin_, lmax_;
};

bool decide_cube(const PointSet &s, const SubsetMask &mask, Concept *out)
{
    const std::size_t d = s.dim();
    if (mask.empty()) {
        if (out) {
            std::vector<Scalar> c(d, Scalar(0));
            if (!s.empty()) {
                c = std::vector<Scalar>(s[0].coords().begin(), s[0].coords().end());
                c[0] = axis_min(s, 0) - Scalar(1);
            }
            *out = Cube(Point(std::move(c)), Scalar(1, 2));
        }
        return true;
    }
    const Hull hull = hull_of(s, mask);
    Scalar width(0);
    for (std::size_t i = 0; i < d; ++i)
        width = std::max(width, *hull.hi[i] - *hull.lo[i]);

    CubeAssignment assignment(s, mask, hull, width);
    if (!assignment.solve())
        return false;
    if (out)
        *out = assignment.witness();
    return true;
}

bool decide_axis_cut(const PointSet &s, const SubsetMask &mask, Concept *out)
{
    if (mask.empty()) {
        if (out)
            *out = AxisCut{0, s.empty() ? Scalar(0) : axis_min(s, 0) - Scalar(1)};
        return true;
    }
    if (mask.full()) {
        if (out) {
            const Hull h = hull_of(s, mask);
            *out = AxisCut{0, *h.hi[0]};
        }
        return true;
    }
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Scalar *max_in = nullptr, *min_out = nullptr;
        for (std::size_t k = 0; k < s.size(); ++k) {
            const Scalar &x = s[k][i];
            if (mask.test(k)) {
                if (!max_in || x > *max_in)
                    max_in = &x;
            } else if (!min_out || x < *min_out) {
                min_out = &x;
            }
        }
        if (*max_in < *min_out) {
            if (out)
                *out = AxisCut{i, midpoint(*max_in, *min_out)};
            return true;
        }
    }
    return false;
}

std::optional<CarveWitness> finish(bool feasible, Concept region, const ClassDescriptor &cls, const PointSet &s,
                                   const SubsetMask &mask)
{
    if (!feasible)
        return std::nullopt;
    CarveWitness w{std::move(region), cls};
    if (!validates(w, s, mask))
        throw Error(ErrorCode::Internal, "carve produced an invalid witness " + to_string(w.region) + " for mask " +
                                             mask.to_bit_string() + " under " + cls.to_string());
    return w;
}

bool decide(const PointSet &s, const SubsetMask &mask, const ClassDescriptor &cls, Concept *out)
{
    switch (cls.kind) {
        case ClassKind::Boxes: return decide_box(s, mask, false, out);
        case ClassKind::BoxesNondegenerate: return decide_box(s, mask, true, out);
        case ClassKind::Cubes: return decide_cube(s, mask, out);
        case ClassKind::DegenerateBalls: return decide_degenerate(s, mask, std::nullopt, out);
        case ClassKind::AnchoredDegenerateBalls: return decide_degenerate(s, mask, cls.anchor, out);
        case ClassKind::AxisCuts: return decide_axis_cut(s, mask, out);
    }
    throw Error(ErrorCode::Internal, "unhandled class kind");
}

void check_dispatch(const PointSet &s, const SubsetMask &mask, const ClassDescriptor &cls)
{
    cls.validate();
    if (cls.dim != s.dim())
        throw Error(ErrorCode::DimensionMismatch, "class dimension differs from point set dimension");
    check_query(s, mask);
}

} // namespace

std::optional<CarveWitness> carve_box(const PointSet &s, const SubsetMask &mask, bool nondegenerate)
{
    auto cls = ClassDescriptor::of(nondegenerate ? ClassKind::BoxesNondegenerate : ClassKind::Boxes, s.dim());
    return carve(s, mask, cls);
}

std::optional<CarveWitness> carve_degenerate(const PointSet &s, const SubsetMask &mask, const std::optional<Box> &anchor)
{
    if (anchor)
        return carve(s, mask, ClassDescriptor::anchored(*anchor));
    return carve(s, mask, ClassDescriptor::of(ClassKind::DegenerateBalls, s.dim()));
}

std::optional<CarveWitness> carve_cube(const PointSet &s, const SubsetMask &mask)
{
    return carve(s, mask, ClassDescriptor::of(ClassKind::Cubes, s.dim()));
}

std::optional<CarveWitness> carve_axis_cut(const PointSet &s, const SubsetMask &mask)
{
    return carve(s, mask, ClassDescriptor::of(ClassKind::AxisCuts, s.dim()));
}

std::optional<CarveWitness> carve(const PointSet &s, const SubsetMask &mask, const ClassDescriptor &cls)
{
    check_dispatch(s, mask, cls);
    Concept region = Box::whole_space(s.dim());
    bool feasible = decide(s, mask, cls, &region);
    return finish(feasible, std::move(region), cls, s, mask);
}

bool carvable(const PointSet &s, const SubsetMask &mask, const ClassDescriptor &cls)
{
    check_dispatch(s, mask, cls);
    return decide(s, mask, cls, nullptr);
}

} // namespace vclab
