#include "vclab/scalar.hpp"
#include "vclab/error.hpp"

namespace vclab {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::EmptySet: return "EMPTY_SET";
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorCode::DuplicatePoint: return "DUPLICATE_POINT";
        case ErrorCode::DuplicateAfterProjection: return "DUPLICATE_AFTER_PROJECTION";
        case ErrorCode::AnchorMissing: return "ANCHOR_MISSING";
        case ErrorCode::UnboundedAnchor: return "UNBOUNDED_ANCHOR";
        case ErrorCode::NotContainingAnchor: return "NOT_CONTAINING_ANCHOR";
        case ErrorCode::NotContainingZero: return "NOT_CONTAINING_ZERO";
        case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
        case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
        case ErrorCode::NotShattered: return "NOT_SHATTERED";
        case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
        case ErrorCode::Domain: return "DOMAIN";
        case ErrorCode::Parse: return "PARSE";
        case ErrorCode::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

Scalar::Scalar(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw Error(ErrorCode::Domain, "zero denominator");
    v_ = den < 0 ? Rep(-Integer(num), -Integer(den)) : Rep(num, den);
}

Scalar::Scalar(const Integer &num, const Integer &den)
{
    if (den == 0)
        throw Error(ErrorCode::Domain, "zero denominator");
    v_ = den < 0 ? Rep(-num, -den) : Rep(num, den);
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

Scalar::Integer parse_integer(std::string_view s)
{
    if (!is_integer_literal(s))
        throw Error(ErrorCode::Parse, "malformed integer '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return Scalar::Integer(std::string(s));
}

} // namespace

Scalar Scalar::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Scalar(parse_integer(text), Integer(1));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw Error(ErrorCode::Parse, "denominator must be unsigned in '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0)
        throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return Scalar(parse_integer(text.substr(0, slash)), den);
}

std::string Scalar::to_string() const
{
    if (is_integer())
        return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

Scalar &Scalar::operator/=(const Scalar &o)
{
    if (o.sign() == 0)
        throw Error(ErrorCode::Domain, "division by zero");
    v_ /= o.v_;
    return *this;
}

Scalar abs(const Scalar &x) { return x.sign() < 0 ? -x : x; }

Scalar midpoint(const Scalar &a, const Scalar &b) { return (a + b) / Scalar(2); }

const Scalar &ExtendedScalar::value() const
{
    if (!is_finite())
        throw Error(ErrorCode::Domain, "value() on infinite endpoint");
    return value_;
}

std::string ExtendedScalar::to_string() const
{
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        case Kind::Finite: break;
    }
    return value_.to_string();
}

ExtendedScalar ExtendedScalar::parse(std::string_view text)
{
    if (text == "-inf")
        return neg_inf();
    if (text == "inf" || text == "+inf")
        return pos_inf();
    return ExtendedScalar(Scalar::parse(text));
}

bool operator==(const ExtendedScalar &a, const ExtendedScalar &b)
{
    if (a.kind_ != b.kind_)
        return false;
    return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedScalar &a, const ExtendedScalar &b)
{
    if (a.kind_ != b.kind_)
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (!a.is_finite())
        return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
}

} // namespace vclab
