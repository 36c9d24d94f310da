#ifndef VCLAB_SCALAR_HPP
#define VCLAB_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace vclab {

/**
 * Exact rational number, always in lowest terms with a positive denominator.
 * Small values are stored inline.
 */
class Scalar {
public:
    using Rep = boost::multiprecision::cpp_rational;
    using Integer = boost::multiprecision::cpp_int;

    Scalar() = default;
    Scalar(std::int64_t value) : v_(value) {} // NOLINT(google-explicit-constructor)
    Scalar(int value) : v_(value) {}          // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t num, std::int64_t den);
    Scalar(const Integer &num, const Integer &den);
    explicit Scalar(Rep value) : v_(std::move(value)) {}

    /// Parses "7", "-3", "3/4" or "-10/6" (normalised on construction).
    static Scalar parse(std::string_view text);

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;
    double to_double() const { return v_.convert_to<double>(); }

    const Rep &rep() const { return v_; }

    Scalar operator-() const { return Scalar(Rep(-v_)); }
    Scalar &operator+=(const Scalar &o) { v_ += o.v_; return *this; }
    Scalar &operator-=(const Scalar &o) { v_ -= o.v_; return *this; }
    Scalar &operator*=(const Scalar &o) { v_ *= o.v_; return *this; }
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    friend bool operator==(const Scalar &a, const Scalar &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b)
    {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    Rep v_;
};

Scalar abs(const Scalar &x);
Scalar midpoint(const Scalar &a, const Scalar &b);

/// Scalar extended with -inf and +inf; NEG_INF < every Scalar < POS_INF.
class ExtendedScalar {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    ExtendedScalar(Scalar value) : kind_(Kind::Finite), value_(std::move(value)) {} // NOLINT
    ExtendedScalar(int value) : ExtendedScalar(Scalar(value)) {}                      // NOLINT

    static ExtendedScalar neg_inf() { return ExtendedScalar(Kind::NegInf); }
    static ExtendedScalar pos_inf() { return ExtendedScalar(Kind::PosInf); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

    /// Precondition: is_finite().
    const Scalar &value() const;

    /// "-inf", "inf" or the scalar's text.
    std::string to_string() const;
    static ExtendedScalar parse(std::string_view text);

    friend bool operator==(const ExtendedScalar &a, const ExtendedScalar &b);
    friend std::strong_ordering operator<=>(const ExtendedScalar &a, const ExtendedScalar &b);

private:
    explicit ExtendedScalar(Kind k) : kind_(k) {}

    Kind kind_;
    Scalar value_;
};

} // namespace vclab

#endif
