#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cspp {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored reduced with a positive denominator. Arithmetic is carried
/// out in 128 bits and throws ArithmeticOverflow when the reduced result does
/// not fit back into 64 bits.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }
    [[nodiscard]] bool is_integer() const { return den_ == 1; }
    [[nodiscard]] double to_double() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational{-a.num_, a.den_}; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    struct Raw {};
    Rational(Raw, std::int64_t num, std::int64_t den) : num_{num}, den_{den} {}
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

enum class NumericMode : std::uint8_t { Exact, Float };

/// A weight: a finite rational, a finite double, or one of the two infinities.
///
/// Comparison and equality are numeric, so 1/2 and 0.5 are equal. Which
/// representation a value uses is decided by the numeric mode of the domain
/// it lives in (see WeightDomain::coerce).
class WeightValue {
public:
    enum class Kind : std::uint8_t { Rational, Float, PlusInf, MinusInf };

    constexpr WeightValue() = default;
    WeightValue(const Rational& q) : kind_{Kind::Rational}, q_{q} {}

    static WeightValue exact(std::int64_t num, std::int64_t den = 1) { return WeightValue{Rational{num, den}}; }
    static WeightValue real(double x);
    static WeightValue inf() { return WeightValue{Kind::PlusInf}; }
    static WeightValue neg_inf() { return WeightValue{Kind::MinusInf}; }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_finite() const { return kind_ == Kind::Rational || kind_ == Kind::Float; }
    [[nodiscard]] bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
    [[nodiscard]] bool is_minus_inf() const { return kind_ == Kind::MinusInf; }
    [[nodiscard]] bool is_rational() const { return kind_ == Kind::Rational; }
    [[nodiscard]] bool is_float() const { return kind_ == Kind::Float; }
    [[nodiscard]] const Rational& rational() const { return q_; }
    [[nodiscard]] double float_value() const { return x_; }
    /// Numeric value as a double; infinities map to +-HUGE_VAL.
    [[nodiscard]] double to_double() const;
    [[nodiscard]] bool is_integral() const;
    [[nodiscard]] int sign() const;

    friend bool operator==(const WeightValue& a, const WeightValue& b) { return numeric_cmp(a, b) == 0; }
    friend std::strong_ordering operator<=>(const WeightValue& a, const WeightValue& b)
    {
        const int c = numeric_cmp(a, b);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// -1, 0 or 1 according to the usual numeric order on [-inf, inf].
    static int numeric_cmp(const WeightValue& a, const WeightValue& b);

private:
    explicit WeightValue(Kind k) : kind_{k} {}

    Kind kind_ = Kind::Rational;
    Rational q_{};
    double x_ = 0.0;
};

// Numeric arithmetic on extended values. Mixing a rational with a float gives
// a float. Infinity absorbs: x + inf = inf, and any nonnegative factor times
// inf is inf (0 * inf = inf keeps rate-style modalities top-preserving).
// inf + (-inf) throws std::domain_error.
WeightValue operator+(const WeightValue& a, const WeightValue& b);
WeightValue operator*(const WeightValue& a, const WeightValue& b);
WeightValue operator-(const WeightValue& a);
WeightValue operator-(const WeightValue& a, const WeightValue& b);
WeightValue operator/(const WeightValue& a, const WeightValue& b);

inline const WeightValue& numeric_min(const WeightValue& a, const WeightValue& b) { return b < a ? b : a; }
inline const WeightValue& numeric_max(const WeightValue& a, const WeightValue& b) { return a < b ? b : a; }

/// Textual form used by trace tables and graph files: "inf", "-inf", an
/// integer, "p/q", or a shortest round-trip decimal for floats.
std::string to_string(const WeightValue& v);

/// Parses the textual form. Decimal literals such as "0.25" become exact
/// rationals in exact mode and doubles in float mode.
WeightValue parse_weight(std::string_view text, NumericMode mode);

/// Converts to the representation used by `mode` (float to rational only when
/// the double is a dyadic fraction that fits).
WeightValue to_mode(const WeightValue& v, NumericMode mode);

} // namespace cspp
