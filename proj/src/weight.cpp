#include "cspp/weight.hpp"

#include "cspp/errors.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cspp {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s)
{
    std::int64_t out = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || first == last)
        throw ParseError{"malformed integer '" + std::string{s} + "'"};
    return out;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument{"rational with zero denominator"};
    *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0)
        return Rational{Raw{}, 0, 1};
    const i128 g = gcd128(num, den);
    num /= g;
    den /= g;
    if (!fits64(num) || !fits64(den))
        throw ArithmeticOverflow{"rational arithmetic overflowed 64 bits"};
    return Rational{Raw{}, static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

double Rational::to_double() const
{
    return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (a.den_ == 1 && b.den_ == 1)
        return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, 1);
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0)
        throw std::domain_error{"rational division by zero"};
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (a.den_ == b.den_)
        return a.num_ <=> b.num_;
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less : lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal;
}

WeightValue WeightValue::real(double x)
{
    if (std::isnan(x))
        throw std::invalid_argument{"NaN is not a weight"};
    if (std::isinf(x))
        return x > 0 ? inf() : neg_inf();
    WeightValue v{Kind::Float};
    v.x_ = x;
    return v;
}

double WeightValue::to_double() const
{
    switch (kind_) {
    case Kind::Rational: return q_.to_double();
    case Kind::Float: return x_;
    case Kind::PlusInf: return HUGE_VAL;
    case Kind::MinusInf: return -HUGE_VAL;
    }
    return 0.0;
}

bool WeightValue::is_integral() const
{
    switch (kind_) {
    case Kind::Rational: return q_.is_integer();
    case Kind::Float: return std::floor(x_) == x_;
    default: return false;
    }
}

int WeightValue::sign() const
{
    switch (kind_) {
    case Kind::Rational: return q_.num() > 0 ? 1 : q_.num() < 0 ? -1 : 0;
    case Kind::Float: return x_ > 0 ? 1 : x_ < 0 ? -1 : 0;
    case Kind::PlusInf: return 1;
    case Kind::MinusInf: return -1;
    }
    return 0;
}

int WeightValue::numeric_cmp(const WeightValue& a, const WeightValue& b)
{
    auto rank = [](Kind k) { return k == Kind::MinusInf ? 0 : k == Kind::PlusInf ? 2 : 1; };
    const int ra = rank(a.kind_);
    const int rb = rank(b.kind_);
    if (ra != rb)
        return ra < rb ? -1 : 1;
    if (ra != 1)
        return 0;
    if (a.kind_ == Kind::Rational && b.kind_ == Kind::Rational) {
        const auto c = a.q_ <=> b.q_;
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    if (a.kind_ == Kind::Float && b.kind_ == Kind::Float)
        return a.x_ < b.x_ ? -1 : a.x_ > b.x_ ? 1 : 0;
    // Mixed: compare x * den against num in long double.
    const bool a_float = a.kind_ == Kind::Float;
    const double x = a_float ? a.x_ : b.x_;
    const Rational& q = a_float ? b.q_ : a.q_;
    const long double lhs = static_cast<long double>(x) * static_cast<long double>(q.den());
    const long double rhs = static_cast<long double>(q.num());
    const int c = lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
    return a_float ? c : -c;
}

WeightValue operator+(const WeightValue& a, const WeightValue& b)
{
    using K = WeightValue::Kind;
    if (!a.is_finite() || !b.is_finite()) {
        if ((a.is_plus_inf() && b.is_minus_inf()) || (a.is_minus_inf() && b.is_plus_inf()))
            throw std::domain_error{"inf + -inf is undefined"};
        return a.is_finite() ? b : a;
    }
    if (a.kind() == K::Rational && b.kind() == K::Rational)
        return WeightValue{a.rational() + b.rational()};
    return WeightValue::real(a.to_double() + b.to_double());
}

WeightValue operator*(const WeightValue& a, const WeightValue& b)
{
    using K = WeightValue::Kind;
    if (!a.is_finite() || !b.is_finite()) {
        const int sa = a.sign() < 0 ? -1 : 1;
        const int sb = b.sign() < 0 ? -1 : 1;
        return sa * sb > 0 ? WeightValue::inf() : WeightValue::neg_inf();
    }
    if (a.kind() == K::Rational && b.kind() == K::Rational)
        return WeightValue{a.rational() * b.rational()};
    return WeightValue::real(a.to_double() * b.to_double());
}

WeightValue operator-(const WeightValue& a)
{
    switch (a.kind()) {
    case WeightValue::Kind::Rational: return WeightValue{-a.rational()};
    case WeightValue::Kind::Float: return WeightValue::real(-a.float_value());
    case WeightValue::Kind::PlusInf: return WeightValue::neg_inf();
    case WeightValue::Kind::MinusInf: return WeightValue::inf();
    }
    return a;
}

WeightValue operator-(const WeightValue& a, const WeightValue& b) { return a + (-b); }

WeightValue operator/(const WeightValue& a, const WeightValue& b)
{
    if (!a.is_finite() || !b.is_finite())
        throw std::domain_error{"division involving infinity"};
    if (a.is_rational() && b.is_rational())
        return WeightValue{a.rational() / b.rational()};
    if (b.to_double() == 0.0)
        throw std::domain_error{"division by zero"};
    return WeightValue::real(a.to_double() / b.to_double());
}

std::string to_string(const WeightValue& v)
{
    switch (v.kind()) {
    case WeightValue::Kind::PlusInf: return "inf";
    case WeightValue::Kind::MinusInf: return "-inf";
    case WeightValue::Kind::Rational: {
        const auto& q = v.rational();
        if (q.is_integer())
            return std::to_string(q.num());
        return std::to_string(q.num()) + "/" + std::to_string(q.den());
    }
    case WeightValue::Kind::Float: {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v.float_value());
        (void)ec;
        return std::string{buf, ptr};
    }
    }
    return {};
}

WeightValue parse_weight(std::string_view text, NumericMode mode)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError{"empty weight literal"};
    if (text == "inf" || text == "+inf" || text == "infinity")
        return WeightValue::inf();
    if (text == "-inf" || text == "-infinity")
        return WeightValue::neg_inf();

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_int(text.substr(0, slash));
        const auto den = parse_int(text.substr(slash + 1));
        if (den == 0)
            throw ParseError{"zero denominator in '" + std::string{text} + "'"};
        return to_mode(WeightValue{Rational{num, den}}, mode);
    }

    const bool decimal = text.find_first_of(".eE") != std::string_view::npos;
    if (!decimal)
        return to_mode(WeightValue{Rational{parse_int(text), 1}}, mode);

    if (mode == NumericMode::Exact && text.find_first_of("eE") == std::string_view::npos) {
        // Plain decimal: read it as an exact fraction of a power of ten.
        const auto dot = text.find('.');
        std::string digits{text.substr(0, dot)};
        const std::string_view frac = text.substr(dot + 1);
        digits += frac;
        if (frac.size() > 18)
            throw ParseError{"too many decimal places for exact mode: '" + std::string{text} + "'"};
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
        if (digits == "-" || digits == "+" || digits.empty())
            throw ParseError{"malformed decimal '" + std::string{text} + "'"};
        return WeightValue{Rational{parse_int(digits), den}};
    }

    double x = 0.0;
    const auto* first = text.data();
    if (*first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), x);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError{"malformed number '" + std::string{text} + "'"};
    return to_mode(WeightValue::real(x), mode);
}

WeightValue to_mode(const WeightValue& v, NumericMode mode)
{
    if (!v.is_finite())
        return v;
    if (mode == NumericMode::Float)
        return v.is_float() ? v : WeightValue::real(v.to_double());
    if (v.is_rational())
        return v;
    // Exact mode: accept doubles that are exactly representable with a small
    // power-of-two denominator.
    double x = v.float_value();
    std::int64_t den = 1;
    for (int i = 0; i < 40 && std::floor(x) != x; ++i) {
        x *= 2.0;
        den *= 2;
    }
    if (std::floor(x) != x || std::fabs(x) > 9.0e18)
        throw CarrierViolation{"value " + to_string(v) + " has no exact rational form; write it as p/q"};
    return WeightValue{Rational{static_cast<std::int64_t>(x), den}};
}

} // namespace cspp
