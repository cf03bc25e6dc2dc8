#include "cspp/domain.hpp"

#include "cspp/errors.hpp"

#include <cmath>
#include <utility>

namespace cspp {

WeightDomain::WeightDomain(std::string id, Carrier carrier, Direction dir, WeightValue top, WeightValue bottom,
                           WeightValue xi)
    : id_{std::move(id)}, carrier_{carrier}, dir_{dir}, top_{top}, bottom_{bottom}, xi_{xi}
{
}

WeightDomain WeightDomain::zero_inf()
{
    return {"{0,inf}", Carrier::ZeroInf, Direction::Ascending, WeightValue::inf(), WeightValue::exact(0),
            WeightValue::exact(0)};
}

WeightDomain WeightDomain::nat_inf_ascending()
{
    return {"N-inf-asc", Carrier::NatInf, Direction::Ascending, WeightValue::inf(), WeightValue::exact(0),
            WeightValue::exact(0)};
}

WeightDomain WeightDomain::nat_inf_descending()
{
    return {"N-inf-desc", Carrier::NatInf, Direction::Descending, WeightValue::exact(0), WeightValue::inf(),
            WeightValue::exact(0)};
}

WeightDomain WeightDomain::real_signed()
{
    return {"R-pm-inf", Carrier::RealSigned, Direction::Ascending, WeightValue::inf(), WeightValue::neg_inf(),
            WeightValue::exact(0)};
}

WeightDomain WeightDomain::real_nonneg_ascending(WeightValue xi)
{
    WeightDomain d{"R-nonneg-asc", Carrier::RealNonneg, Direction::Ascending, WeightValue::inf(),
                   WeightValue::exact(0), xi};
    if (xi.is_float())
        d.mode_ = NumericMode::Float;
    d.require(xi);
    return d;
}

WeightDomain WeightDomain::real_nonneg_descending()
{
    return {"R-nonneg-desc", Carrier::RealNonneg, Direction::Descending, WeightValue::exact(0), WeightValue::inf(),
            WeightValue::inf()};
}

WeightDomain WeightDomain::unit_descending()
{
    return {"unit-desc", Carrier::Unit, Direction::Descending, WeightValue::exact(0), WeightValue::exact(1),
            WeightValue::exact(1)};
}

WeightDomain WeightDomain::with_mode(NumericMode mode) const
{
    WeightDomain d = *this;
    d.mode_ = mode;
    d.top_ = to_mode(top_, mode);
    d.bottom_ = to_mode(bottom_, mode);
    d.xi_ = to_mode(xi_, mode);
    return d;
}

bool WeightDomain::contains(const WeightValue& v) const
{
    switch (carrier_) {
    case Carrier::ZeroInf: return v.is_plus_inf() || (v.is_finite() && v.sign() == 0);
    case Carrier::NatInf: return v.is_plus_inf() || (v.is_finite() && v.sign() >= 0 && v.is_integral());
    case Carrier::RealSigned: return true;
    case Carrier::RealNonneg: return v.is_plus_inf() || (v.is_finite() && v.sign() >= 0);
    case Carrier::Unit: return v.is_finite() && v.sign() >= 0 && v <= WeightValue::exact(1);
    }
    return false;
}

const WeightValue& WeightDomain::require(const WeightValue& v) const
{
    if (!contains(v))
        throw CarrierViolation{"value " + to_string(v) + " is outside the carrier of " + id_};
    return v;
}

WeightValue WeightDomain::coerce(const WeightValue& v) const
{
    WeightValue out = to_mode(v, mode_);
    require(out);
    return out;
}

WeightValue WeightDomain::parse(std::string_view text) const { return coerce(parse_weight(text, mode_)); }

Ordering WeightDomain::compare(const WeightValue& a, const WeightValue& b) const
{
    require(a);
    require(b);
    const int c = cmp(a, b);
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

WeightValue WeightDomain::meet(std::span<const WeightValue> values) const
{
    WeightValue out = top_;
    for (const auto& v : values)
        out = meet(out, require(v));
    return out;
}

WeightValue WeightDomain::join(std::span<const WeightValue> values) const
{
    WeightValue out = bottom_;
    for (const auto& v : values)
        out = join(out, require(v));
    return out;
}

double WeightDomain::distance(const WeightValue& a, const WeightValue& b)
{
    if (a == b)
        return 0.0;
    if (!a.is_finite() || !b.is_finite())
        return HUGE_VAL;
    return std::fabs(a.to_double() - b.to_double());
}

} // namespace cspp
