#include "cspp/domain.hpp"
#include "cspp/errors.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace cspp;

namespace {

WeightValue q(std::int64_t n, std::int64_t d = 1) { return WeightValue::exact(n, d); }

std::vector<WeightDomain> all_domains()
{
    return {WeightDomain::zero_inf(),          WeightDomain::nat_inf_ascending(),      WeightDomain::nat_inf_descending(),
            WeightDomain::real_signed(),       WeightDomain::real_nonneg_ascending(), WeightDomain::real_nonneg_descending(),
            WeightDomain::unit_descending()};
}

// A few carrier members per domain.
std::vector<WeightValue> members(const WeightDomain& d)
{
    std::vector<WeightValue> pool{q(0), q(1), q(2), q(5), q(1, 2), q(1, 3), q(-3), q(-1, 2), WeightValue::inf(),
                                  WeightValue::neg_inf()};
    std::vector<WeightValue> out;
    for (const auto& v : pool)
        if (d.contains(v))
            out.push_back(v);
    return out;
}

} // namespace

TEST_SUITE("domain")
{
    TEST_CASE("rationals stay reduced with a positive denominator")
    {
        const Rational r{6, -4};
        CHECK(r.num() == -3);
        CHECK(r.den() == 2);
        CHECK(Rational{0, 7}.den() == 1);
        CHECK((Rational{1, 3} + Rational{1, 6}) == Rational{1, 2});
        CHECK(to_string(q(-6, 4)) == "-3/2");
        CHECK(to_string(WeightValue::inf()) == "inf");
        CHECK(to_string(WeightValue::neg_inf()) == "-inf");
        CHECK(to_string(WeightValue::real(0.1)) == "0.1");
    }

    TEST_CASE("overflow and undefined arithmetic are errors")
    {
        const auto big = q(std::int64_t{1} << 62);
        CHECK_THROWS_AS((void)(big * big), ArithmeticOverflow);
        CHECK_THROWS((void)(WeightValue::inf() + WeightValue::neg_inf()));
        CHECK_THROWS((void)WeightValue::real(std::nan("")));
        CHECK((q(0) * WeightValue::inf()).is_plus_inf());
        CHECK((q(3) + WeightValue::inf()).is_plus_inf());
    }

    TEST_CASE("weight literals")
    {
        CHECK(parse_weight("inf", NumericMode::Exact).is_plus_inf());
        CHECK(parse_weight("-inf", NumericMode::Exact).is_minus_inf());
        CHECK(parse_weight("3/6", NumericMode::Exact) == q(1, 2));
        CHECK(parse_weight("0.25", NumericMode::Exact) == q(1, 4));
        CHECK(parse_weight("0.25", NumericMode::Exact).is_rational());
        CHECK(parse_weight("0.25", NumericMode::Float).is_float());
        CHECK_THROWS_AS((void)parse_weight("1/0", NumericMode::Exact), ParseError);
        CHECK_THROWS_AS((void)parse_weight("abc", NumericMode::Exact), ParseError);
        CHECK_THROWS_AS((void)parse_weight("", NumericMode::Exact), ParseError);
    }

    TEST_CASE("compare follows the direction of the domain")
    {
        const auto asc = WeightDomain::real_nonneg_ascending();
        const auto desc = WeightDomain::real_nonneg_descending();
        const auto unit = WeightDomain::unit_descending();
        CHECK(asc.compare(q(3), WeightValue::inf()) == Ordering::Less);
        CHECK(desc.compare(q(3), q(5)) == Ordering::Greater);
        CHECK(unit.compare(q(1), q(1)) == Ordering::Equal);
        CHECK(unit.compare(q(1), WeightValue::real(1.0)) == Ordering::Equal);
    }

    TEST_CASE("carrier violations")
    {
        CHECK_THROWS_AS((void)WeightDomain::zero_inf().compare(q(3, 2), q(0)), CarrierViolation);
        CHECK_THROWS_AS((void)WeightDomain::nat_inf_ascending().compare(q(1, 2), q(0)), CarrierViolation);
        CHECK_THROWS_AS((void)WeightDomain::real_nonneg_ascending().compare(q(-1), q(0)), CarrierViolation);
        CHECK_THROWS_AS((void)WeightDomain::unit_descending().compare(q(2), q(0)), CarrierViolation);
        CHECK_THROWS_AS((void)WeightDomain::unit_descending().compare(WeightValue::inf(), q(0)), CarrierViolation);
        for (const auto& d : all_domains()) {
            if (d.carrier() == WeightDomain::Carrier::RealSigned)
                CHECK(d.contains(WeightValue::neg_inf()));
            else
                CHECK_FALSE(d.contains(WeightValue::neg_inf()));
        }
    }

    TEST_CASE("meet")
    {
        const auto asc = WeightDomain::real_nonneg_ascending();
        const auto desc = WeightDomain::real_nonneg_descending();
        const std::vector<WeightValue> a{q(2), q(5), WeightValue::inf()};
        const std::vector<WeightValue> b{q(2), q(5)};
        CHECK(asc.meet(std::span<const WeightValue>{a}) == q(2));
        CHECK(desc.meet(std::span<const WeightValue>{b}) == q(5));
        for (const auto& d : all_domains())
            CHECK(d.meet(std::span<const WeightValue>{}) == d.top());
        const std::vector<WeightValue> bad{q(-1)};
        CHECK_THROWS_AS((void)asc.meet(std::span<const WeightValue>{bad}), CarrierViolation);
    }

    TEST_CASE("top, bottom and xi of the built-in domains")
    {
        CHECK(WeightDomain::real_nonneg_ascending().xi() == q(0));
        CHECK(WeightDomain::nat_inf_descending().top() == q(0));
        CHECK(WeightDomain::nat_inf_descending().bottom().is_plus_inf());
        CHECK(WeightDomain::real_nonneg_descending().xi().is_plus_inf());
        CHECK(WeightDomain::unit_descending().xi() == q(1));
        CHECK(WeightDomain::unit_descending().top() == q(0));
        CHECK(WeightDomain::real_signed().bottom().is_minus_inf());
        CHECK(WeightDomain::real_nonneg_ascending(q(7)).xi() == q(7));
    }

    TEST_CASE("order laws on every domain")
    {
        for (const auto& d : all_domains()) {
            CAPTURE(d.id());
            CHECK(d.leq(d.bottom(), d.xi()));
            CHECK(d.leq(d.xi(), d.top()));
            const auto vs = members(d);
            for (const auto& a : vs) {
                CHECK(d.leq(d.bottom(), a));
                CHECK(d.leq(a, d.top()));
                for (const auto& b : vs) {
                    const auto ab = d.compare(a, b);
                    const auto ba = d.compare(b, a);
                    CHECK((ab == Ordering::Less) == (ba == Ordering::Greater));
                    CHECK((ab == Ordering::Equal) == (a == b));
                }
            }
        }
    }

    TEST_CASE("meet is invariant under permutation, duplication and extra tops")
    {
        std::mt19937_64 rng{11};
        for (const auto& d : all_domains()) {
            const auto vs = members(d);
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<WeightValue> s;
                const auto n = 1 + rng() % 4;
                for (std::size_t i = 0; i < n; ++i)
                    s.push_back(vs[rng() % vs.size()]);
                const auto m = d.meet(std::span<const WeightValue>{s});
                auto perm = s;
                std::shuffle(perm.begin(), perm.end(), rng);
                perm.push_back(perm.front());
                CHECK(d.meet(std::span<const WeightValue>{perm}) == m);
                perm.push_back(d.top());
                CHECK(d.meet(std::span<const WeightValue>{perm}) == m);
                const std::vector<WeightValue> one{s.front()};
                CHECK(d.meet(std::span<const WeightValue>{one}) == s.front());
            }
        }
    }

    TEST_CASE("float mode conversion")
    {
        const auto d = WeightDomain::unit_descending().with_mode(NumericMode::Float);
        CHECK(d.xi().is_float());
        CHECK(d.coerce(q(1, 2)).is_float());
        CHECK(to_mode(WeightValue::real(0.5), NumericMode::Exact) == q(1, 2));
    }
}
