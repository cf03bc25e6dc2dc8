#include "cspp/errors.hpp"
#include "cspp/instances.hpp"
#include "cspp/modality.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cspp;

namespace {

WeightValue q(std::int64_t n, std::int64_t d = 1) { return WeightValue::exact(n, d); }

using V = std::vector<WeightValue>;

WeightValue ap(std::string_view id, V payload, V slots)
{
    const auto inst = make_instance(id, Json{{"numeric", "exact"}});
    return inst->modality.apply(inst->domain, Payload{std::move(payload)}, slots);
}

bool has_issue(const std::vector<PayloadIssue>& is, IssueCode c)
{
    return std::any_of(is.begin(), is.end(), [&](const PayloadIssue& i) { return i.code == c; });
}

} // namespace

TEST_SUITE("modality")
{
    TEST_CASE("apply on worked examples")
    {
        CHECK(ap("spp", {q(2)}, {q(1)}) == q(3));
        CHECK(ap("bintree", {q(3)}, {q(0), q(0)}) == q(3));
        CHECK(ap("prob-reach", {q(1, 2), q(1, 2)}, {q(0), q(1)}) == q(1, 2));
    }

    TEST_CASE("apply on every modality")
    {
        const auto inf = WeightValue::inf();
        CHECK(ap("reach", {}, {q(0)}) == q(0));
        CHECK(ap("reach", {}, {inf}).is_plus_inf());
        CHECK(ap("uspp", {}, {q(4)}) == q(5));
        CHECK(ap("ulongest", {}, {q(4)}) == q(5));
        CHECK(ap("spp-neg", {q(-1)}, {q(1)}) == q(0));
        CHECK(ap("spp-interest", {q(1), q(2)}, {q(3)}) == q(7));
        CHECK(ap("spp-discount", {q(1), q(1, 2)}, {q(4)}) == q(3));
        CHECK(ap("spp-discount", {q(0), q(0)}, {inf}).is_plus_inf());
        CHECK(ap("widest", {q(5)}, {q(3)}) == q(3));
        CHECK(ap("widest", {inf}, {q(3)}) == q(3));
        CHECK(ap("reliable", {q(1, 2)}, {q(1, 2)}) == q(1, 4));
        CHECK(ap("bintree", {q(1)}, {q(2), q(5)}) == q(8));
        CHECK(ap("bin-reach-game", {}, {q(0), inf}).is_plus_inf());
        CHECK(ap("bin-reach-game", {}, {q(0), q(0)}) == q(0));
        CHECK(ap("reach-game", {}, {q(0), q(0), inf}).is_plus_inf());
        CHECK(ap("dyn-game", {q(1), q(3)}, {q(4), q(1)}) == q(5));
        CHECK(ap("dyn-game-discount", {q(1), q(2)}, {q(4), q(1)}) == q(3));
        CHECK(ap("prob-reach", {q(1, 3), q(2, 3)}, {q(1), q(1, 2)}) == q(2, 3));
    }

    TEST_CASE("apply errors")
    {
        const auto spp = make_instance("spp");
        const V one{q(1)};
        const V two{q(1), q(2)};
        CHECK_THROWS_AS((void)spp->modality.apply(spp->domain, Payload{{q(1)}}, two), ArityMismatch);
        CHECK_THROWS_AS((void)spp->modality.apply(spp->domain, Payload{}, one), PayloadSchemaError);
        const V neg{q(-1)};
        CHECK_THROWS_AS((void)spp->modality.apply(spp->domain, Payload{{q(1)}}, neg), CarrierViolation);
        CHECK_THROWS_AS((void)spp->modality.apply(spp->domain, Payload{{q(-1)}}, one), CarrierViolation);

        const auto rg = make_instance("reach-game");
        CHECK_THROWS_AS((void)rg->modality.apply(rg->domain, Payload{}, V{}), ArityMismatch);
        const auto bt = make_instance("bintree", Json{{"arity", 3}});
        CHECK_THROWS_AS((void)bt->modality.apply(bt->domain, Payload{{q(1)}}, two), ArityMismatch);
    }

    TEST_CASE("payload checks")
    {
        const auto pr = make_instance("prob-reach", Json{{"numeric", "exact"}});
        CHECK(has_issue(pr->modality.check_payload(pr->domain, Payload{{q(1, 2), q(2, 5)}}, 2), IssueCode::ProbSum));
        CHECK(pr->modality.check_payload(pr->domain, Payload{{q(1, 2), q(1, 2)}}, 2).empty());
        CHECK_FALSE(pr->modality.check_payload(pr->domain, Payload{{q(0), q(1)}}, 2).empty());
        const auto pf = make_instance("prob-reach");
        CHECK(pf->modality.check_payload(pf->domain, Payload{{WeightValue::real(0.3), WeightValue::real(0.7 + 1e-12)}}, 2).empty());
        CHECK(has_issue(pf->modality.check_payload(pf->domain, Payload{{WeightValue::real(0.3), WeightValue::real(0.6)}}, 2),
                        IssueCode::ProbSum));
        const auto rg = make_instance("reach-game");
        CHECK(has_issue(rg->modality.check_payload(rg->domain, Payload{}, 0), IssueCode::NonEmptySupportRequired));
        const auto si = make_instance("spp-interest");
        CHECK_FALSE(si->modality.check_payload(si->domain, Payload{{q(1), q(1, 2)}}, 1).empty());
        const auto sd = make_instance("spp-discount", Json{{"numeric", "exact"}});
        CHECK_FALSE(sd->modality.check_payload(sd->domain, Payload{{q(1), q(3, 2)}}, 1).empty());
        const auto w = make_instance("widest");
        CHECK(w->modality.check_payload(w->domain, Payload{{WeightValue::inf()}}, 1).empty());
        const auto dg = make_instance("dyn-game");
        CHECK_FALSE(dg->modality.check_payload(dg->domain, Payload{{q(1)}}, 2).empty());
    }

    TEST_CASE("support")
    {
        CHECK(support(Transition{{}, {0, 3}}) == std::vector<StateId>{0, 3});
        CHECK(support(Transition{{}, {2, 2}}) == std::vector<StateId>{2});
        CHECK(support(Transition{{}, {}}).empty());
        CHECK(support(Transition{{}, {4, 1, 4}}) == std::vector<StateId>{1, 4});
    }

    TEST_CASE("infimum distribution, expectation example")
    {
        const auto pr = make_instance("prob-reach", Json{{"numeric", "exact"}});
        const std::vector<V> sets{{q(0), q(1)}, {q(0), q(1)}};
        // Both sides by hand. Meet under >= is the numeric max.
        double lhs = 0.5 * 1 + 0.5 * 1;
        double rhs = 0;
        for (double a : {0.0, 1.0})
            for (double b : {0.0, 1.0})
                rhs = std::max(rhs, 0.5 * a + 0.5 * b);
        CHECK(lhs == rhs);
        CHECK(check_inf_distribution(pr->modality, pr->domain, Payload{{q(1, 2), q(1, 2)}}, sets) == (lhs == rhs));
    }

    TEST_CASE("infimum distribution, other cases")
    {
        const auto spp = make_instance("spp");
        const std::vector<V> a{{q(1), q(4)}};
        CHECK(check_inf_distribution(spp->modality, spp->domain, Payload{{q(2)}}, a));
        const auto dg = make_instance("dyn-game");
        const std::vector<V> singles{{q(3)}, {q(1)}};
        CHECK(check_inf_distribution(dg->modality, dg->domain, Payload{{q(0), q(2)}}, singles));
        const std::vector<V> empty{{}};
        CHECK_THROWS((void)check_inf_distribution(spp->modality, spp->domain, Payload{{q(2)}}, empty));
    }

    TEST_CASE("check_expansive_on")
    {
        const auto neg = make_instance("spp-neg");
        const V one{q(1)};
        const auto w = check_expansive_on(neg->modality, neg->domain, Payload{{q(-1)}}, one);
        REQUIRE(w);
        CHECK(w->index == 0);
        CHECK(w->slot_value == q(1));
        CHECK(w->sigma == q(0));

        const auto disc = make_instance("spp-discount", Json{{"numeric", "exact"}});
        const auto w2 = check_expansive_on(disc->modality, disc->domain, Payload{{q(0), q(0)}}, one);
        REQUIRE(w2);
        CHECK(w2->sigma == q(0));

        const auto spp = make_instance("spp");
        const V three{q(3)};
        CHECK_FALSE(check_expansive_on(spp->modality, spp->domain, Payload{{q(1)}}, three));

        const auto pr = make_instance("prob-reach", Json{{"numeric", "exact"}});
        const V mixed{q(1), q(0)};
        const auto w3 = check_expansive_on(pr->modality, pr->domain, Payload{{q(1, 2), q(1, 2)}}, mixed);
        REQUIRE(w3);
        CHECK(w3->index == 1);
    }
}
