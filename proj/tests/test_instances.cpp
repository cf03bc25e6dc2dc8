#include "cspp/errors.hpp"
#include "cspp/examples.hpp"
#include "cspp/verify.hpp"

#include <doctest.h>

using namespace cspp;

TEST_SUITE("instances")
{
    TEST_CASE("catalog wiring")
    {
        const auto spp = make_instance("spp");
        CHECK(spp->domain.carrier() == WeightDomain::Carrier::RealNonneg);
        CHECK(spp->domain.ascending());
        CHECK(spp->domain.xi() == WeightValue::exact(0));
        CHECK(spp->modality.kind() == Modality::Kind::Add);
        CHECK(spp->expected == Expected::Yes);

        const auto pr = make_instance("prob-reach");
        CHECK(pr->domain.carrier() == WeightDomain::Carrier::Unit);
        CHECK_FALSE(pr->domain.ascending());
        CHECK(pr->domain.xi() == WeightValue::exact(1));
        CHECK(pr->modality.kind() == Modality::Kind::Expectation);
        CHECK(pr->expected == Expected::No);

        const auto dg = make_instance("dyn-game-discount", Json{{"l0", 1}, {"L", 2}, {"r", 0.5}});
        CHECK(dg->expected == Expected::Conditional);
        CHECK(dg->conditional_holds() == false);
        CHECK(make_instance("dyn-game-discount", Json{{"l0", 2}, {"L", 2}})->conditional_holds() == true);

        const auto w = make_instance("widest");
        CHECK(w->modality.kind() == Modality::Kind::Cap);
        CHECK_FALSE(w->domain.ascending());
        CHECK(w->domain.xi().is_plus_inf());

        CHECK(instance_ids().size() == 15);
        for (const auto& id : instance_ids())
            CHECK(make_instance(id)->id == id);
    }

    TEST_CASE("expected column")
    {
        const std::map<std::string, Expected> table = {
            {"reach", Expected::Yes},         {"uspp", Expected::Yes},        {"ulongest", Expected::No},
            {"spp", Expected::Yes},           {"spp-neg", Expected::No},      {"spp-interest", Expected::Yes},
            {"spp-discount", Expected::No},   {"widest", Expected::Yes},      {"reliable", Expected::Yes},
            {"bintree", Expected::Yes},       {"bin-reach-game", Expected::Yes}, {"reach-game", Expected::Yes},
            {"dyn-game", Expected::Yes},      {"dyn-game-discount", Expected::Conditional},
            {"prob-reach", Expected::No},
        };
        for (const auto& [id, e] : table)
            CHECK_MESSAGE(make_instance(id)->expected == e, id);
    }

    TEST_CASE("parameter errors")
    {
        CHECK_THROWS_AS((void)make_instance("dijkstra"), UnknownInstance);
        CHECK_THROWS_AS((void)make_instance("spp", Json{{"colour", 1}}), ParamRange);
        CHECK_THROWS_AS((void)make_instance("spp", Json{{"numeric", "fuzzy"}}), ParamRange);
        CHECK_THROWS_AS((void)make_instance("bintree", Json{{"arity", 0}}), ParamRange);
        CHECK_THROWS_AS((void)make_instance("dyn-game-discount", Json{{"r", 0}}), ParamRange);
        CHECK_THROWS_AS((void)make_instance("dyn-game-discount", Json{{"r", 2}}), ParamRange);
        CHECK_THROWS_AS((void)make_instance("dyn-game-discount", Json{{"l0", 3}, {"L", 2}}), ParamRange);
        CHECK_THROWS_AS((void)make_instance("dyn-game-discount", Json{{"xi", "inf"}}), ParamRange);
        CHECK_THROWS_AS((void)make_instance("spp", Json{{"xi", -1}}), ParamRange);
        CHECK_THROWS_AS((void)make_instance("spp", Json::array()), ParamRange);
        CHECK(make_instance("bintree", Json{{"arity", 3}})->modality.tree_arity() == 3);
        CHECK(make_instance("spp", Json{{"xi", 2}})->domain.xi() == WeightValue::exact(2));
        CHECK(make_instance("spp", Json{{"numeric", "float"}})->mode() == NumericMode::Float);
    }

    TEST_CASE("every Yes row is expansive and every No row has a witness")
    {
        for (const auto& id : instance_ids()) {
            CAPTURE(id);
            const auto inst = make_instance(id);
            ExpansivenessReport r;
            if (has_analytic_verdict(*inst)) {
                r = check_expansive(*inst, 3, OmegaSource::analytic());
            } else {
                const auto g = example_graph(id == "spp" ? "fig1_fig2" : id == "bintree" ? "fig3"
                                                   : id == "spp-neg"   ? "neg_edges"
                                                   : id == "prob-reach" ? "prob_counterexample"
                                                   : id == "reach"      ? "reach_fig2_unweighted"
                                                                        : id + "_sample");
                r = check_expansive(*inst, 3, OmegaSource::from_graph(g));
            }
            if (inst->expected == Expected::Yes) {
                CHECK(r.verdict == Verdict::Expansive);
            } else {
                CHECK(r.verdict == Verdict::NotExpansive);
                REQUIRE(r.witness);
                CHECK(inst->domain.less(r.witness->sigma(), r.witness->child_value()));
            }
        }
    }

    TEST_CASE("example names")
    {
        CHECK(example_file_name("fig1_fig2") == "fig1_fig2_spp.json");
        CHECK(example_file_name("fig3") == "fig3_bintree.json");
        CHECK(example_file_name("neg_edges") == "neg_edges_counterexample.json");
        CHECK(example_file_name("widest_sample") == "widest_sample.json");
        for (const auto& id : instance_ids()) {
            bool covered = false;
            for (const auto& n : example_names())
                covered = covered || example_graph(n).instance().id == id;
            CHECK_MESSAGE(covered, id);
        }
    }
}
