#include "cspp/examples.hpp"

#include "cspp/errors.hpp"

#include <functional>
#include <map>

namespace cspp {

namespace {

WeightValue q(std::int64_t n, std::int64_t d = 1) { return WeightValue::exact(n, d); }

Transition tr(std::vector<WeightValue> payload, std::vector<StateId> slots)
{
    return Transition{Payload{std::move(payload)}, std::move(slots)};
}

State target(std::vector<Transition> ts = {}) { return State{true, std::move(ts)}; }
State inner(std::vector<Transition> ts) { return State{false, std::move(ts)}; }

WeightedGraph build(const InstancePtr& inst, std::vector<State> states)
{
    // Payloads are written exactly and moved into the instance's numeric mode.
    for (auto& s : states)
        for (auto& t : s.transitions)
            for (auto& v : t.payload.values)
                v = to_mode(v, inst->mode());
    return WeightedGraph{inst, std::move(states)};
}

using Builder = std::function<WeightedGraph()>;

const std::map<std::string, Builder, std::less<>>& builders()
{
    static const std::map<std::string, Builder, std::less<>> table = {
        {"fig1_fig2",
         [] {
             return build(make_instance("spp"), {
                                                    target(),
                                                    inner({tr({q(1)}, {0}), tr({q(1)}, {3})}),
                                                    inner({tr({q(6)}, {0}), tr({q(2)}, {3}), tr({q(1)}, {4})}),
                                                    inner({tr({q(2)}, {1})}),
                                                    inner({tr({q(1)}, {2})}),
                                                    inner({tr({q(1)}, {3}), tr({q(3)}, {4})}),
                                                });
         }},
        {"reach_fig2_unweighted",
         [] {
             return build(make_instance("reach"), {
                                                      target(),
                                                      inner({tr({}, {0}), tr({}, {3})}),
                                                      inner({tr({}, {4})}),
                                                      inner({tr({}, {1})}),
                                                      inner({tr({}, {2})}),
                                                  });
         }},
        {"fig3",
         [] {
             return build(make_instance("bintree"), {
                                                        target(),
                                                        inner({tr({q(1)}, {2, 0})}),
                                                        inner({tr({q(3)}, {0, 0})}),
                                                        inner({tr({q(2)}, {4, 2}), tr({q(2)}, {2, 1})}),
                                                        inner({tr({q(1)}, {2, 4})}),
                                                    });
         }},
        {"neg_edges",
         [] {
             return build(make_instance("spp-neg"), {
                                                        target(),
                                                        inner({tr({q(1)}, {0}), tr({q(-1)}, {1})}),
                                                    });
         }},
        {"prob_counterexample",
         [] {
             return build(make_instance("prob-reach"), {
                                                           target(),
                                                           inner({tr({q(1, 2), q(1, 2)}, {0, 1})}),
                                                       });
         }},
        {"uspp_sample",
         [] {
             return build(make_instance("uspp"), {
                                                     target(),
                                                     inner({tr({}, {0}), tr({}, {2})}),
                                                     inner({tr({}, {3})}),
                                                     inner({tr({}, {1})}),
                                                     inner({tr({}, {4})}),
                                                 });
         }},
        {"ulongest_sample",
         [] {
             return build(make_instance("ulongest"), {
                                                         target(),
                                                         inner({tr({}, {0})}),
                                                         inner({tr({}, {1}), tr({}, {0})}),
                                                         inner({tr({}, {2}), tr({}, {1})}),
                                                     });
         }},
        {"spp-interest_sample",
         [] {
             return build(make_instance("spp-interest"), {
                                                             target(),
                                                             inner({tr({q(2), q(3, 2)}, {0})}),
                                                             inner({tr({q(1), q(1)}, {1}), tr({q(5), q(2)}, {0})}),
                                                             inner({tr({q(0), q(2)}, {2})}),
                                                         });
         }},
        {"spp-discount_sample",
         [] {
             return build(make_instance("spp-discount"), {
                                                             target(),
                                                             inner({tr({q(1), q(1, 2)}, {0})}),
                                                             inner({tr({q(3), q(1)}, {0}), tr({q(1), q(1, 4)}, {1})}),
                                                             inner({tr({q(0), q(1, 2)}, {2}), tr({q(2), q(1)}, {3})}),
                                                         });
         }},
        {"widest_sample",
         [] {
             return build(make_instance("widest"), {
                                                       target(),
                                                       inner({tr({q(5)}, {0}), tr({q(2)}, {2})}),
                                                       inner({tr({q(7)}, {0})}),
                                                       inner({tr({q(4)}, {1}), tr({q(3)}, {2})}),
                                                   });
         }},
        {"reliable_sample",
         [] {
             return build(make_instance("reliable"), {
                                                         target(),
                                                         inner({tr({q(1, 2)}, {0})}),
                                                         inner({tr({q(3, 4)}, {1}), tr({q(1, 4)}, {0})}),
                                                         inner({tr({q(1)}, {2})}),
                                                     });
         }},
        {"bin-reach-game_sample",
         [] {
             return build(make_instance("bin-reach-game"), {
                                                               target(),
                                                               inner({tr({}, {0, 0})}),
                                                               inner({tr({}, {1, 3})}),
                                                               inner({tr({}, {3, 3})}),
                                                               inner({tr({}, {0, 1}), tr({}, {3, 2})}),
                                                           });
         }},
        {"reach-game_sample",
         [] {
             return build(make_instance("reach-game"), {
                                                           target(),
                                                           inner({tr({}, {0})}),
                                                           inner({tr({}, {1, 3}), tr({}, {0, 1})}),
                                                           inner({tr({}, {3})}),
                                                           inner({tr({}, {1, 2, 0})}),
                                                       });
         }},
        {"dyn-game_sample",
         [] {
             return build(make_instance("dyn-game"), {
                                                         target(),
                                                         inner({tr({q(2)}, {0})}),
                                                         inner({tr({q(1), q(4)}, {1, 0})}),
                                                         inner({tr({q(1)}, {2}), tr({q(3), q(0)}, {1, 2})}),
                                                     });
         }},
        {"dyn-game-discount_sample",
         [] {
             return build(make_instance("dyn-game-discount"), {
                                                                  target(),
                                                                  inner({tr({q(2)}, {0})}),
                                                                  inner({tr({q(2)}, {1}), tr({q(1)}, {2})}),
                                                              });
         }},
    };
    return table;
}

} // namespace

WeightedGraph example_graph(std::string_view name)
{
    const auto& table = builders();
    const auto it = table.find(name);
    if (it == table.end())
        throw UnknownExample{"unknown example '" + std::string{name} + "'"};
    return it->second();
}

const std::vector<std::string>& example_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, _] : builders())
            out.push_back(k);
        return out;
    }();
    return names;
}

std::string example_file_name(std::string_view name)
{
    if (name == "fig1_fig2")
        return "fig1_fig2_spp.json";
    if (name == "fig3")
        return "fig3_bintree.json";
    if (name == "neg_edges")
        return "neg_edges_counterexample.json";
    return std::string{name} + ".json";
}

} // namespace cspp
