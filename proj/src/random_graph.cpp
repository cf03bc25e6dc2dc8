#include "cspp/random_graph.hpp"

#include <algorithm>

namespace cspp {

namespace {

using K = Modality::Kind;

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>{lo, hi}(rng);
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs)
{
    return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(xs.size()) - 1))];
}

WeightValue q(std::int64_t n, std::int64_t d = 1) { return WeightValue::exact(n, d); }

std::size_t pick_arity(const Modality& mod, std::mt19937_64& rng, std::size_t max_arity)
{
    if (auto fixed = mod.fixed_arity())
        return *fixed;
    return static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(std::max<std::size_t>(1, max_arity))));
}

} // namespace

Payload random_payload(const InstanceSpec& inst, std::mt19937_64& rng, std::size_t k)
{
    const auto& mod = inst.modality;
    Payload p;
    auto push = [&](WeightValue v) { p.values.push_back(to_mode(v, inst.mode())); };
    switch (mod.kind()) {
    case K::Add: push(q(mod.is_signed() ? uniform(rng, -3, 9) : uniform(rng, 0, 9))); break;
    case K::TreeAdd: push(q(uniform(rng, 0, 9))); break;
    case K::Rate:
        push(q(uniform(rng, 0, 9)));
        if (mod.rate_range() == Modality::RateRange::Interest)
            push(pick(rng, std::vector{q(1), q(5, 4), q(3, 2), q(2)}));
        else
            push(pick(rng, std::vector{q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}));
        break;
    case K::Cap: push(uniform(rng, 0, 9) == 0 ? WeightValue::inf() : q(uniform(rng, 0, 9))); break;
    case K::Mult: push(pick(rng, std::vector{q(0), q(1, 4), q(1, 2), q(3, 4), q(1)})); break;
    case K::GameMax:
        for (std::size_t i = 0; i < k; ++i)
            push(q(uniform(rng, 0, 9)));
        break;
    case K::DiscountedGame: {
        const auto mid = (mod.l0() + mod.upper()) * to_mode(q(1, 2), inst.mode());
        for (std::size_t i = 0; i < k; ++i)
            push(pick(rng, std::vector{mod.l0(), mod.upper(), mid}));
        break;
    }
    case K::Expectation: {
        std::vector<std::int64_t> c(k);
        std::int64_t total = 0;
        for (auto& ci : c) {
            ci = uniform(rng, 1, 4);
            total += ci;
        }
        for (auto ci : c)
            push(q(ci, total));
        break;
    }
    default: break;
    }
    return p;
}

WeightedGraph random_graph(const InstancePtr& inst, std::mt19937_64& rng, const RandomGraphOptions& opts)
{
    const auto V = opts.exact_states ? opts.max_states
                                     : static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(opts.max_states)));
    std::bernoulli_distribution is_target{opts.target_prob};
    std::vector<State> states(V);
    for (std::size_t x = 0; x < V; ++x) {
        states[x].target = is_target(rng);
        if (opts.acyclic && x == 0)
            continue;
        const auto T = uniform(rng, 0, static_cast<std::int64_t>(opts.max_transitions));
        for (std::int64_t j = 0; j < T; ++j) {
            const auto k = pick_arity(inst->modality, rng, opts.max_arity);
            Transition t;
            const std::int64_t hi = opts.acyclic ? static_cast<std::int64_t>(x) - 1 : static_cast<std::int64_t>(V) - 1;
            for (std::size_t i = 0; i < k; ++i)
                t.slots.push_back(static_cast<StateId>(uniform(rng, 0, hi)));
            t.payload = random_payload(*inst, rng, k);
            states[x].transitions.push_back(std::move(t));
        }
    }
    return WeightedGraph{inst, std::move(states)};
}

std::vector<PayloadShape> sample_payloads(const InstanceSpec& inst, std::uint64_t seed, std::size_t draws)
{
    const auto& mod = inst.modality;
    std::vector<PayloadShape> out;
    auto add = [&](std::vector<WeightValue> vals, std::size_t k) {
        for (auto& v : vals)
            v = to_mode(v, inst.mode());
        PayloadShape s{Payload{std::move(vals)}, k};
        if (std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(std::move(s));
    };

    switch (mod.kind()) {
    case K::Identity:
    case K::Successor: add({}, 1); break;
    case K::Add:
        for (auto w : mod.is_signed() ? std::vector{q(-1), q(0), q(1), q(3)} : std::vector{q(0), q(1), q(2), q(5)})
            add({w}, 1);
        break;
    case K::Rate:
        for (auto w : {q(0), q(1), q(3)}) {
            const auto rates = mod.rate_range() == Modality::RateRange::Interest ? std::vector{q(1), q(3, 2), q(2)}
                                                                                  : std::vector{q(0), q(1, 2), q(1)};
            for (const auto& r : rates)
                add({w, r}, 1);
        }
        break;
    case K::Cap:
        for (auto c : {q(0), q(1), q(3), WeightValue::inf()})
            add({c}, 1);
        break;
    case K::Mult:
        for (auto p : {q(0), q(1, 4), q(1, 2), q(1)})
            add({p}, 1);
        break;
    case K::TreeAdd:
        for (auto w : {q(0), q(1), q(3)})
            add({w}, mod.tree_arity());
        break;
    case K::PairJoin: add({}, 2); break;
    case K::SetJoin:
        for (std::size_t k = 1; k <= 3; ++k)
            add({}, k);
        break;
    case K::GameMax:
        add({q(0)}, 1);
        add({q(2)}, 1);
        add({q(1), q(3)}, 2);
        add({q(0), q(0)}, 2);
        add({q(1), q(0), q(2)}, 3);
        break;
    case K::DiscountedGame: {
        const auto mid = (mod.l0() + mod.upper()) * to_mode(q(1, 2), inst.mode());
        add({mod.l0()}, 1);
        add({mod.upper()}, 1);
        add({mid}, 1);
        add({mod.l0(), mod.upper()}, 2);
        break;
    }
    case K::Expectation:
        add({q(1)}, 1);
        add({q(1, 2), q(1, 2)}, 2);
        add({q(1, 4), q(3, 4)}, 2);
        add({q(1, 3), q(1, 3), q(1, 3)}, 3);
        break;
    }

    std::mt19937_64 rng{seed};
    const std::size_t max_k = mod.kind() == K::TreeAdd ? mod.tree_arity() : 3;
    for (std::size_t i = 0; i < draws; ++i) {
        const auto k = pick_arity(mod, rng, max_k);
        PayloadShape s{random_payload(inst, rng, k), k};
        if (std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(std::move(s));
    }
    return out;
}

std::vector<PayloadShape> graph_payloads(const WeightedGraph& g)
{
    std::vector<PayloadShape> out;
    for (const auto& s : g.states())
        for (const auto& t : s.transitions) {
            PayloadShape p{t.payload, t.slots.size()};
            if (std::find(out.begin(), out.end(), p) == out.end())
                out.push_back(std::move(p));
        }
    return out;
}

WeightedGraph random_sparse_graph(const InstancePtr& inst, std::size_t V, std::size_t E, std::uint64_t seed)
{
    std::mt19937_64 rng{seed};
    std::vector<State> states(V);
    for (std::size_t x = 0; x < V; x += 100)
        states[x].target = true;
    const auto hi = static_cast<std::int64_t>(V) - 1;
    for (std::size_t e = 0; e < E && V > 0; ++e) {
        const auto x = static_cast<std::size_t>(uniform(rng, 0, hi));
        const auto y = static_cast<StateId>(uniform(rng, 0, hi));
        Payload p;
        const auto k = inst->modality.payload_size(1);
        for (std::size_t i = 0; i < k; ++i)
            p.values.push_back(to_mode(q(uniform(rng, 1, 100)), inst->mode()));
        states[x].transitions.push_back(Transition{std::move(p), {y}});
    }
    return WeightedGraph{inst, std::move(states)};
}

} // namespace cspp
