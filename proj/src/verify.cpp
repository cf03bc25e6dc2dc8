#include "cspp/verify.hpp"

#include "cspp/errors.hpp"
#include "cspp/graph_io.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace cspp {

std::string_view source_name(SourceKind k)
{
    switch (k) {
    case SourceKind::FromGraph: return "from-graph";
    case SourceKind::Sample: return "sample";
    case SourceKind::Analytic: return "analytic";
    }
    return "?";
}

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Expansive: return "Expansive";
    case Verdict::NotExpansive: return "NotExpansive";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

std::vector<WeightValue> OmegaSigmaSample::at_depth(std::size_t n) const
{
    std::vector<WeightValue> out;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (level[i] <= n)
            out.push_back(values[i]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Violation {
    std::size_t shape;
    std::vector<std::size_t> tuple;
    std::size_t index;
    std::size_t depth;
};

struct Closure {
    OmegaSigmaSample sample;
    std::optional<Violation> violation;
};

// Semi-naive closure of {ξ, ⊤} under σ. Level n evaluates every tuple over
// Ω_n that uses at least one value new at level n. With `check`, one extra
// round runs so that tuples over Ω_depth are also checked.
Closure close(const InstanceSpec& inst, std::vector<PayloadShape> shapes, std::size_t depth,
              const ClosureLimits& limits, bool check)
{
    const auto& dom = inst.domain;
    const auto& mod = inst.modality;
    Closure c;
    auto& s = c.sample;
    s.depth = depth;
    s.shapes = std::move(shapes);

    std::map<WeightValue, std::size_t> index;
    auto add = [&](const WeightValue& v, std::size_t lvl, ValueOrigin o) {
        if (index.contains(v))
            return;
        if (s.values.size() >= limits.value_cap) {
            s.capped = true;
            return;
        }
        index.emplace(v, s.values.size());
        s.values.push_back(v);
        s.level.push_back(lvl);
        s.origin.push_back(std::move(o));
    };
    add(dom.xi(), 0, {});
    add(dom.top(), 0, {});

    std::size_t first_new = 0;
    const std::size_t rounds = check ? depth + 1 : depth;
    std::vector<WeightValue> args;
    for (std::size_t n = 0; n < rounds; ++n) {
        const std::size_t end = s.values.size();
        const bool insert = n < depth;
        for (std::size_t si = 0; si < s.shapes.size(); ++si) {
            const auto& shape = s.shapes[si];
            const std::size_t k = shape.arity;
            std::vector<std::size_t> idx(k, 0);
            args.assign(k, WeightValue{});
            if (end == 0)
                continue;
            while (true) {
                const bool fresh = k == 0 ? n == 0 : *std::max_element(idx.begin(), idx.end()) >= first_new;
                if (fresh) {
                    if (s.evaluations >= limits.eval_budget) {
                        s.budget_exhausted = true;
                        return c;
                    }
                    ++s.evaluations;
                    for (std::size_t i = 0; i < k; ++i)
                        args[i] = s.values[idx[i]];
                    const WeightValue v = mod.eval(dom, shape.payload, args);
                    if (check) {
                        for (std::size_t i = 0; i < k; ++i) {
                            if (!dom.leq(args[i], v)) {
                                c.violation = Violation{si, idx, i, n};
                                return c;
                            }
                        }
                    }
                    if (insert)
                        add(v, n + 1, ValueOrigin{si, idx});
                }
                std::size_t i = 0;
                while (i < k && ++idx[i] == end)
                    idx[i++] = 0;
                if (i == k)
                    break;
            }
        }
        first_new = end;
        if (s.values.size() == end && n + 1 < rounds && !check)
            break;
    }
    return c;
}

std::vector<PayloadShape> shapes_for(const InstanceSpec& inst, const OmegaSource& src)
{
    switch (src.kind) {
    case SourceKind::FromGraph:
        if (!src.graph)
            throw InstanceMismatch{"from-graph source needs a graph"};
        if (src.graph->instance().id != inst.id || src.graph->instance().params != inst.params)
            throw InstanceMismatch{"graph instance '" + src.graph->instance().id + "' does not match '" + inst.id + "'"};
        return graph_payloads(*src.graph);
    case SourceKind::Sample: return sample_payloads(inst, src.seed, src.draws);
    case SourceKind::Analytic: return sample_payloads(inst, 0, 0);
    }
    return {};
}

std::size_t tree_from_origin(ConstructionTree& t, const OmegaSigmaSample& s, std::size_t vid)
{
    const auto& o = s.origin[vid];
    const std::size_t me = t.nodes.size();
    t.nodes.emplace_back();
    if (!o.shape) {
        t.nodes[me].leaf = true;
        t.nodes[me].is_xi = vid == 0;
        return me;
    }
    t.nodes[me].leaf = false;
    t.nodes[me].payload = s.shapes[*o.shape].payload;
    for (auto a : o.args) {
        const auto child = tree_from_origin(t, s, a);
        t.nodes[me].children.push_back(child);
    }
    return me;
}

Witness witness_from_violation(const InstanceSpec& inst, const Closure& c)
{
    const auto& v = *c.violation;
    Witness w;
    w.tree.instance = make_instance(inst.id, inst.params);
    w.tree.nodes.emplace_back();
    w.tree.nodes[0].leaf = false;
    w.tree.nodes[0].payload = c.sample.shapes[v.shape].payload;
    for (auto a : v.tuple) {
        const auto child = tree_from_origin(w.tree, c.sample, a);
        w.tree.nodes[0].children.push_back(child);
    }
    w.child = v.index;
    w.tree.evaluate();
    return w;
}

WeightValue in_mode(const InstanceSpec& inst, WeightValue v) { return to_mode(v, inst.mode()); }

// Witness for the discount-rate SPP: σ(0, 0, 1) = 0 with 1 = σ(1, 1/2, ξ).
ExpansivenessReport analytic_spp_discount(const InstanceSpec& inst)
{
    ExpansivenessReport r;
    r.mode = SourceKind::Analytic;
    r.verdict = Verdict::NotExpansive;
    r.depth = 1;
    Witness w;
    w.tree.instance = make_instance(inst.id, inst.params);
    using N = ConstructionTree::Node;
    w.tree.nodes.push_back(N{false, false, Payload{{in_mode(inst, WeightValue::exact(0)), in_mode(inst, WeightValue::exact(0))}}, {1}, {}});
    w.tree.nodes.push_back(N{false, false, Payload{{in_mode(inst, WeightValue::exact(1)), in_mode(inst, WeightValue::exact(1, 2))}}, {2}, {}});
    w.tree.nodes.push_back(N{true, true, {}, {}, {}});
    w.child = 0;
    w.tree.evaluate();
    r.witness = std::move(w);
    r.note = "rate a' < 1 shrinks b: a + a'b < b once b > a/(1 - a')";
    return r;
}

ExpansivenessReport analytic_discounted_game(const InstanceSpec& inst)
{
    ExpansivenessReport r;
    r.mode = SourceKind::Analytic;
    const auto& mod = inst.modality;
    const auto& xi = inst.domain.xi();
    const auto& l0 = mod.l0();
    const auto& L = mod.upper();
    const auto& rate = mod.discount();
    if (*inst.conditional_holds()) {
        r.verdict = Verdict::Expansive;
        r.note = "r = 1, or l0 = L with xi <= L + r*xi";
        return r;
    }
    r.verdict = Verdict::NotExpansive;
    using N = ConstructionTree::Node;
    Witness w;
    w.tree.instance = make_instance(inst.id, inst.params);

    if (l0 == L) {
        // ξ > L + rξ: the single step σ({(L, ξ)}) already falls below ξ.
        w.tree.nodes.push_back(N{false, false, Payload{{L}}, {1}, {}});
        w.tree.nodes.push_back(N{true, true, {}, {}, {}});
        r.depth = 0;
    } else {
        // b_0 = ξ, b_n = L + r b_{n-1}; stop at the first b_n > l0 / (1 - r)
        // and take σ({(l0, b_n)}) = l0 + r b_n < b_n.
        const double bound = l0.to_double() / (1.0 - rate.to_double());
        std::vector<WeightValue> chain{xi};
        while (!(chain.back().to_double() > bound) || !(l0 + rate * chain.back() < chain.back())) {
            chain.push_back(L + rate * chain.back());
            if (chain.size() > 10000)
                throw BudgetError{"discounted game witness chain did not reach the bound"};
        }
        const std::size_t n = chain.size() - 1;
        // root, then node_n, node_{n-1}, ..., node_1, leaf ξ
        w.tree.nodes.push_back(N{false, false, Payload{{l0}}, {1}, {}});
        for (std::size_t i = 0; i < n; ++i)
            w.tree.nodes.push_back(N{false, false, Payload{{L}}, {w.tree.nodes.size() + 1}, {}});
        w.tree.nodes.push_back(N{true, true, {}, {}, {}});
        r.depth = n;
    }
    w.child = 0;
    w.tree.evaluate();
    r.witness = std::move(w);
    r.note = "l0 < L or xi > L + r*xi with r < 1";
    return r;
}

} // namespace

OmegaSigmaSample omega_sigma(const InstanceSpec& inst, std::size_t depth, const OmegaSource& source,
                             const ClosureLimits& limits)
{
    return close(inst, shapes_for(inst, source), depth, limits, false).sample;
}

bool has_analytic_verdict(const InstanceSpec& inst)
{
    return inst.id == "spp-interest" || inst.id == "spp-discount" || inst.id == "dyn-game-discount";
}

ExpansivenessReport check_expansive(const InstanceSpec& inst, std::size_t depth, const OmegaSource& source,
                                    const ClosureLimits& limits)
{
    if (limits.eval_budget == 0)
        throw BudgetError{"evaluation budget must be positive"};
    if (source.kind == SourceKind::Analytic) {
        if (inst.id == "spp-interest") {
            ExpansivenessReport r;
            r.mode = SourceKind::Analytic;
            r.verdict = Verdict::Expansive;
            r.note = "a >= 0 and a' >= 1 give b <= a + a'b for every b";
            return r;
        }
        if (inst.id == "spp-discount")
            return analytic_spp_discount(inst);
        if (inst.id == "dyn-game-discount")
            return analytic_discounted_game(inst);
        ExpansivenessReport r;
        r.mode = SourceKind::Analytic;
        r.verdict = Verdict::Unknown;
        r.note = "no closed-form verdict for '" + inst.id + "'; use sample or from-graph mode";
        return r;
    }

    const Closure c = close(inst, shapes_for(inst, source), depth, limits, true);
    ExpansivenessReport r;
    r.mode = source.kind;
    r.evaluations = c.sample.evaluations;
    if (c.violation) {
        r.verdict = Verdict::NotExpansive;
        r.depth = c.violation->depth;
        r.witness = witness_from_violation(inst, c);
        return r;
    }
    r.depth = depth;
    if (c.sample.capped || c.sample.budget_exhausted) {
        r.verdict = Verdict::Unknown;
        r.note = c.sample.capped ? "value set cap reached" : "evaluation budget exhausted";
        return r;
    }
    r.verdict = Verdict::Expansive;
    r.note = "no violation over the sampled payloads up to depth " + std::to_string(depth);
    return r;
}

void ConstructionTree::evaluate()
{
    if (!instance)
        throw NotAWitness{"construction tree without an instance"};
    const auto& dom = instance->domain;
    const auto& mod = instance->modality;
    std::vector<char> done(nodes.size(), 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t n, std::size_t guard) {
        if (guard > nodes.size())
            throw NotAWitness{"construction tree has a cycle"};
        if (done[n])
            return;
        auto& node = nodes[n];
        if (node.leaf) {
            node.value = node.is_xi ? dom.xi() : dom.top();
        } else {
            std::vector<WeightValue> args;
            for (auto c : node.children) {
                if (c >= nodes.size())
                    throw NotAWitness{"child index out of range"};
                go(c, guard + 1);
                args.push_back(nodes[c].value);
            }
            node.value = mod.apply(dom, node.payload, args);
        }
        done[n] = 1;
    };
    if (!nodes.empty())
        go(0, 0);
}

std::vector<WeightValue> ConstructionTree::slot_values(std::size_t node) const
{
    std::vector<WeightValue> out;
    for (auto c : nodes[node].children)
        out.push_back(nodes[c].value);
    return out;
}

std::size_t ConstructionTree::height(std::size_t node) const
{
    std::size_t h = 0;
    for (auto c : nodes[node].children)
        h = std::max(h, 1 + height(c));
    return h;
}

const WeightValue& Witness::child_value() const { return tree.nodes[tree.nodes[0].children.at(child)].value; }

namespace {

Json node_to_json(const ConstructionTree& t, std::size_t n)
{
    const auto& node = t.nodes[n];
    if (node.leaf)
        return Json{{"leaf", node.is_xi ? "xi" : "top"}, {"value", weight_to_json(node.value)}};
    Json children = Json::array();
    for (auto c : node.children)
        children.push_back(node_to_json(t, c));
    return Json{{"payload", payload_to_json(t.instance->modality, node.payload)},
                {"value", weight_to_json(node.value)},
                {"children", std::move(children)}};
}

std::size_t node_from_json(ConstructionTree& t, const Json& j, std::size_t depth)
{
    if (depth > 10000)
        throw SchemaError{"construction tree too deep"};
    if (!j.is_object())
        throw SchemaError{"tree node must be an object"};
    const std::size_t me = t.nodes.size();
    t.nodes.emplace_back();
    if (j.contains("leaf")) {
        const auto& l = j["leaf"];
        if (l != "xi" && l != "top")
            throw SchemaError{"leaf must be \"xi\" or \"top\""};
        t.nodes[me].leaf = true;
        t.nodes[me].is_xi = l == "xi";
        return me;
    }
    if (!j.contains("children") || !j["children"].is_array())
        throw SchemaError{"internal tree node needs a children array"};
    t.nodes[me].leaf = false;
    const auto k = j["children"].size();
    t.nodes[me].payload = payload_from_json(t.instance->modality, j.contains("payload") ? j["payload"] : Json{}, k,
                                            t.instance->mode());
    for (const auto& c : j["children"]) {
        const auto child = node_from_json(t, c, depth + 1);
        t.nodes[me].children.push_back(child);
    }
    return me;
}

} // namespace

Json witness_to_json(const Witness& w)
{
    const auto& inst = *w.tree.instance;
    return Json{{"instance", Json{{"id", inst.id}, {"params", inst.params}}},
                {"child", w.child},
                {"child_value", weight_to_json(w.child_value())},
                {"sigma", weight_to_json(w.sigma())},
                {"tree", node_to_json(w.tree, 0)}};
}

Witness witness_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("instance") || !j.contains("tree") || !j.contains("child"))
        throw SchemaError{"witness needs instance, tree and child"};
    const auto& hdr = j["instance"];
    Witness w;
    w.tree.instance = make_instance(hdr.at("id").get<std::string>(), hdr.contains("params") ? hdr["params"] : Json::object());
    node_from_json(w.tree, j["tree"], 0);
    if (!j["child"].is_number_unsigned())
        throw SchemaError{"child must be a slot index"};
    w.child = j["child"].get<std::size_t>();
    w.tree.evaluate();
    return w;
}

Json report_to_json(const ExpansivenessReport& r)
{
    Json out{{"verdict", verdict_name(r.verdict)}, {"mode", source_name(r.mode)}, {"depth", r.depth}};
    if (r.witness) {
        out["witness"] = witness_to_json(*r.witness);
    }
    out["evaluations"] = r.evaluations;
    if (!r.note.empty())
        out["note"] = r.note;
    return out;
}

WeightedGraph contraction_coalgebra(const Witness& w)
{
    ConstructionTree t = w.tree;
    if (t.nodes.empty() || t.nodes[0].leaf)
        throw NotAWitness{"witness root must be a σ application"};
    t.evaluate();
    const auto& dom = t.instance->domain;
    const auto& root = t.nodes[0];
    if (w.child >= root.children.size())
        throw NotAWitness{"offending slot " + std::to_string(w.child) + " out of range"};
    const std::size_t j = root.children[w.child];
    if (dom.leq(t.nodes[j].value, root.value))
        throw NotAWitness{"slot value " + to_string(t.nodes[j].value) + " is below sigma " + to_string(root.value)};

    std::vector<std::int64_t> id(t.nodes.size(), -1);
    StateId next = 0;
    std::function<void(std::size_t)> post = [&](std::size_t n) {
        if (id[n] >= 0)
            return;
        for (auto c : t.nodes[n].children)
            post(c);
        id[n] = next++;
    };
    for (auto c : root.children)
        post(c);

    auto slots_of = [&](const ConstructionTree::Node& n) {
        std::vector<StateId> s;
        for (auto c : n.children)
            s.push_back(static_cast<StateId>(id[c]));
        return s;
    };

    std::vector<State> states(next);
    for (std::size_t n = 1; n < t.nodes.size(); ++n) {
        if (id[n] < 0)
            continue;
        const auto& node = t.nodes[n];
        auto& st = states[static_cast<std::size_t>(id[n])];
        if (node.leaf)
            st.target = node.is_xi;
        else
            st.transitions.push_back(Transition{node.payload, slots_of(node)});
    }
    states[static_cast<std::size_t>(id[j])].transitions.push_back(Transition{root.payload, slots_of(root)});
    return WeightedGraph{t.instance, std::move(states)};
}

RunTreeTable run_tree_values(const WeightedGraph& g, std::size_t max_height, std::size_t node_budget)
{
    const auto V = g.size();
    const auto& dom = g.domain();
    const auto& mod = g.modality();
    RunTreeTable tab;
    tab.sets.resize(max_height + 1);
    std::vector<WeightValue> args;
    for (std::size_t h = 0; h <= max_height; ++h) {
        auto& level = tab.sets[h];
        level.resize(V);
        for (StateId x = 0; x < V; ++x) {
            const auto& s = g.states()[x];
            auto& out = level[x];
            if (s.target)
                out.push_back(dom.xi());
            for (const auto& t : s.transitions) {
                const std::size_t k = t.slots.size();
                if (k > 0 && h == 0)
                    continue;
                std::vector<const std::vector<WeightValue>*> choices;
                bool empty = false;
                for (auto y : t.slots) {
                    choices.push_back(&tab.sets[h - 1][y]);
                    empty = empty || choices.back()->empty();
                }
                if (empty)
                    continue;
                std::vector<std::size_t> idx(k, 0);
                args.assign(k, WeightValue{});
                while (true) {
                    if (++tab.nodes > node_budget)
                        throw CombinatorialBlowup{"run tree enumeration exceeded " + std::to_string(node_budget) +
                                                  " nodes"};
                    for (std::size_t i = 0; i < k; ++i)
                        args[i] = (*choices[i])[idx[i]];
                    out.push_back(mod.eval(dom, t.payload, args));
                    std::size_t i = 0;
                    while (i < k && ++idx[i] == choices[i]->size())
                        idx[i++] = 0;
                    if (i == k)
                        break;
                }
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
    }
    return tab;
}

WeightValue run_tree_infimum(const WeightedGraph& g, StateId x, std::size_t max_height, std::size_t node_budget)
{
    (void)g.state(x);
    const auto tab = run_tree_values(g, max_height, node_budget);
    return g.domain().meet(std::span<const WeightValue>{tab.sets[max_height][x]});
}

std::vector<RunTree> enumerate_run_trees(const WeightedGraph& g, StateId x, std::size_t h, std::size_t limit)
{
    std::vector<RunTree> out;
    const auto& s = g.state(x);
    if (s.target)
        out.push_back(RunTree{x, std::nullopt, {}});
    for (std::size_t j = 0; j < s.transitions.size(); ++j) {
        const auto& t = s.transitions[j];
        if (!t.slots.empty() && h == 0)
            continue;
        std::vector<std::vector<RunTree>> sub;
        bool empty = false;
        for (auto y : t.slots) {
            sub.push_back(enumerate_run_trees(g, y, h - 1, limit));
            empty = empty || sub.back().empty();
        }
        if (empty)
            continue;
        std::vector<std::size_t> idx(sub.size(), 0);
        while (true) {
            RunTree node{x, j, {}};
            for (std::size_t i = 0; i < sub.size(); ++i)
                node.children.push_back(sub[i][idx[i]]);
            out.push_back(std::move(node));
            if (out.size() > limit)
                throw CombinatorialBlowup{"more than " + std::to_string(limit) + " run trees"};
            std::size_t i = 0;
            while (i < sub.size() && ++idx[i] == sub[i].size())
                idx[i++] = 0;
            if (i == sub.size())
                break;
        }
    }
    return out;
}

WeightValue run_tree_value(const WeightedGraph& g, const RunTree& t)
{
    if (!t.transition)
        return g.domain().xi();
    std::vector<WeightValue> args;
    for (const auto& c : t.children)
        args.push_back(run_tree_value(g, c));
    return g.modality().eval(g.domain(), g.states()[t.state].transitions[*t.transition].payload, args);
}

CrossCheckReport cross_check(const WeightedGraph& g, const CrossCheckConfig& cfg)
{
    CrossCheckReport r;
    const auto& dom = g.domain();
    r.dijkstra = coalg_dijkstra(g, DijkstraOptions{false, true, 0.0});
    r.heap = coalg_dijkstra_heap(g, HeapOptions{cfg.queue, 0.0});
    r.kleene = kleene_gfp(g, KleeneOptions{cfg.max_iters, cfg.tol});
    if (cfg.run_tree_height) {
        try {
            const auto tab = run_tree_values(g, *cfg.run_tree_height, cfg.run_tree_budget);
            Valuation v;
            for (const auto& set : tab.sets.back())
                v.push_back(dom.meet(std::span<const WeightValue>{set}));
            r.run_tree = std::move(v);
        } catch (const CombinatorialBlowup& e) {
            r.run_tree_error = e.what();
        }
    }

    const bool fl = dom.mode() == NumericMode::Float;
    auto eq = [&](const WeightValue& a, const WeightValue& b) {
        return a == b || (fl && WeightDomain::distance(a, b) <= cfg.compare_tol);
    };
    auto above = [&](const WeightValue& a, const WeightValue& b) { return dom.less(b, a) && !eq(a, b); };

    const bool stabilized = r.kleene.status == SolveStatus::Stabilized;
    for (StateId x = 0; x < g.size(); ++x) {
        const auto& d = r.dijkstra.d[x];
        bool diff = false;
        if (!eq(d, r.heap.d[x])) {
            r.heap_agrees = false;
            diff = true;
        }
        if (stabilized ? !eq(d, r.kleene.d[x]) : above(d, r.kleene.d[x])) {
            r.kleene_agrees = false;
            diff = true;
        }
        if (r.run_tree && above(d, (*r.run_tree)[x])) {
            r.run_tree_agrees = false;
            diff = true;
        }
        if (diff)
            r.diff_states.push_back(x);
    }
    r.disagreement = !r.heap_agrees || !r.kleene_agrees || !r.run_tree_agrees;

    if (g.size() > 0) {
        try {
            ClosureLimits lim;
            lim.eval_budget = 1'000'000;
            lim.value_cap = 2000;
            r.expansive = check_expansive(g.instance(), 3, OmegaSource::from_graph(g), lim).verdict;
        } catch (const Error&) {
            r.expansive = Verdict::Unknown;
        }
    }
    r.caveat = "A monitored Dijkstra run that records no witnesses does not certify correctness on this input; "
               "correctness rests on expansiveness over all run trees, not only on the applications this run "
               "performed.";
    return r;
}

namespace {

Json result_json(const SolveResult& s)
{
    Json out{{"status", status_name(s.status)}, {"iterations", s.iterations}, {"values", valuation_to_json(s.d)}};
    if (!s.divergent.empty())
        out["divergent"] = s.divergent;
    return out;
}

} // namespace

Json report_to_json(const CrossCheckReport& r)
{
    Json out = Json::object();
    out["dijkstra"] = result_json(r.dijkstra);
    out["dijkstra_heap"] = result_json(r.heap);
    out["kleene"] = result_json(r.kleene);
    if (r.run_tree)
        out["run_tree"] = valuation_to_json(*r.run_tree);
    if (r.run_tree_error)
        out["run_tree_error"] = *r.run_tree_error;
    out["agreement"] = Json{{"dijkstra_heap", r.heap_agrees}, {"kleene", r.kleene_agrees}, {"run_tree", r.run_tree_agrees}};
    out["diff_states"] = r.diff_states;
    out["disagreement"] = r.disagreement;
    Json mon = Json::array();
    for (const auto& e : r.dijkstra.monitor) {
        Json m{{"state", e.state}, {"transition", e.transition}, {"slot_values", valuation_to_json(e.slot_values)},
               {"sigma", weight_to_json(e.sigma)}};
        if (e.slot)
            m["slot"] = *e.slot;
        else
            m["below_xi"] = true;
        mon.push_back(std::move(m));
    }
    out["monitor_witnesses"] = std::move(mon);
    if (r.dijkstra.monitor_truncated)
        out["monitor_truncated"] = true;
    if (r.expansive)
        out["expansive_from_graph_depth3"] = verdict_name(*r.expansive);
    out["caveat"] = r.caveat;
    return out;
}

BardiLopezReport bardi_lopez(const InstanceSpec& inst, std::size_t bound)
{
    if (inst.modality.kind() != Modality::Kind::DiscountedGame)
        throw InstanceMismatch{"the Bardi-Lopez condition concerns the discounted dynamic game"};
    BardiLopezReport b;
    b.l0 = inst.modality.l0().to_double();
    b.L = inst.modality.upper().to_double();
    b.r = inst.modality.discount().to_double();
    b.xi = inst.domain.xi().to_double();
    b.bound = bound;
    b.expansive = *inst.conditional_holds();
    auto le = [](double a, double c) { return a <= c + 1e-12 * std::max(1.0, std::fabs(c)); };
    if (b.r >= 1.0) {
        // ℓ0 / (1 - r) is infinite.
        b.chain_prefix = b.limit_ok = b.chain_uniform = b.one_step = true;
        return b;
    }
    const double rhs = b.l0 / (1.0 - b.r);
    double sum = 0.0;
    double rn = 1.0;
    for (std::size_t n = 0; n <= bound; ++n) {
        const double lhs = b.L * sum + rn * b.xi;
        if (!le(lhs, rhs)) {
            b.chain_prefix = false;
            b.chain_first_failure = n;
            break;
        }
        sum += rn;
        rn *= b.r;
    }
    b.limit_ok = le(b.L, b.l0);
    b.chain_uniform = b.chain_prefix && b.limit_ok;
    b.one_step = le(b.L + b.r * b.xi, rhs);
    return b;
}

Json report_to_json(const BardiLopezReport& b)
{
    Json out{{"l0", b.l0}, {"L", b.L}, {"r", b.r}, {"xi", b.xi}, {"bound", b.bound}, {"chain_prefix", b.chain_prefix}};
    if (b.chain_first_failure)
        out["chain_first_failure"] = *b.chain_first_failure;
    out["chain_limit"] = b.limit_ok;
    out["chain_uniform"] = b.chain_uniform;
    out["one_step_condition"] = b.one_step;
    out["expansive"] = b.expansive;
    out["agree"] = b.agree();
    return out;
}

} // namespace cspp
