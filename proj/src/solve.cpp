#include "cspp/solve.hpp"

#include "cspp/min_queue.hpp"

#include <algorithm>

namespace cspp {

namespace {

constexpr std::size_t kMonitorCap = 1000;

struct Evaluator {
    const WeightedGraph& g;
    const WeightDomain& dom;
    const Modality& mod;
    std::vector<WeightValue> buf;

    explicit Evaluator(const WeightedGraph& graph) : g{graph}, dom{graph.domain()}, mod{graph.modality()} {}

    const WeightValue& gather(const Transition& t, const Valuation& d, WeightValue& out)
    {
        buf.clear();
        for (auto y : t.slots)
            buf.push_back(d[y]);
        out = mod.eval(dom, t.payload, buf);
        return out;
    }

    WeightValue at(const Valuation& d, StateId x)
    {
        const State& s = g.states()[x];
        WeightValue acc = s.target ? dom.xi() : dom.top();
        WeightValue v;
        for (const auto& t : s.transitions)
            acc = dom.meet(acc, gather(t, d, v));
        return acc;
    }
};

bool within(const WeightDomain& dom, const WeightValue& a, const WeightValue& b, double eps)
{
    if (a == b)
        return true;
    return dom.mode() == NumericMode::Float && eps > 0 && WeightDomain::distance(a, b) <= eps;
}

std::vector<StateId> members(const std::vector<char>& flags)
{
    std::vector<StateId> out;
    for (StateId x = 0; x < flags.size(); ++x)
        if (flags[x])
            out.push_back(x);
    return out;
}

} // namespace

std::string_view status_name(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Stabilized: return "Stabilized";
    case SolveStatus::IterationCapped: return "IterationCapped";
    case SolveStatus::Frozen: return "Frozen";
    }
    return "?";
}

WeightValue bellman_at(const WeightedGraph& g, const Valuation& d, StateId x)
{
    Evaluator ev{g};
    return ev.at(d, x);
}

Valuation bellman_apply(const WeightedGraph& g, const Valuation& d)
{
    Evaluator ev{g};
    Valuation out(g.size());
    for (StateId x = 0; x < g.size(); ++x)
        out[x] = ev.at(d, x);
    return out;
}

Valuation selective_bellman(const WeightedGraph& g, const Valuation& d, std::span<const StateId> active)
{
    Evaluator ev{g};
    Valuation out = d;
    for (auto x : active) {
        (void)g.state(x);
        out[x] = ev.at(d, x);
    }
    return out;
}

std::vector<Valuation> kleene_iterates(const WeightedGraph& g, std::size_t n)
{
    std::vector<Valuation> out;
    out.emplace_back(g.size(), g.domain().top());
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(bellman_apply(g, out.back()));
    return out;
}

SolveResult kleene_gfp(const WeightedGraph& g, const KleeneOptions& opts)
{
    const auto V = g.size();
    const auto& dom = g.domain();
    const std::size_t cap = opts.max_iters ? opts.max_iters : 10 * V + 100;
    const bool float_mode = dom.mode() == NumericMode::Float;
    const double tol = float_mode ? opts.tol.value_or(1e-9) : 0.0;

    SolveResult res;
    res.d.assign(V, dom.top());
    std::vector<std::size_t> streak(V, 0);
    for (std::size_t it = 1; it <= cap; ++it) {
        Valuation next = bellman_apply(g, res.d);
        bool stable = true;
        for (StateId x = 0; x < V; ++x) {
            if (dom.less(next[x], res.d[x]))
                ++streak[x];
            else
                streak[x] = 0;
            if (next[x] != res.d[x] && !(float_mode && WeightDomain::distance(next[x], res.d[x]) <= tol))
                stable = false;
        }
        res.d = std::move(next);
        res.iterations = it;
        if (stable) {
            res.status = SolveStatus::Stabilized;
            return res;
        }
    }
    res.status = SolveStatus::IterationCapped;
    const std::size_t window = std::max<std::size_t>(1, std::min(V, res.iterations));
    for (StateId x = 0; x < V; ++x)
        if (streak[x] >= window)
            res.divergent.push_back(x);
    return res;
}

SolveResult coalg_dijkstra(const WeightedGraph& g, const DijkstraOptions& opts)
{
    const auto V = g.size();
    const auto& dom = g.domain();
    const ReverseIndex rev{g};
    Evaluator ev{g};

    SolveResult res;
    res.status = SolveStatus::Frozen;
    res.d.assign(V, dom.top());
    std::vector<char> frozen(V, 0);
    std::vector<StateId> Y;
    std::size_t frozen_count = 0;

    if (opts.trace)
        res.trace = Trace{{TraceRow{0, res.d, {}, {}, {}}}};

    for (StateId x = 0; x < V; ++x) {
        if (g.states()[x].target) {
            res.d[x] = dom.xi();
            frozen[x] = 1;
            Y.push_back(x);
            ++frozen_count;
        }
    }
    std::size_t n = 1;
    if (opts.trace)
        res.trace->rows.push_back({1, res.d, Y, Y, {}});

    WeightValue tmp;
    auto inspect = [&](StateId x, std::size_t j, const WeightValue& v) {
        auto record = [&](std::optional<std::size_t> slot) {
            if (res.monitor.size() >= kMonitorCap) {
                res.monitor_truncated = true;
                return;
            }
            res.monitor.push_back({x, j, ev.buf, v, slot});
        };
        for (std::size_t i = 0; i < ev.buf.size(); ++i) {
            if (!dom.leq(ev.buf[i], v)) {
                record(i);
                return;
            }
        }
        if (dom.less(v, dom.xi()))
            record(std::nullopt);
    };
    // Applications Algo. 2 skips because their source is already frozen.
    std::vector<std::pair<StateId, std::uint32_t>> seen;
    auto audit_frozen = [&] {
        seen.clear();
        for (auto y : Y)
            for (const auto& e : rev.entries(y))
                if (frozen[e.first])
                    seen.push_back(e);
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (const auto& [x, j] : seen)
            inspect(x, j, ev.gather(g.states()[x].transitions[j], res.d, tmp));
    };

    std::vector<std::uint32_t> stamp(V, 0);
    std::uint32_t epoch = 0;
    std::vector<StateId> active;
    std::vector<WeightValue> fresh;
    if (opts.monitor)
        audit_frozen();

    while (frozen_count < V) {
        ++epoch;
        active.clear();
        for (auto y : Y)
            for (const auto& [x, j] : rev.entries(y))
                if (!frozen[x] && stamp[x] != epoch) {
                    stamp[x] = epoch;
                    active.push_back(x);
                }
        std::sort(active.begin(), active.end());

        fresh.clear();
        for (auto x : active) {
            if (!opts.monitor) {
                fresh.push_back(ev.at(res.d, x));
                continue;
            }
            const State& s = g.states()[x];
            WeightValue acc = dom.top();
            for (std::size_t j = 0; j < s.transitions.size(); ++j) {
                const WeightValue& v = ev.gather(s.transitions[j], res.d, tmp);
                acc = dom.meet(acc, v);
                inspect(x, j, v);
            }
            fresh.push_back(acc);
        }
        for (std::size_t i = 0; i < active.size(); ++i)
            res.d[active[i]] = fresh[i];

        // Minimal freezing: the whole ⊑-minimal tie group of unfrozen states.
        std::optional<WeightValue> best;
        for (StateId x = 0; x < V; ++x)
            if (!frozen[x] && (!best || dom.less(res.d[x], *best)))
                best = res.d[x];
        Y.clear();
        for (StateId x = 0; x < V; ++x)
            if (!frozen[x] && within(dom, res.d[x], *best, opts.tie_eps))
                Y.push_back(x);
        for (auto y : Y)
            frozen[y] = 1;
        frozen_count += Y.size();
        ++n;
        if (opts.trace)
            res.trace->rows.push_back({n, res.d, members(frozen), Y, active});
        if (opts.monitor)
            audit_frozen();
    }
    res.iterations = n;
    return res;
}

namespace {

struct DomLess {
    const WeightDomain* dom;
    bool operator()(const WeightValue& a, const WeightValue& b) const { return dom->less(a, b); }
};

template <class Queue>
SolveResult heap_solve(const WeightedGraph& g, double tie_eps)
{
    const auto V = g.size();
    const auto& dom = g.domain();
    const ReverseIndex rev{g};
    Evaluator ev{g};

    Queue q{V, DomLess{&dom}};

    SolveResult res;
    res.status = SolveStatus::Frozen;
    res.d.assign(V, dom.top());
    std::vector<char> frozen(V, 0);
    std::vector<StateId> Y;
    std::size_t frozen_count = 0;
    for (StateId x = 0; x < V; ++x) {
        if (g.states()[x].target) {
            res.d[x] = dom.xi();
            frozen[x] = 1;
            Y.push_back(x);
            ++frozen_count;
        }
    }

    // Offsets give each transition a global id for de-duplication per round.
    std::vector<std::size_t> base(V + 1, 0);
    for (StateId x = 0; x < V; ++x)
        base[x + 1] = base[x] + g.states()[x].transitions.size();
    std::vector<std::uint32_t> stamp(base[V], 0);
    std::uint32_t epoch = 0;
    std::vector<std::pair<StateId, WeightValue>> updates;
    WeightValue tmp;
    std::size_t rounds = 1;

    while (frozen_count < V) {
        ++epoch;
        updates.clear();
        for (auto y : Y) {
            for (const auto& [x, j] : rev.entries(y)) {
                if (frozen[x])
                    continue;
                auto& st = stamp[base[x] + j];
                if (st == epoch)
                    continue;
                st = epoch;
                updates.emplace_back(x, ev.gather(g.states()[x].transitions[j], res.d, tmp));
            }
        }
        for (const auto& [x, v] : updates) {
            if (dom.less(v, res.d[x])) {
                res.d[x] = v;
                q.push_or_decrease(x, v);
            }
        }

        Y.clear();
        if (q.empty()) {
            for (StateId x = 0; x < V; ++x)
                if (!frozen[x])
                    Y.push_back(x);
        } else {
            const WeightValue m = q.min_key();
            while (!q.empty() && within(dom, q.min_key(), m, tie_eps))
                Y.push_back(q.pop().first);
            std::sort(Y.begin(), Y.end());
        }
        for (auto y : Y)
            frozen[y] = 1;
        frozen_count += Y.size();
        ++rounds;
    }
    res.iterations = rounds;
    return res;
}

} // namespace

SolveResult coalg_dijkstra_heap(const WeightedGraph& g, const HeapOptions& opts)
{
    if (opts.queue == QueueKind::Binary)
        return heap_solve<LazyBinaryHeap<WeightValue, DomLess>>(g, opts.tie_eps);
    return heap_solve<FibonacciHeap<WeightValue, DomLess>>(g, opts.tie_eps);
}

std::string render_set(std::span<const StateId> s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string render_trace(const Trace& t)
{
    std::string out;
    const std::size_t V = t.rows.empty() ? 0 : t.rows.front().d.size();
    out += "n";
    for (std::size_t x = 0; x < V; ++x)
        out += "\td(" + std::to_string(x) + ")";
    out += "\tS\tY\n";
    for (const auto& r : t.rows) {
        out += std::to_string(r.n);
        for (const auto& v : r.d)
            out += "\t" + to_string(v);
        out += "\t" + render_set(r.S) + "\t" + render_set(r.Y) + "\n";
    }
    return out;
}

} // namespace cspp
