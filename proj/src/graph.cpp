#include "cspp/graph.hpp"

#include "cspp/errors.hpp"

#include <algorithm>

namespace cspp {

std::string to_string(const Diagnostic& d)
{
    std::string s = d.code + " at state " + std::to_string(d.state);
    if (d.transition)
        s += ", transition " + std::to_string(*d.transition);
    if (!d.message.empty())
        s += ": " + d.message;
    return s;
}

WeightedGraph::WeightedGraph(InstancePtr instance, std::vector<State> states)
    : instance_{std::move(instance)}, states_{std::move(states)}
{
    if (!instance_)
        throw SchemaError{"graph without an instance"};
}

const State& WeightedGraph::state(StateId x) const
{
    if (x >= states_.size())
        throw IndexOutOfRange{"state " + std::to_string(x) + " out of range (V = " + std::to_string(states_.size()) + ")"};
    return states_[x];
}

std::size_t WeightedGraph::transition_count() const
{
    std::size_t n = 0;
    for (const auto& s : states_)
        n += s.transitions.size();
    return n;
}

std::vector<StateId> WeightedGraph::successors(StateId x) const
{
    std::vector<StateId> out;
    for (const auto& t : state(x).transitions)
        out.insert(out.end(), t.slots.begin(), t.slots.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Diagnostic> WeightedGraph::validate() const
{
    std::vector<Diagnostic> out;
    const auto V = states_.size();
    for (std::size_t x = 0; x < V; ++x) {
        const auto& ts = states_[x].transitions;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            for (auto y : ts[j].slots) {
                if (y >= V)
                    out.push_back({"DanglingStateRef", x, j, "slot " + std::to_string(y) + " >= V"});
            }
            for (auto& issue : modality().check_payload(domain(), ts[j].payload, ts[j].slots.size()))
                out.push_back({std::string{issue_name(issue.code)}, x, j, std::move(issue.message)});
        }
    }
    return out;
}

namespace {

bool transition_less(const Transition& a, const Transition& b)
{
    if (a.slots != b.slots)
        return a.slots < b.slots;
    return std::lexicographical_compare(a.payload.values.begin(), a.payload.values.end(), b.payload.values.begin(),
                                        b.payload.values.end());
}

} // namespace

void WeightedGraph::canonicalize()
{
    for (auto& s : states_) {
        std::sort(s.transitions.begin(), s.transitions.end(), transition_less);
        s.transitions.erase(std::unique(s.transitions.begin(), s.transitions.end()), s.transitions.end());
    }
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b)
{
    if (a.instance_ != b.instance_) {
        if (!a.instance_ || !b.instance_ || a.instance_->id != b.instance_->id ||
            a.instance_->params != b.instance_->params)
            return false;
    }
    return a.states_ == b.states_ && a.labels == b.labels;
}

ReverseIndex::ReverseIndex(const WeightedGraph& g)
{
    const auto V = g.size();
    offsets_.assign(V + 1, 0);
    std::vector<StateId> seen(V, static_cast<StateId>(-1));
    std::vector<std::uint32_t> seen_t(V, 0);

    // Two passes: count, then fill. A (x, j) pair is listed once per distinct
    // support element.
    auto visit = [&](auto&& emit) {
        for (StateId x = 0; x < V; ++x) {
            const auto& ts = g.states()[x].transitions;
            for (std::uint32_t j = 0; j < ts.size(); ++j) {
                for (auto y : ts[j].slots) {
                    if (y >= V)
                        throw DanglingStateRef{"state " + std::to_string(x) + ", transition " + std::to_string(j) +
                                               ": slot " + std::to_string(y) + " out of range"};
                    if (seen[y] == x && seen_t[y] == j)
                        continue;
                    seen[y] = x;
                    seen_t[y] = j;
                    emit(y, x, j);
                }
            }
        }
    };
    visit([&](StateId y, StateId, std::uint32_t) { ++offsets_[y + 1]; });
    for (std::size_t i = 0; i < V; ++i)
        offsets_[i + 1] += offsets_[i];
    entries_.resize(offsets_[V]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    std::fill(seen.begin(), seen.end(), static_cast<StateId>(-1));
    visit([&](StateId y, StateId x, std::uint32_t j) { entries_[cursor[y]++] = {x, j}; });
}

std::vector<StateId> predecessors(const WeightedGraph& g, const ReverseIndex& idx, std::span<const StateId> Y)
{
    std::vector<StateId> out;
    for (auto y : Y) {
        if (y >= g.size())
            throw IndexOutOfRange{"state " + std::to_string(y) + " out of range"};
        for (const auto& [x, j] : idx.entries(y))
            out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace cspp
