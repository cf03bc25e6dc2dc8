#pragma once

// Reference computations written without the library's solvers.

#include "cspp/graph.hpp"

#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<cspp::StateId> predecessors(const cspp::WeightedGraph& g, const std::set<cspp::StateId>& Y)
{
    std::vector<cspp::StateId> out;
    for (cspp::StateId x = 0; x < g.size(); ++x) {
        bool hit = false;
        for (const auto& t : g.states()[x].transitions)
            for (auto y : t.slots)
                hit = hit || Y.contains(y);
        if (hit)
            out.push_back(x);
    }
    return out;
}

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

// Textbook Dijkstra towards the targets on integer single-slot weights.
inline std::vector<std::int64_t> spp_distances(const cspp::WeightedGraph& g, bool unit_weights = false)
{
    const auto V = g.size();
    std::vector<std::vector<std::pair<cspp::StateId, std::int64_t>>> rev(V);
    for (cspp::StateId x = 0; x < V; ++x)
        for (const auto& t : g.states()[x].transitions) {
            const std::int64_t w = unit_weights ? 1 : t.payload.values.at(0).rational().num();
            rev[t.slots.at(0)].push_back({x, w});
        }
    std::vector<std::int64_t> d(V, kInf);
    using Item = std::pair<std::int64_t, cspp::StateId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (cspp::StateId x = 0; x < V; ++x)
        if (g.states()[x].target) {
            d[x] = 0;
            pq.push({0, x});
        }
    while (!pq.empty()) {
        auto [dy, y] = pq.top();
        pq.pop();
        if (dy != d[y])
            continue;
        for (auto [x, w] : rev[y])
            if (dy + w < d[x]) {
                d[x] = dy + w;
                pq.push({d[x], x});
            }
    }
    return d;
}

// Bottleneck (widest) path value by repeated relaxation; capacities as double,
// -1 for "no path" is never produced since the empty meet is 0.
inline std::vector<double> widest(const cspp::WeightedGraph& g)
{
    const auto V = g.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(V, 0.0);
    for (cspp::StateId x = 0; x < V; ++x)
        if (g.states()[x].target)
            d[x] = inf;
    for (std::size_t round = 0; round <= V; ++round)
        for (cspp::StateId x = 0; x < V; ++x)
            for (const auto& t : g.states()[x].transitions)
                d[x] = std::max(d[x], std::min(t.payload.values[0].to_double(), d[t.slots[0]]));
    return d;
}

} // namespace oracle
