#pragma once

#include "cspp/graph.hpp"

#include <random>

namespace cspp {

/// A payload together with its slot count (needed for payload-free
/// variable-arity modalities such as set-join).
struct PayloadShape {
    Payload payload;
    std::size_t arity = 1;

    friend bool operator==(const PayloadShape&, const PayloadShape&) = default;
};

struct RandomGraphOptions {
    std::size_t max_states = 8;
    bool exact_states = false;
    std::size_t max_transitions = 3;
    std::size_t max_arity = 3;
    double target_prob = 0.3;
    bool acyclic = false;  // slots only point to lower ids
};

Payload random_payload(const InstanceSpec& inst, std::mt19937_64& rng, std::size_t k);

WeightedGraph random_graph(const InstancePtr& inst, std::mt19937_64& rng, const RandomGraphOptions& opts = {});

/// Fixed per-instance grid followed by `draws` random payloads, all of arity
/// at most 3.
std::vector<PayloadShape> sample_payloads(const InstanceSpec& inst, std::uint64_t seed, std::size_t draws);

/// Distinct (payload, arity) pairs occurring in a graph, in file order.
std::vector<PayloadShape> graph_payloads(const WeightedGraph& g);

/// SPP-style graph with V states, E single-slot transitions and weights in
/// [1, 100]; every hundredth state is a target.
WeightedGraph random_sparse_graph(const InstancePtr& inst, std::size_t V, std::size_t E, std::uint64_t seed);

} // namespace cspp
