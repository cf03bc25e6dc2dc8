#pragma once

#include "cspp/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cspp {

using Valuation = std::vector<WeightValue>;

struct TraceRow {
    std::size_t n = 0;
    Valuation d;
    std::vector<StateId> S;
    std::vector<StateId> Y;
    std::vector<StateId> P;
};

struct Trace {
    std::vector<TraceRow> rows;
};

enum class SolveStatus : std::uint8_t { Stabilized, IterationCapped, Frozen };

std::string_view status_name(SolveStatus s);

/// A σ application seen by the monitor that breaks expansiveness, either
/// because a slot value is not ⊑ the result or because the result is ⊏ ξ.
struct MonitorEvent {
    StateId state = 0;
    std::size_t transition = 0;
    std::vector<WeightValue> slot_values;
    WeightValue sigma;
    std::optional<std::size_t> slot;  // nullopt: result below ξ
};

struct SolveResult {
    Valuation d;
    SolveStatus status = SolveStatus::Frozen;
    std::size_t iterations = 0;
    /// Kleene only: states whose value strictly decreased in each of the last
    /// min(V, iterations) iterations.
    std::vector<StateId> divergent;
    std::vector<MonitorEvent> monitor;
    bool monitor_truncated = false;
    std::optional<Trace> trace;
};

/// Φ(d): ξ ⊓ meet of σ at targets, meet of σ (⊤ if none) elsewhere.
Valuation bellman_apply(const WeightedGraph& g, const Valuation& d);

/// Φ(d) on `active`, d elsewhere.
Valuation selective_bellman(const WeightedGraph& g, const Valuation& d, std::span<const StateId> active);

/// Value of Φ(d) at a single state.
WeightValue bellman_at(const WeightedGraph& g, const Valuation& d, StateId x);

struct KleeneOptions {
    std::size_t max_iters = 0;  // 0: 10 V + 100
    std::optional<double> tol;  // float mode; default 1e-9 there, exact otherwise
};

SolveResult kleene_gfp(const WeightedGraph& g, const KleeneOptions& opts = {});

/// Φ^0(⊤), ..., Φ^n(⊤).
std::vector<Valuation> kleene_iterates(const WeightedGraph& g, std::size_t n);

struct DijkstraOptions {
    bool trace = false;
    bool monitor = false;
    double tie_eps = 0.0;  // float mode only
};

SolveResult coalg_dijkstra(const WeightedGraph& g, const DijkstraOptions& opts = {});

enum class QueueKind : std::uint8_t { Fibonacci, Binary };

struct HeapOptions {
    QueueKind queue = QueueKind::Fibonacci;
    double tie_eps = 0.0;
};

SolveResult coalg_dijkstra_heap(const WeightedGraph& g, const HeapOptions& opts = {});

/// Tab-separated table: header "n d(0) ... S Y", one row per trace row.
std::string render_trace(const Trace& t);

std::string render_set(std::span<const StateId> s);

} // namespace cspp
