#pragma once

#include "cspp/instances.hpp"
#include "cspp/modality.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cspp {

struct State {
    bool target = false;
    std::vector<Transition> transitions;

    friend bool operator==(const State&, const State&) = default;
};

struct Diagnostic {
    std::string code;
    std::size_t state = 0;
    std::optional<std::size_t> transition;
    std::string message;
};

std::string to_string(const Diagnostic& d);

/// A weighted G-graph: every state carries a target flag and a finite list of
/// transitions over the instance's modality.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(InstancePtr instance, std::vector<State> states);

    [[nodiscard]] const InstanceSpec& instance() const { return *instance_; }
    [[nodiscard]] const InstancePtr& instance_ptr() const { return instance_; }
    [[nodiscard]] const WeightDomain& domain() const { return instance_->domain; }
    [[nodiscard]] const Modality& modality() const { return instance_->modality; }

    [[nodiscard]] std::size_t size() const { return states_.size(); }
    [[nodiscard]] const std::vector<State>& states() const { return states_; }
    [[nodiscard]] const State& state(StateId x) const;
    [[nodiscard]] std::size_t transition_count() const;

    /// Union of the supports of x's transitions, sorted.
    [[nodiscard]] std::vector<StateId> successors(StateId x) const;

    /// Empty iff every slot is in range and every payload fits the modality.
    [[nodiscard]] std::vector<Diagnostic> validate() const;

    /// Sorts each transition list and removes duplicate transitions.
    void canonicalize();

    std::map<StateId, std::string> labels;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    InstancePtr instance_;
    std::vector<State> states_;
};

/// For each state y, the (x, j) pairs whose j-th transition of x has y in its
/// support.
class ReverseIndex {
public:
    using Entry = std::pair<StateId, std::uint32_t>;

    explicit ReverseIndex(const WeightedGraph& g);

    [[nodiscard]] std::span<const Entry> entries(StateId y) const
    {
        return {entries_.data() + offsets_[y], entries_.data() + offsets_[y + 1]};
    }
    [[nodiscard]] std::size_t size() const { return offsets_.size() - 1; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Entry> entries_;
};

/// {x | some transition of x has support meeting Y}, sorted.
std::vector<StateId> predecessors(const WeightedGraph& g, const ReverseIndex& idx, std::span<const StateId> Y);

} // namespace cspp
