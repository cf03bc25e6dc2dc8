#pragma once

#include "cspp/graph.hpp"
#include "cspp/random_graph.hpp"
#include "cspp/solve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cspp {

enum class SourceKind : std::uint8_t { FromGraph, Sample, Analytic };

std::string_view source_name(SourceKind k);

struct OmegaSource {
    SourceKind kind = SourceKind::Sample;
    const WeightedGraph* graph = nullptr;  // FromGraph
    std::uint64_t seed = 0;                // Sample
    std::size_t draws = 4;                 // Sample

    static OmegaSource from_graph(const WeightedGraph& g) { return {SourceKind::FromGraph, &g, 0, 0}; }
    static OmegaSource sample(std::uint64_t seed = 0, std::size_t draws = 4) { return {SourceKind::Sample, nullptr, seed, draws}; }
    static OmegaSource analytic() { return {SourceKind::Analytic, nullptr, 0, 0}; }
};

/// How an element of Ω^σ was first produced.
struct ValueOrigin {
    std::optional<std::size_t> shape;  // nullopt for ξ and ⊤
    std::vector<std::size_t> args;     // indices into OmegaSigmaSample::values
};

struct OmegaSigmaSample {
    std::size_t depth = 0;
    std::vector<PayloadShape> shapes;
    std::vector<WeightValue> values;  // insertion order; values[0] = ξ
    std::vector<std::size_t> level;   // level at which each value appeared
    std::vector<ValueOrigin> origin;
    bool capped = false;
    bool budget_exhausted = false;
    std::size_t evaluations = 0;

    /// Members of Ω^σ_n, numerically sorted.
    [[nodiscard]] std::vector<WeightValue> at_depth(std::size_t n) const;
};

struct ClosureLimits {
    std::size_t value_cap = 10000;
    std::size_t eval_budget = 10'000'000;
};

OmegaSigmaSample omega_sigma(const InstanceSpec& inst, std::size_t depth, const OmegaSource& source,
                             const ClosureLimits& limits = {});

/// Witness of a non-expansive σ application, as a tree of σ applications
/// bottoming out in ξ and ⊤.
struct ConstructionTree {
    struct Node {
        bool leaf = true;
        bool is_xi = true;  // leaves only
        Payload payload;    // internal only
        std::vector<std::size_t> children;
        WeightValue value;
    };

    InstancePtr instance;
    std::vector<Node> nodes;  // nodes[0] is the root

    /// Recomputes node values bottom-up from the labels.
    void evaluate();
    [[nodiscard]] std::vector<WeightValue> slot_values(std::size_t node) const;
    [[nodiscard]] std::size_t height(std::size_t node = 0) const;
};

struct Witness {
    ConstructionTree tree;
    std::size_t child = 0;  // offending slot of the root
    [[nodiscard]] const WeightValue& child_value() const;
    [[nodiscard]] const WeightValue& sigma() const { return tree.nodes[0].value; }
};

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

enum class Verdict : std::uint8_t { Expansive, NotExpansive, Unknown };

std::string_view verdict_name(Verdict v);

struct ExpansivenessReport {
    Verdict verdict = Verdict::Unknown;
    SourceKind mode = SourceKind::Sample;
    std::size_t depth = 0;  // depth checked, or the witness depth
    std::optional<Witness> witness;
    std::size_t evaluations = 0;
    std::string note;
};

Json report_to_json(const ExpansivenessReport& r);

/// Checks b ⊑ σ(t) for every sampled payload with slot values in Ω^σ_depth.
/// Analytic mode is available for spp-interest, spp-discount and
/// dyn-game-discount; elsewhere the verdict is Unknown.
ExpansivenessReport check_expansive(const InstanceSpec& inst, std::size_t depth, const OmegaSource& source,
                                    const ClosureLimits& limits = {});

bool has_analytic_verdict(const InstanceSpec& inst);

/// The contraction coalgebra of a witness: tree nodes minus the root,
/// numbered in post-order; the offending child also gets the root's
/// transition.
WeightedGraph contraction_coalgebra(const Witness& w);

/// Values of all run trees of height <= h, per state, for h = 0..max_height.
struct RunTreeTable {
    std::vector<std::vector<std::vector<WeightValue>>> sets;  // [h][x]
    std::size_t nodes = 0;
};

RunTreeTable run_tree_values(const WeightedGraph& g, std::size_t max_height, std::size_t node_budget = 1'000'000);

/// ⊑-infimum of σ-values of run trees of height <= max_height rooted at x.
WeightValue run_tree_infimum(const WeightedGraph& g, StateId x, std::size_t max_height,
                             std::size_t node_budget = 1'000'000);

struct RunTree {
    StateId state = 0;
    std::optional<std::size_t> transition;  // nullopt: leaf
    std::vector<RunTree> children;
};

/// Materializes every run tree of height <= h at x (small graphs only).
std::vector<RunTree> enumerate_run_trees(const WeightedGraph& g, StateId x, std::size_t h, std::size_t limit = 100000);
WeightValue run_tree_value(const WeightedGraph& g, const RunTree& t);

struct CrossCheckConfig {
    std::size_t max_iters = 0;
    std::optional<double> tol;
    std::optional<std::size_t> run_tree_height;
    std::size_t run_tree_budget = 1'000'000;
    double compare_tol = 1e-6;  // float mode only
    QueueKind queue = QueueKind::Fibonacci;
};

struct CrossCheckReport {
    SolveResult dijkstra;
    SolveResult heap;
    SolveResult kleene;
    std::optional<Valuation> run_tree;
    std::optional<std::string> run_tree_error;
    bool heap_agrees = true;
    bool kleene_agrees = true;
    bool run_tree_agrees = true;
    std::vector<StateId> diff_states;
    bool disagreement = false;
    std::optional<Verdict> expansive;  // FromGraph, depth 3
    std::string caveat;
};

CrossCheckReport cross_check(const WeightedGraph& g, const CrossCheckConfig& cfg = {});
Json report_to_json(const CrossCheckReport& r);

struct BardiLopezReport {
    double l0 = 0, L = 0, r = 1, xi = 0;
    std::size_t bound = 0;
    bool chain_prefix = true;
    std::optional<std::size_t> chain_first_failure;
    bool limit_ok = true;
    bool chain_uniform = true;
    bool one_step = true;
    bool expansive = true;
    [[nodiscard]] bool agree() const { return chain_uniform == expansive; }
};

BardiLopezReport bardi_lopez(const InstanceSpec& inst, std::size_t bound = 64);
Json report_to_json(const BardiLopezReport& r);

} // namespace cspp
