#pragma once

#include "cspp/domain.hpp"
#include "cspp/weight.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cspp {

using StateId = std::uint32_t;

/// Instance-specific transition data. The meaning of `values` depends on the
/// modality: [weight] for add and tree-add, [weight, rate] for rate,
/// [capacity] for cap, [prob] for mult, per-slot weights for the game
/// modalities, per-slot probabilities for expectation, nothing otherwise.
struct Payload {
    std::vector<WeightValue> values;

    friend bool operator==(const Payload&, const Payload&) = default;
};

/// One element t of GX: a payload plus ordered successor slots.
struct Transition {
    Payload payload;
    std::vector<StateId> slots;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Distinct slot states, sorted.
std::vector<StateId> support(const Transition& t);

enum class IssueCode : std::uint8_t { ArityMismatch, NonEmptySupportRequired, PayloadSchema, ProbSum, CarrierViolation };

std::string_view issue_name(IssueCode c);

struct PayloadIssue {
    IssueCode code;
    std::string message;
};

/// A transition modality σ: payload + slot values -> weight.
class Modality {
public:
    enum class Kind : std::uint8_t {
        Identity,
        Successor,
        Add,
        Rate,
        Cap,
        Mult,
        TreeAdd,
        PairJoin,
        SetJoin,
        GameMax,
        DiscountedGame,
        Expectation,
    };
    enum class RateRange : std::uint8_t { Interest, Discount };

    static Modality identity();
    static Modality successor();
    static Modality add(bool is_signed);
    static Modality rate(RateRange range);
    static Modality cap();
    static Modality mult();
    static Modality tree_add(std::size_t arity);
    static Modality pair_join();
    static Modality set_join();
    static Modality game_max();
    static Modality discounted_game(WeightValue l0, WeightValue L, WeightValue r);
    static Modality expectation();

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::string_view name() const;
    [[nodiscard]] bool is_signed() const { return signed_; }
    [[nodiscard]] RateRange rate_range() const { return rate_range_; }
    [[nodiscard]] std::size_t tree_arity() const { return arity_; }
    [[nodiscard]] const WeightValue& l0() const { return l0_; }
    [[nodiscard]] const WeightValue& upper() const { return upper_; }
    [[nodiscard]] const WeightValue& discount() const { return r_; }

    /// Fixed slot count, or nullopt for variable arity (k >= 1).
    [[nodiscard]] std::optional<std::size_t> fixed_arity() const;
    /// Number of payload values for a transition with k slots.
    [[nodiscard]] std::size_t payload_size(std::size_t k) const;
    /// Payload field names in file order; per-slot fields are list-valued.
    [[nodiscard]] std::vector<std::string_view> payload_fields() const;
    [[nodiscard]] bool per_slot_payload() const;

    /// Structural and carrier problems of a transition payload with k slots.
    [[nodiscard]] std::vector<PayloadIssue> check_payload(const WeightDomain& dom, const Payload& p,
                                                          std::size_t k) const;

    /// σ(payload, slot values), validating arity, payload and carrier.
    [[nodiscard]] WeightValue apply(const WeightDomain& dom, const Payload& p,
                                    std::span<const WeightValue> slots) const;
    /// Same without validation; used in solver inner loops.
    [[nodiscard]] WeightValue eval(const WeightDomain& dom, const Payload& p,
                                   std::span<const WeightValue> slots) const;

private:
    explicit Modality(Kind k) : kind_{k} {}

    Kind kind_;
    bool signed_ = false;
    RateRange rate_range_ = RateRange::Interest;
    std::size_t arity_ = 1;
    WeightValue l0_{};
    WeightValue upper_{};
    WeightValue r_ = WeightValue::exact(1);
};

/// Compares σ applied to the slot-wise meets against the meet of σ over the
/// Cartesian product of the slot sets.
bool check_inf_distribution(const Modality& mod, const WeightDomain& dom, const Payload& p,
                            std::span<const std::vector<WeightValue>> slot_sets);

struct ExpansiveWitness {
    Payload payload;
    std::vector<WeightValue> slot_values;
    std::size_t index = 0;
    WeightValue slot_value;
    WeightValue sigma;
};

/// nullopt when every slot value is ⊑ σ(payload, slot values).
std::optional<ExpansiveWitness> check_expansive_on(const Modality& mod, const WeightDomain& dom, const Payload& p,
                                                   std::span<const WeightValue> slots);

} // namespace cspp
