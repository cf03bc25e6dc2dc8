#include "cspp/modality.hpp"

#include "cspp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cspp {

std::vector<StateId> support(const Transition& t)
{
    std::vector<StateId> s = t.slots;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::string_view issue_name(IssueCode c)
{
    switch (c) {
    case IssueCode::ArityMismatch: return "ArityMismatch";
    case IssueCode::NonEmptySupportRequired: return "NonEmptySupportRequired";
    case IssueCode::PayloadSchema: return "PayloadSchema";
    case IssueCode::ProbSum: return "ProbSum";
    case IssueCode::CarrierViolation: return "CarrierViolation";
    }
    return "?";
}

Modality Modality::identity() { return Modality{Kind::Identity}; }
Modality Modality::successor() { return Modality{Kind::Successor}; }

Modality Modality::add(bool is_signed)
{
    Modality m{Kind::Add};
    m.signed_ = is_signed;
    return m;
}

Modality Modality::rate(RateRange range)
{
    Modality m{Kind::Rate};
    m.rate_range_ = range;
    return m;
}

Modality Modality::cap() { return Modality{Kind::Cap}; }
Modality Modality::mult() { return Modality{Kind::Mult}; }

Modality Modality::tree_add(std::size_t arity)
{
    if (arity < 1)
        throw ParamRange{"tree arity must be at least 1"};
    Modality m{Kind::TreeAdd};
    m.arity_ = arity;
    return m;
}

Modality Modality::pair_join() { return Modality{Kind::PairJoin}; }
Modality Modality::set_join() { return Modality{Kind::SetJoin}; }
Modality Modality::game_max() { return Modality{Kind::GameMax}; }

Modality Modality::discounted_game(WeightValue l0, WeightValue L, WeightValue r)
{
    if (!l0.is_finite() || !L.is_finite() || l0.sign() < 0 || L < l0)
        throw ParamRange{"discounted game needs 0 <= l0 <= L < inf"};
    if (!r.is_finite() || r.sign() <= 0 || WeightValue::exact(1) < r)
        throw ParamRange{"discount r must lie in (0, 1]"};
    Modality m{Kind::DiscountedGame};
    m.l0_ = l0;
    m.upper_ = L;
    m.r_ = r;
    return m;
}

Modality Modality::expectation() { return Modality{Kind::Expectation}; }

std::string_view Modality::name() const
{
    switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::Successor: return "successor";
    case Kind::Add: return signed_ ? "add-signed" : "add";
    case Kind::Rate: return rate_range_ == RateRange::Interest ? "rate-interest" : "rate-discount";
    case Kind::Cap: return "cap";
    case Kind::Mult: return "mult";
    case Kind::TreeAdd: return "tree-add";
    case Kind::PairJoin: return "pair-join";
    case Kind::SetJoin: return "set-join";
    case Kind::GameMax: return "game-max";
    case Kind::DiscountedGame: return "discounted-game";
    case Kind::Expectation: return "expectation";
    }
    return "?";
}

std::optional<std::size_t> Modality::fixed_arity() const
{
    switch (kind_) {
    case Kind::TreeAdd: return arity_;
    case Kind::PairJoin: return 2;
    case Kind::SetJoin:
    case Kind::GameMax:
    case Kind::DiscountedGame:
    case Kind::Expectation: return std::nullopt;
    default: return 1;
    }
}

bool Modality::per_slot_payload() const
{
    return kind_ == Kind::GameMax || kind_ == Kind::DiscountedGame || kind_ == Kind::Expectation;
}

std::size_t Modality::payload_size(std::size_t k) const
{
    switch (kind_) {
    case Kind::Add:
    case Kind::Cap:
    case Kind::Mult:
    case Kind::TreeAdd: return 1;
    case Kind::Rate: return 2;
    case Kind::GameMax:
    case Kind::DiscountedGame:
    case Kind::Expectation: return k;
    default: return 0;
    }
}

std::vector<std::string_view> Modality::payload_fields() const
{
    switch (kind_) {
    case Kind::Add:
    case Kind::TreeAdd: return {"weight"};
    case Kind::Rate: return {"weight", "rate"};
    case Kind::Cap: return {"capacity"};
    case Kind::Mult: return {"prob"};
    case Kind::GameMax:
    case Kind::DiscountedGame: return {"weights"};
    case Kind::Expectation: return {"probs"};
    default: return {};
    }
}

std::vector<PayloadIssue> Modality::check_payload(const WeightDomain& dom, const Payload& p, std::size_t k) const
{
    std::vector<PayloadIssue> out;
    auto issue = [&](IssueCode c, std::string msg) { out.push_back({c, std::move(msg)}); };

    if (auto fixed = fixed_arity()) {
        if (k != *fixed)
            issue(IssueCode::ArityMismatch,
                  std::string{name()} + " expects " + std::to_string(*fixed) + " slot(s), got " + std::to_string(k));
    } else if (k == 0) {
        issue(IssueCode::NonEmptySupportRequired, std::string{name()} + " needs at least one slot");
    }
    if (p.values.size() != payload_size(k)) {
        issue(IssueCode::PayloadSchema, std::string{name()} + " payload expects " + std::to_string(payload_size(k)) +
                                            " value(s), got " + std::to_string(p.values.size()));
        return out;
    }

    const auto zero = WeightValue::exact(0);
    const auto one = WeightValue::exact(1);
    auto need = [&](bool ok, const WeightValue& v, std::string_view what) {
        if (!ok)
            issue(IssueCode::CarrierViolation, std::string{what} + " " + to_string(v) + " out of range");
    };
    auto nonneg_finite = [&](const WeightValue& v) { return v.is_finite() && v.sign() >= 0; };

    switch (kind_) {
    case Kind::Add:
        if (signed_)
            need(p.values[0].is_finite(), p.values[0], "weight");
        else
            need(nonneg_finite(p.values[0]), p.values[0], "weight");
        break;
    case Kind::TreeAdd: need(nonneg_finite(p.values[0]), p.values[0], "weight"); break;
    case Kind::Rate: {
        need(nonneg_finite(p.values[0]), p.values[0], "weight");
        const auto& a = p.values[1];
        if (rate_range_ == RateRange::Interest)
            need(a.is_finite() && !(a < one), a, "rate");
        else
            need(a.is_finite() && a.sign() >= 0 && !(one < a), a, "rate");
        break;
    }
    case Kind::Cap: need(p.values[0].is_plus_inf() || nonneg_finite(p.values[0]), p.values[0], "capacity"); break;
    case Kind::Mult: need(nonneg_finite(p.values[0]) && !(one < p.values[0]), p.values[0], "prob"); break;
    case Kind::GameMax:
        for (const auto& w : p.values)
            need(nonneg_finite(w), w, "weight");
        break;
    case Kind::DiscountedGame:
        for (const auto& w : p.values)
            need(w.is_finite() && !(w < l0_) && !(upper_ < w), w, "weight");
        break;
    case Kind::Expectation: {
        WeightValue sum = zero;
        bool ok = true;
        for (const auto& q : p.values) {
            if (!q.is_finite() || q.sign() <= 0 || one < q) {
                need(false, q, "probability");
                ok = false;
            } else {
                sum = sum + q;
            }
        }
        if (ok && !p.values.empty()) {
            const bool exact = sum.is_rational();
            const bool sums_to_one = exact ? sum == one : std::fabs(sum.to_double() - 1.0) <= 1e-9;
            if (!sums_to_one)
                issue(IssueCode::ProbSum, "probabilities sum to " + to_string(sum));
        }
        break;
    }
    default: break;
    }
    (void)dom;
    return out;
}

WeightValue Modality::apply(const WeightDomain& dom, const Payload& p, std::span<const WeightValue> slots) const
{
    auto issues = check_payload(dom, p, slots.size());
    for (const auto& is : issues) {
        switch (is.code) {
        case IssueCode::ArityMismatch:
        case IssueCode::NonEmptySupportRequired: throw ArityMismatch{is.message};
        case IssueCode::CarrierViolation: throw CarrierViolation{is.message};
        default: throw PayloadSchemaError{is.message};
        }
    }
    for (const auto& v : slots)
        dom.require(v);
    return eval(dom, p, slots);
}

WeightValue Modality::eval(const WeightDomain& dom, const Payload& p, std::span<const WeightValue> slots) const
{
    switch (kind_) {
    case Kind::Identity: return slots[0];
    case Kind::Successor: return to_mode(WeightValue::exact(1), dom.mode()) + slots[0];
    case Kind::Add: return p.values[0] + slots[0];
    case Kind::Rate: return p.values[0] + p.values[1] * slots[0];
    case Kind::Cap: return numeric_min(p.values[0], slots[0]);
    case Kind::Mult: return p.values[0] * slots[0];
    case Kind::TreeAdd: {
        WeightValue s = p.values[0];
        for (const auto& b : slots)
            s = s + b;
        return s;
    }
    case Kind::PairJoin: return dom.join(slots[0], slots[1]);
    case Kind::SetJoin: {
        WeightValue s = slots[0];
        for (const auto& b : slots.subspan(1))
            s = dom.join(s, b);
        return s;
    }
    case Kind::GameMax: {
        WeightValue s = p.values[0] + slots[0];
        for (std::size_t i = 1; i < slots.size(); ++i)
            s = numeric_max(s, p.values[i] + slots[i]);
        return s;
    }
    case Kind::DiscountedGame: {
        WeightValue s = p.values[0] + r_ * slots[0];
        for (std::size_t i = 1; i < slots.size(); ++i)
            s = numeric_max(s, p.values[i] + r_ * slots[i]);
        return s;
    }
    case Kind::Expectation: {
        WeightValue s = to_mode(WeightValue::exact(0), dom.mode());
        for (std::size_t i = 0; i < slots.size(); ++i)
            s = s + p.values[i] * slots[i];
        if (s.is_float() && s.float_value() > 1.0)
            s = WeightValue::real(1.0);
        return s;
    }
    }
    return dom.top();
}

bool check_inf_distribution(const Modality& mod, const WeightDomain& dom, const Payload& p,
                            std::span<const std::vector<WeightValue>> slot_sets)
{
    const std::size_t k = slot_sets.size();
    std::vector<WeightValue> meets;
    meets.reserve(k);
    for (const auto& s : slot_sets) {
        if (s.empty())
            throw std::invalid_argument{"slot sets must be nonempty"};
        meets.push_back(dom.meet(std::span<const WeightValue>{s}));
    }
    const WeightValue lhs = mod.apply(dom, p, meets);

    std::vector<std::size_t> idx(k, 0);
    std::vector<WeightValue> tuple(k);
    WeightValue rhs = dom.top();
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            tuple[i] = slot_sets[i][idx[i]];
        rhs = dom.meet(rhs, mod.apply(dom, p, tuple));
        std::size_t i = 0;
        while (i < k && ++idx[i] == slot_sets[i].size())
            idx[i++] = 0;
        if (i == k)
            break;
    }
    return lhs == rhs;
}

std::optional<ExpansiveWitness> check_expansive_on(const Modality& mod, const WeightDomain& dom, const Payload& p,
                                                   std::span<const WeightValue> slots)
{
    const WeightValue s = mod.apply(dom, p, slots);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!dom.leq(slots[i], s))
            return ExpansiveWitness{p, {slots.begin(), slots.end()}, i, slots[i], s};
    }
    return std::nullopt;
}

} // namespace cspp
