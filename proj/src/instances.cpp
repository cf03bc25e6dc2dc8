#include "cspp/instances.hpp"

#include "cspp/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cspp {

std::string_view expected_name(Expected e)
{
    switch (e) {
    case Expected::Yes: return "yes";
    case Expected::No: return "no";
    case Expected::Conditional: return "conditional";
    }
    return "?";
}

WeightValue weight_from_json(const Json& j, NumericMode mode)
{
    if (j.is_string())
        return parse_weight(j.get<std::string>(), mode);
    if (j.is_number_integer())
        return to_mode(WeightValue::exact(j.get<std::int64_t>()), mode);
    if (j.is_number_float())
        return parse_weight(j.dump(), mode);
    throw ParseError{"expected a number or numeric string, got " + j.dump()};
}

Json weight_to_json(const WeightValue& v)
{
    if (v.is_rational() && v.rational().is_integer())
        return v.rational().num();
    if (v.is_float())
        return v.float_value();
    return to_string(v);
}

std::optional<bool> InstanceSpec::conditional_holds() const
{
    if (modality.kind() != Modality::Kind::DiscountedGame)
        return std::nullopt;
    const auto& r = modality.discount();
    if (r == WeightValue::exact(1))
        return true;
    const auto& L = modality.upper();
    const auto& xi = domain.xi();
    return modality.l0() == L && !(L + r * xi < xi);
}

namespace {

struct Row {
    WeightDomain (*domain)(const WeightValue& xi);
    std::function<Modality(const Json&, NumericMode)> modality;
    Expected expected;
    NumericMode default_mode;
    bool has_xi;
    std::vector<std::string> extra;
    std::string condition;
};

WeightDomain rnn_asc(const WeightValue& xi) { return WeightDomain::real_nonneg_ascending(xi); }

template <WeightDomain (*F)()>
WeightDomain fixed(const WeightValue&)
{
    return F();
}

const std::map<std::string, Row, std::less<>>& rows()
{
    using K = Modality::RateRange;
    constexpr auto E = NumericMode::Exact;
    constexpr auto F = NumericMode::Float;
    static const std::map<std::string, Row, std::less<>> table = [] {
        std::map<std::string, Row, std::less<>> t;
        auto simple = [](Modality m) { return [m](const Json&, NumericMode) { return m; }; };
        t["reach"] = {fixed<WeightDomain::zero_inf>, simple(Modality::identity()), Expected::Yes, E, false, {}, {}};
        t["uspp"] = {fixed<WeightDomain::nat_inf_ascending>, simple(Modality::successor()), Expected::Yes, E, false, {}, {}};
        t["ulongest"] = {fixed<WeightDomain::nat_inf_descending>, simple(Modality::successor()), Expected::No, E, false, {}, {}};
        t["spp"] = {rnn_asc, simple(Modality::add(false)), Expected::Yes, E, true, {}, {}};
        t["spp-neg"] = {fixed<WeightDomain::real_signed>, simple(Modality::add(true)), Expected::No, E, false, {}, {}};
        t["spp-interest"] = {rnn_asc, simple(Modality::rate(K::Interest)), Expected::Yes, E, true, {}, {}};
        t["spp-discount"] = {rnn_asc, simple(Modality::rate(K::Discount)), Expected::No, F, true, {}, {}};
        t["widest"] = {fixed<WeightDomain::real_nonneg_descending>, simple(Modality::cap()), Expected::Yes, E, false, {}, {}};
        t["reliable"] = {fixed<WeightDomain::unit_descending>, simple(Modality::mult()), Expected::Yes, E, false, {}, {}};
        t["bintree"] = {rnn_asc,
                        [](const Json& p, NumericMode) {
                            std::int64_t arity = 2;
                            if (p.contains("arity")) {
                                if (!p["arity"].is_number_integer())
                                    throw ParamRange{"arity must be an integer"};
                                arity = p["arity"].get<std::int64_t>();
                            }
                            if (arity < 1 || arity > 16)
                                throw ParamRange{"arity must lie in [1, 16]"};
                            return Modality::tree_add(static_cast<std::size_t>(arity));
                        },
                        Expected::Yes, E, true, {"arity"}, {}};
        t["bin-reach-game"] = {fixed<WeightDomain::zero_inf>, simple(Modality::pair_join()), Expected::Yes, E, false, {}, {}};
        t["reach-game"] = {fixed<WeightDomain::zero_inf>, simple(Modality::set_join()), Expected::Yes, E, false, {}, {}};
        t["dyn-game"] = {rnn_asc, simple(Modality::game_max()), Expected::Yes, E, true, {}, {}};
        t["dyn-game-discount"] = {rnn_asc,
                                  [](const Json& p, NumericMode mode) {
                                      auto get = [&](const char* key, WeightValue dflt) {
                                          return p.contains(key) ? weight_from_json(p[key], mode) : to_mode(dflt, mode);
                                      };
                                      return Modality::discounted_game(get("l0", WeightValue::exact(1)),
                                                                       get("L", WeightValue::exact(2)),
                                                                       get("r", WeightValue::exact(1, 2)));
                                  },
                                  Expected::Conditional, F, true, {"l0", "L", "r"},
                                  "r = 1, or l0 = L and xi <= L + r*xi"};
        t["prob-reach"] = {fixed<WeightDomain::unit_descending>, simple(Modality::expectation()), Expected::No, F, false, {}, {}};
        return t;
    }();
    return table;
}

} // namespace

const std::vector<std::string>& instance_ids()
{
    static const std::vector<std::string> ids = {
        "reach",    "uspp",     "ulongest", "spp",           "spp-neg",    "spp-interest",      "spp-discount",
        "widest",   "reliable", "bintree",  "bin-reach-game", "reach-game", "dyn-game", "dyn-game-discount",
        "prob-reach",
    };
    return ids;
}

InstancePtr make_instance(std::string_view id, const Json& params)
{
    const auto& table = rows();
    const auto it = table.find(id);
    if (it == table.end())
        throw UnknownInstance{"unknown instance '" + std::string{id} + "'"};
    const Row& row = it->second;

    const Json p = params.is_null() ? Json::object() : params;
    if (!p.is_object())
        throw ParamRange{"instance params must be a JSON object"};
    for (const auto& [key, _] : p.items()) {
        const bool known = key == "numeric" || (key == "xi" && row.has_xi) ||
                           std::find(row.extra.begin(), row.extra.end(), key) != row.extra.end();
        if (!known)
            throw ParamRange{"instance '" + std::string{id} + "' has no parameter '" + key + "'"};
    }

    NumericMode mode = row.default_mode;
    if (p.contains("numeric")) {
        const auto& m = p["numeric"];
        if (m == "exact")
            mode = NumericMode::Exact;
        else if (m == "float")
            mode = NumericMode::Float;
        else
            throw ParamRange{"numeric must be \"exact\" or \"float\""};
    }

    WeightValue xi = WeightValue::exact(0);
    try {
        if (p.contains("xi"))
            xi = weight_from_json(p["xi"], mode);
        auto domain = row.domain(to_mode(xi, mode)).with_mode(mode);
        auto modality = row.modality(p, mode);
        if (modality.kind() == Modality::Kind::DiscountedGame && !domain.xi().is_finite())
            throw ParamRange{"xi must be finite for the discounted game"};

        auto spec = std::make_shared<InstanceSpec>(InstanceSpec{
            std::string{id}, p, std::move(domain), std::move(modality), row.expected, row.condition, id != "ulongest"});
        return spec;
    } catch (const CarrierViolation& e) {
        throw ParamRange{e.what()};
    } catch (const ParseError& e) {
        throw ParamRange{e.what()};
    }
}

} // namespace cspp
