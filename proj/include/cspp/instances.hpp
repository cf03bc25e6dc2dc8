#pragma once

#include "cspp/domain.hpp"
#include "cspp/modality.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cspp {

using Json = nlohmann::ordered_json;

enum class Expected : std::uint8_t { Yes, No, Conditional };

std::string_view expected_name(Expected e);

/// One row of the instance catalog, fully wired.
struct InstanceSpec {
    std::string id;
    Json params = Json::object();
    WeightDomain domain;
    Modality modality;
    Expected expected = Expected::Yes;
    std::string condition;
    /// σ(..., ⊤, ...) = ⊤ holds; false only for the longest-path row.
    bool top_preserving = true;

    [[nodiscard]] NumericMode mode() const { return domain.mode(); }
    /// Closed-form expansiveness for the discounted game; nullopt elsewhere.
    [[nodiscard]] std::optional<bool> conditional_holds() const;
};

using InstancePtr = std::shared_ptr<const InstanceSpec>;

/// Builds a catalog entry. `params` is a JSON object; recognised keys depend
/// on the id ("numeric", "xi", "arity", "l0", "L", "r").
InstancePtr make_instance(std::string_view id, const Json& params = Json::object());

const std::vector<std::string>& instance_ids();

/// Reads a weight from a JSON number or string ("inf", "p/q", "0.25").
WeightValue weight_from_json(const Json& j, NumericMode mode);
/// Integral rationals become numbers, other rationals "p/q", floats numbers,
/// infinities "inf"/"-inf".
Json weight_to_json(const WeightValue& v);

} // namespace cspp
