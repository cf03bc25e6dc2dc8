#pragma once

#include "cspp/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace cspp {

Json payload_to_json(const Modality& mod, const Payload& p);
Payload payload_from_json(const Modality& mod, const Json& j, std::size_t k, NumericMode mode);

Json graph_to_json(const WeightedGraph& g);
/// With `strict`, payload and arity problems reported by validate() are
/// raised as SchemaError; structural problems always throw.
WeightedGraph graph_from_json(const Json& j, bool strict = true);

WeightedGraph load_graph(std::string_view text, bool strict = true);
WeightedGraph load_graph_file(const std::filesystem::path& path, bool strict = true);
/// Pretty-printed JSON with a trailing newline.
std::string save_graph(const WeightedGraph& g);

Json valuation_to_json(std::span<const WeightValue> d);
std::vector<WeightValue> valuation_from_json(const Json& j, const WeightDomain& dom);

std::string read_text_file(const std::filesystem::path& path);

} // namespace cspp
