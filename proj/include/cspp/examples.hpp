#pragma once

#include "cspp/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cspp {

/// The worked example graphs and counterexamples, plus one small sample per
/// remaining catalog instance ("<instance>_sample").
WeightedGraph example_graph(std::string_view name);

const std::vector<std::string>& example_names();

/// File name used for the bundled copy under data/.
std::string example_file_name(std::string_view name);

} // namespace cspp
