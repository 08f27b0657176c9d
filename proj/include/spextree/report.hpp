#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "spextree/decomposition.hpp"
#include "spextree/embedder.hpp"
#include "spextree/error.hpp"
#include "spextree/hypothesis.hpp"
#include "spextree/lab.hpp"
#include "spextree/spectral.hpp"
#include "spextree/tree.hpp"

namespace spextree {

using Json = nlohmann::ordered_json;

// Rounded to 12 significant digits; non-finite values become null.
auto number(double value) -> Json;

auto to_json(const TreeProfile& p) -> Json;
auto to_json(const Decomposition& d) -> Json;
auto to_json(const HypothesisCertificate& c) -> Json;
auto to_json(const WitnessSearch& s) -> Json;
auto to_json(const EmbeddingMap& e) -> Json;
auto to_json(const NonembeddingVerdict& v) -> Json;
auto to_json(const SearchOutcome& s) -> Json;
auto to_json(const BoundsReport& b) -> Json;
auto to_json(const SpexReport& r) -> Json;
auto to_json(const ThresholdReport& r) -> Json;
auto to_json(const Graph& g) -> Json;
auto error_json(const Error& e) -> Json;

// Edge list with a "# graph n=K" header, so isolated vertices survive.
auto format_graph(const Graph& g) -> std::string;
// Vertex count from the header when present, else max label + 1.
auto parse_graph(std::string_view text) -> Graph;
auto read_graph_file(const std::string& path) -> Graph;

}  // namespace spextree
