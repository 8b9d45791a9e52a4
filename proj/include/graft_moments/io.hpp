#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "graft_moments/graph.hpp"
#include "graft_moments/moments.hpp"
#include "graft_moments/products.hpp"
#include "graft_moments/weights.hpp"

namespace graft_moments::io {

using json = nlohmann::ordered_json;

// All parse failures (malformed JSON, bad shapes, invalid graphs) surface as
// ErrorKind::ParseError.

/// {"vertices":[0,1,2],"edges":[[0,1],[1,2]]}
Graph graph_from_json(const json& j);
json to_json(const Graph& g);

/// `unit`, `half`, `degree`, `const:<p>/<q>`, `file:<path>` (JSON map id -> "p/q").
WeightFunction parse_weight_spec(std::string_view spec);
/// String spec or an object map id -> "p/q".
WeightFunction weights_from_json(const json& j);
json weights_to_json(const WeightFunction& w);

/// {"host":<graph>,"attachments":[{"receptor":0,"branch":<graph>,"root":2,"weights":"degree"}],
///  "host_weights":"degree"}; missing weights default to degree.
GraftSpec graft_spec_from_json(const json& j);
json to_json(const GraftSpec& spec);

json to_json(const MomentReport& report);
/// Product graph, gamma as id -> "p/q", host and branch provenance maps.
json to_json(const GraftProduct& product);

json read_json_file(const std::filesystem::path& path);

}  // namespace graft_moments::io
