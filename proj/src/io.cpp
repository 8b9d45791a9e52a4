#include "graft_moments/io.hpp"

#include <fstream>
#include <map>

#include "graft_moments/error.hpp"

namespace graft_moments::io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

VertexId vertex_from_json(const json& j) {
  if (!j.is_number_integer()) fail("vertex id must be an integer, got " + j.dump());
  return j.get<VertexId>();
}

VertexId vertex_from_key(const std::string& key) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(key, &used);
    if (used != key.size()) fail("bad vertex key '" + key + "'");
    return v;
  } catch (const std::logic_error&) {
    fail("bad vertex key '" + key + "'");
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail("rational must be \"p/q\" or an integer, got " + j.dump());
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename K>
json id_map_to_json(const std::map<VertexId, K>& map) {
  json out = json::object();
  for (const auto& [k, v] : map) {
    if constexpr (std::is_same_v<K, Rational>) {
      out[std::to_string(k)] = v.str();
    } else {
      out[std::to_string(k)] = v;
    }
  }
  return out;
}

}  // namespace

Graph graph_from_json(const json& j) {
  const json& vs = member(j, "vertices");
  const json& es = member(j, "edges");
  if (!vs.is_array() || !es.is_array()) fail("'vertices' and 'edges' must be arrays");
  std::vector<VertexId> ids;
  for (const auto& v : vs) ids.push_back(vertex_from_json(v));
  std::vector<Edge> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) fail("edge must be a pair, got " + e.dump());
    edges.emplace_back(vertex_from_json(e[0]), vertex_from_json(e[1]));
  }
  try {
    return Graph(std::move(ids), edges);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::TooLarge) throw;
    fail(err.what());
  }
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

WeightFunction parse_weight_spec(std::string_view spec) {
  if (spec == "unit") return WeightFunction::unit();
  if (spec == "half") return WeightFunction::half();
  if (spec == "degree") return WeightFunction::degree();
  if (spec.starts_with("const:")) return WeightFunction::constant(Rational::parse(spec.substr(6)));
  if (spec.starts_with("file:")) return weights_from_json(read_json_file(std::string(spec.substr(5))));
  fail("unknown weight spec '" + std::string(spec) + "'");
}

WeightFunction weights_from_json(const json& j) {
  if (j.is_string()) return parse_weight_spec(j.get<std::string>());
  if (!j.is_object()) fail("weights must be a spec string or an id -> \"p/q\" object");
  std::map<VertexId, Rational> table;
  for (const auto& [key, value] : j.items()) table.emplace(vertex_from_key(key), rational_from_json(value));
  return WeightFunction::explicit_values(std::move(table));
}

json weights_to_json(const WeightFunction& w) {
  if (w.kind() == WeightFunction::Kind::Explicit) return id_map_to_json(w.table());
  return w.describe();
}

GraftSpec graft_spec_from_json(const json& j) {
  GraftSpec spec;
  spec.host = graph_from_json(member(j, "host"));
  if (j.contains("host_weights")) spec.host_weights = weights_from_json(j.at("host_weights"));
  if (j.contains("attachments")) {
    const json& atts = j.at("attachments");
    if (!atts.is_array()) fail("'attachments' must be an array");
    for (const auto& a : atts) {
      Attachment att;
      att.receptor = vertex_from_json(member(a, "receptor"));
      att.branch = graph_from_json(member(a, "branch"));
      att.root = vertex_from_json(member(a, "root"));
      if (a.contains("weights")) att.weights = weights_from_json(a.at("weights"));
      spec.attachments.push_back(std::move(att));
    }
  }
  return spec;
}

json to_json(const GraftSpec& spec) {
  json atts = json::array();
  for (const auto& a : spec.attachments) {
    atts.push_back({{"receptor", a.receptor},
                    {"branch", to_json(a.branch)},
                    {"root", a.root},
                    {"weights", weights_to_json(a.weights)}});
  }
  return json{{"host", to_json(spec.host)},
              {"attachments", std::move(atts)},
              {"host_weights", weights_to_json(spec.host_weights)}};
}

json to_json(const MomentReport& r) {
  return json{{"moment", r.moment.str()},
              {"mean_distance", r.mean_distance.str()},
              {"wiener", r.wiener.str()},
              {"degree_distance", r.degree_distance.str()},
              {"zagreb1", r.zagreb1.str()},
              {"mti", r.mti.str()},
              {"hyper_wiener_paper", r.hyper_wiener_paper.str()}};
}

json to_json(const GraftProduct& product) {
  std::map<VertexId, Rational> gamma;
  for (std::size_t i = 0; i < product.graph.order(); ++i) {
    gamma.emplace(product.graph.id_at(i), product.gamma.eval_at(product.graph, i));
  }
  json branch_maps = json::array();
  for (const auto& m : product.branch_maps) branch_maps.push_back(id_map_to_json(m));
  return json{{"graph", to_json(product.graph)},
              {"gamma", id_map_to_json(gamma)},
              {"host_map", id_map_to_json(product.host_map)},
              {"branch_maps", std::move(branch_maps)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
}

}  // namespace graft_moments::io
