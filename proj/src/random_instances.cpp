#include "graft_moments/random_instances.hpp"

#include <algorithm>
#include <set>

namespace graft_moments {

std::size_t InstanceGenerator::uniform(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
}

std::vector<VertexId> InstanceGenerator::shuffled_ids(std::size_t n) {
  std::vector<VertexId> pool(3 * n);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<VertexId>(i);
  // Partial Fisher-Yates: the first n slots become the sample, already shuffled.
  for (std::size_t i = 0; i < n; ++i) std::swap(pool[i], pool[uniform(i, pool.size() - 1)]);
  pool.resize(n);
  return pool;
}

Graph InstanceGenerator::tree(std::size_t n) {
  auto ids = shuffled_ids(n);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(ids[uniform(0, i - 1)], ids[i]);
  return Graph(std::move(ids), edges);
}

Graph InstanceGenerator::connected_graph(std::size_t n) {
  auto ids = shuffled_ids(n);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace(uniform(0, i - 1), i);
  const unsigned density = static_cast<unsigned>(uniform(0, 40));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!edges.contains({i, j}) && chance(density)) edges.emplace(i, j);
    }
  }
  std::vector<Edge> out;
  for (const auto& [i, j] : edges) out.emplace_back(ids[i], ids[j]);
  return Graph(std::move(ids), out);
}

Rational InstanceGenerator::small_rational() {
  auto num = static_cast<std::int64_t>(uniform(0, 20));
  auto den = static_cast<std::int64_t>(uniform(1, 5));
  return Rational(num, den);
}

WeightFunction InstanceGenerator::explicit_weights(const Graph& g) {
  std::map<VertexId, Rational> table;
  for (VertexId v : g.vertices()) table.emplace(v, small_rational());
  return WeightFunction::explicit_values(std::move(table));
}

WeightFunction InstanceGenerator::weights(const Graph& g) {
  switch (uniform(0, 9)) {
    case 0: return WeightFunction::unit();
    case 1: return WeightFunction::degree();
    case 2: return WeightFunction::half();
    case 3: return WeightFunction::constant(small_rational());
    default: return explicit_weights(g);
  }
}

GraftSpec InstanceGenerator::graft_spec(std::size_t max_host, std::size_t max_branches,
                                        std::size_t max_branch, bool allow_repeats) {
  GraftSpec spec;
  spec.host = connected_graph(uniform(1, max_host));
  spec.host_weights = weights(spec.host);
  std::size_t count = uniform(0, max_branches);
  if (!allow_repeats) count = std::min(count, spec.host.order());
  std::vector<VertexId> receptors = spec.host.vertices();
  for (std::size_t i = 0; i < receptors.size(); ++i) {
    std::swap(receptors[i], receptors[uniform(i, receptors.size() - 1)]);
  }
  for (std::size_t i = 0; i < count; ++i) {
    Attachment a;
    a.receptor = allow_repeats ? pick_vertex(spec.host) : receptors[i];
    a.branch = connected_graph(uniform(1, max_branch));
    a.root = pick_vertex(a.branch);
    a.weights = weights(a.branch);
    spec.attachments.push_back(std::move(a));
  }
  return spec;
}

std::vector<std::size_t> InstanceGenerator::permutation(std::size_t r) {
  std::vector<std::size_t> p(r);
  for (std::size_t i = 0; i < r; ++i) p[i] = i;
  for (std::size_t i = 0; i + 1 < r; ++i) std::swap(p[i], p[uniform(i, r - 1)]);
  return p;
}

std::map<VertexId, std::vector<RootedGraph>> InstanceGenerator::forest(std::size_t r, std::size_t max_trees,
                                                                      std::size_t max_tree) {
  std::map<VertexId, std::vector<RootedGraph>> out;
  std::size_t count = uniform(0, max_trees);
  for (std::size_t i = 0; i < count; ++i) {
    Graph t = tree(uniform(1, max_tree));
    VertexId root = pick_vertex(t);
    out[static_cast<VertexId>(uniform(0, r - 1))].push_back({std::move(t), root});
  }
  return out;
}

}  // namespace graft_moments
