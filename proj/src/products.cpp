#include "graft_moments/products.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "graft_moments/error.hpp"

namespace graft_moments {
namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, std::string(what) + " is disconnected");
}

std::vector<Attachment> attach_all(std::span<const VertexId> receptors, const Graph& k, VertexId root,
                                   const WeightFunction& beta) {
  std::vector<Attachment> out;
  out.reserve(receptors.size());
  for (VertexId x : receptors) out.push_back({x, k, root, beta});
  return out;
}

}  // namespace

GraftProduct graft(const GraftSpec& spec) {
  require_connected(spec.host, "host");
  for (const auto& a : spec.attachments) {
    spec.host.index_of(a.receptor);
    a.branch.index_of(a.root);
    require_connected(a.branch, "branch");
  }

  GraftProduct out;
  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  VertexId next = 0;
  for (VertexId v : spec.host.vertices()) {
    out.host_map.emplace(v, next);
    ids.push_back(next++);
  }
  for (const auto& [u, v] : spec.host.edges()) edges.emplace_back(out.host_map.at(u), out.host_map.at(v));

  out.branch_maps.reserve(spec.attachments.size());
  for (const auto& a : spec.attachments) {
    std::map<VertexId, VertexId> map;
    for (VertexId v : a.branch.vertices()) {
      if (v == a.root) {
        map.emplace(v, out.host_map.at(a.receptor));
      } else {
        map.emplace(v, next);
        ids.push_back(next++);
      }
    }
    for (const auto& [u, v] : a.branch.edges()) edges.emplace_back(map.at(u), map.at(v));
    out.branch_maps.push_back(std::move(map));
  }
  out.graph = Graph(std::move(ids), edges);

  std::vector<WeightedPart> parts;
  parts.reserve(spec.attachments.size());
  for (std::size_t i = 0; i < spec.attachments.size(); ++i) {
    const auto& a = spec.attachments[i];
    parts.push_back({a.branch, a.weights, out.branch_maps[i]});
  }
  out.gamma = combine_gamma(out.graph, {spec.host, spec.host_weights, out.host_map}, parts);
  return out;
}

GraftProduct coalescence(const Graph& host, VertexId x, const Graph& branch, VertexId y,
                         const WeightFunction& alpha, const WeightFunction& beta) {
  return graft({host, {{x, branch, y, beta}}, alpha});
}

GraftProduct rooted_product(const Graph& host, std::span<const RootedBranch> branches,
                            const WeightFunction& alpha) {
  if (branches.size() != host.order()) {
    throw Error(ErrorKind::ArityMismatch, "rooted product needs " + std::to_string(host.order()) +
                                              " branches, got " + std::to_string(branches.size()));
  }
  GraftSpec spec{host, {}, alpha};
  for (std::size_t i = 0; i < branches.size(); ++i) {
    spec.attachments.push_back({host.id_at(i), branches[i].graph, branches[i].root, branches[i].weights});
  }
  return graft(spec);
}

GraftProduct flower(const Rational& center_weight, std::span<const RootedBranch> branches) {
  if (branches.empty()) throw Error(ErrorKind::InvalidArgument, "flower needs at least one branch");
  GraftSpec spec{singleton_graph(), {}, WeightFunction::constant(center_weight)};
  for (const auto& b : branches) spec.attachments.push_back({0, b.graph, b.root, b.weights});
  return graft(spec);
}

GraftProduct permutation_graph(const Graph& h, const Graph& k, std::span<const std::size_t> sigma,
                               const WeightFunction& alpha, const WeightFunction& beta) {
  if (h.order() != k.order()) {
    throw Error(ErrorKind::OrderMismatch, "host order " + std::to_string(h.order()) +
                                              " != branch order " + std::to_string(k.order()));
  }
  std::vector<std::size_t> check(sigma.begin(), sigma.end());
  std::sort(check.begin(), check.end());
  bool is_perm = check.size() == h.order();
  for (std::size_t i = 0; is_perm && i < check.size(); ++i) is_perm = check[i] == i;
  if (!is_perm) throw Error(ErrorKind::InvalidArgument, "sigma is not a permutation of 0..r-1");

  GraftSpec spec{h, {}, alpha};
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    spec.attachments.push_back({h.id_at(i), k, k.id_at(sigma[i]), beta});
  }
  return graft(spec);
}

GraftProduct hierarchical_product(const Graph& h, const Graph& k, VertexId root,
                                  std::span<const VertexId> receptors, const WeightFunction& alpha,
                                  const WeightFunction& beta) {
  if (receptors.empty()) throw Error(ErrorKind::InvalidArgument, "no receptors");
  std::set<VertexId> seen;
  for (VertexId x : receptors) {
    if (!seen.insert(x).second) throw Error(ErrorKind::DuplicateReceptor, "receptor " + std::to_string(x));
  }
  return graft({h, attach_all(receptors, k, root, beta), alpha});
}

GraftProduct hierarchical_product(const Graph& h, const Graph& k, VertexId root,
                                  const WeightFunction& alpha, const WeightFunction& beta) {
  return hierarchical_product(h, k, root, h.vertices(), alpha, beta);
}

Graph binomial_tree(std::size_t n) {
  Graph tree = singleton_graph();
  const Graph edge = path_graph(2);
  for (std::size_t i = 0; i < n; ++i) tree = hierarchical_product(edge, tree, 0).graph;
  return tree;
}

GraftProduct star_receptor_graft(const Graph& h, VertexId x, const Graph& k, VertexId root,
                                 std::size_t copies, const WeightFunction& alpha,
                                 const WeightFunction& beta) {
  if (copies == 0) throw Error(ErrorKind::InvalidArgument, "need at least one copy");
  std::vector<VertexId> receptors(copies, x);
  return graft({h, attach_all(receptors, k, root, beta), alpha});
}

GraftProduct cycle_forest_graft(std::size_t r, const std::map<VertexId, std::vector<RootedGraph>>& forest) {
  if (r < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  GraftSpec spec{cycle_graph(r), {}, WeightFunction::degree()};
  for (const auto& [x, trees] : forest) {
    for (const auto& t : trees) {
      if (!is_tree(t.graph)) throw Error(ErrorKind::NotATree, "branch at " + std::to_string(x) + " is not a tree");
      spec.attachments.push_back({x, t.graph, t.root, WeightFunction::degree()});
    }
  }
  return graft(spec);
}

GraftProduct extended_cycle_graft(std::size_t host_r, std::span<const std::size_t> branch_orders) {
  if (branch_orders.size() != host_r) {
    throw Error(ErrorKind::ArityMismatch, "need one branch order per host vertex");
  }
  GraftSpec spec{extended_cycle(host_r), {}, WeightFunction::degree()};
  for (std::size_t x = 0; x < host_r; ++x) {
    spec.attachments.push_back({static_cast<VertexId>(x), extended_cycle(branch_orders[x]), 0,
                                WeightFunction::degree()});
  }
  return graft(spec);
}

}  // namespace graft_moments
