#include "graft_moments/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "graft_moments/error.hpp"

namespace graft_moments {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// BFS by index; unreachable entries stay kUnreached.
std::vector<std::uint32_t> bfs_from(const Graph& g, std::size_t source) {
  std::vector<std::uint32_t> dist(g.order(), kUnreached);
  std::vector<std::size_t> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t u = queue[head];
    for (std::size_t v : g.neighbors_at(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::vector<std::uint32_t>> all_pairs_raw(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) rows.push_back(bfs_from(g, i));
  return rows;
}

struct VertexProfile {
  std::size_t degree;
  std::vector<std::uint32_t> sorted_distances;
  auto operator<=>(const VertexProfile&) const = default;
};

std::vector<VertexProfile> profiles(const Graph& g,
                                    const std::vector<std::vector<std::uint32_t>>& dist) {
  std::vector<VertexProfile> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    VertexProfile p{g.degree_at(i), dist[i]};
    std::sort(p.sorted_distances.begin(), p.sorted_distances.end());
    out.push_back(std::move(p));
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b)
      : a_dist_(all_pairs_raw(a)), b_dist_(all_pairs_raw(b)),
        a_prof_(profiles(a, a_dist_)), b_prof_(profiles(b, b_dist_)),
        mapping_(a.order(), 0), used_(b.order(), false) {
    // Visit a's vertices in BFS order per component so each new vertex is
    // constrained by an already-mapped neighbor.
    std::vector<bool> seen(a.order(), false);
    for (std::size_t s = 0; s < a.order(); ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> component;
      for (std::size_t v = 0; v < a.order(); ++v) {
        if (a_dist_[s][v] != kUnreached) component.push_back(v);
      }
      std::stable_sort(component.begin(), component.end(),
                       [&](std::size_t x, std::size_t y) { return a_dist_[s][x] < a_dist_[s][y]; });
      for (std::size_t v : component) {
        seen[v] = true;
        visit_order_.push_back(v);
      }
    }
  }

  bool profiles_match() const {
    auto x = a_prof_;
    auto y = b_prof_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  bool run(std::size_t depth = 0) {
    if (depth == visit_order_.size()) return true;
    std::size_t u = visit_order_[depth];
    for (std::size_t v = 0; v < used_.size(); ++v) {
      if (used_[v] || a_prof_[u] != b_prof_[v]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        std::size_t pu = visit_order_[k];
        consistent = a_dist_[u][pu] == b_dist_[v][mapping_[pu]];
      }
      if (!consistent) continue;
      mapping_[u] = v;
      used_[v] = true;
      if (run(depth + 1)) return true;
      used_[v] = false;
    }
    return false;
  }

 private:
  std::vector<std::vector<std::uint32_t>> a_dist_, b_dist_;
  std::vector<VertexProfile> a_prof_, b_prof_;
  std::vector<std::size_t> visit_order_;
  std::vector<std::size_t> mapping_;
  std::vector<bool> used_;
};

}  // namespace

Graph::Graph(std::vector<VertexId> vertices, std::span<const Edge> edges)
    : ids_(std::move(vertices)), adj_(ids_.size()) {
  if (ids_.size() > kMaxOrder) {
    throw Error(ErrorKind::TooLarge, "graph order " + std::to_string(ids_.size()) +
                                         " exceeds " + std::to_string(kMaxOrder));
  }
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] < 0) throw Error(ErrorKind::InvalidGraph, "negative vertex id " + std::to_string(ids_[i]));
    if (!index_.emplace(ids_[i], i).second) {
      throw Error(ErrorKind::InvalidGraph, "duplicate vertex id " + std::to_string(ids_[i]));
    }
  }
  for (const auto& [u, v] : edges) {
    std::size_t iu = index_of(u);
    std::size_t iv = index_of(v);
    if (iu == iv) throw Error(ErrorKind::InvalidGraph, "self-loop at " + std::to_string(u));
    auto& nu = adj_[iu];
    auto pos = std::lower_bound(nu.begin(), nu.end(), iv);
    if (pos != nu.end() && *pos == iv) {
      throw Error(ErrorKind::InvalidGraph,
                  "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    nu.insert(pos, iv);
    auto& nv = adj_[iv];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), iu), iu);
    ++edge_count_;
  }
}

std::optional<std::size_t> Graph::find(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  return it->second;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nu = adj_[index_of(u)];
  return std::binary_search(nu.begin(), nu.end(), index_of(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    for (std::size_t j : adj_[i]) {
      if (i < j) out.emplace_back(ids_[i], ids_[j]);
    }
  }
  return out;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source) {
  auto dist = bfs_from(g, g.index_of(source));
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] == kUnreached) {
      throw Error(ErrorKind::DisconnectedGraph,
                  "vertex " + std::to_string(g.id_at(i)) + " unreachable from " + std::to_string(source));
    }
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "distance matrix of the empty graph");
  DistanceMatrix dm;
  dm.order_ = g.order();
  dm.entries_.resize(dm.order_ * dm.order_);
  dm.row_sums_.resize(dm.order_);
  for (std::size_t i = 0; i < dm.order_; ++i) {
    auto row = bfs_from(g, i);
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < dm.order_; ++j) {
      if (row[j] == kUnreached) {
        throw Error(ErrorKind::DisconnectedGraph, "vertex " + std::to_string(g.id_at(j)) +
                                                      " unreachable from " + std::to_string(g.id_at(i)));
      }
      sum += row[j];
    }
    std::copy(row.begin(), row.end(), dm.entries_.begin() + static_cast<std::ptrdiff_t>(i * dm.order_));
    dm.row_sums_[i] = sum;
  }
  return dm;
}

bool is_connected(const Graph& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "connectivity of the empty graph");
  auto dist = bfs_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::uint32_t d) { return d == kUnreached; });
}

bool is_tree(const Graph& g) { return !g.empty() && g.edge_count() + 1 == g.order() && is_connected(g); }

bool are_isomorphic(const Graph& a, const Graph& b, std::size_t cap) {
  if (a.order() > cap || b.order() > cap) {
    throw Error(ErrorKind::TooLarge, "isomorphism test limited to order " + std::to_string(cap));
  }
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  IsomorphismSearch search(a, b);
  if (!search.profiles_match()) return false;
  return search.run();
}

std::vector<std::uint32_t> isomorphism_invariant(const Graph& g) {
  auto prof = profiles(g, all_pairs_raw(g));
  std::sort(prof.begin(), prof.end());
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(g.order()),
                                 static_cast<std::uint32_t>(g.edge_count())};
  for (const auto& p : prof) {
    key.push_back(static_cast<std::uint32_t>(p.degree));
    key.insert(key.end(), p.sorted_distances.begin(), p.sorted_distances.end());
  }
  return key;
}

Graph relabeled(const Graph& g, const std::unordered_map<VertexId, VertexId>& relabel) {
  std::vector<VertexId> ids;
  ids.reserve(g.order());
  for (VertexId v : g.vertices()) ids.push_back(relabel.at(v));
  auto edges = g.edges();
  for (auto& [u, v] : edges) {
    u = relabel.at(u);
    v = relabel.at(v);
  }
  return Graph(std::move(ids), edges);
}

namespace {

std::vector<VertexId> iota_ids(std::size_t n) {
  std::vector<VertexId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
  return ids;
}

}  // namespace

Graph singleton_graph() { return Graph({0}, std::span<const Edge>{}); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Graph(iota_ids(n), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(iota_ids(n), edges);
}

Graph extended_cycle(std::size_t r) {
  if (r == 0) throw Error(ErrorKind::InvalidExtendedCycle, "extended cycle needs r >= 1");
  return r < 3 ? path_graph(r) : cycle_graph(r);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(iota_ids(n), edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(iota_ids(leaves + 1), edges);
}

Graph diamond_graph() { return Graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace graft_moments
