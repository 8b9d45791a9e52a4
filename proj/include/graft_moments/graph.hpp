#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graft_moments {

using VertexId = std::int64_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr std::size_t kMaxOrder = 10'000;
inline constexpr std::size_t kDefaultIsomorphismCap = 16;

// Simple undirected graph over nonnegative integer ids. Vertices keep the
// order they were given in; internally everything is addressed by position
// in that order ("index"). Immutable once constructed.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidGraph on negative/duplicate ids, loops or duplicate edges,
  /// UnknownVertex on edges naming absent ids, TooLarge above kMaxOrder.
  Graph(std::vector<VertexId> vertices, std::span<const Edge> edges);
  Graph(std::vector<VertexId> vertices, std::initializer_list<Edge> edges)
      : Graph(std::move(vertices), std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return ids_.empty(); }

  const std::vector<VertexId>& vertices() const noexcept { return ids_; }
  VertexId id_at(std::size_t index) const { return ids_.at(index); }

  bool contains(VertexId v) const { return index_.contains(v); }
  std::optional<std::size_t> find(VertexId v) const;
  /// Throws UnknownVertex.
  std::size_t index_of(VertexId v) const;

  /// Neighbor indices, sorted ascending.
  std::span<const std::size_t> neighbors_at(std::size_t index) const { return adj_.at(index); }
  std::size_t degree_at(std::size_t index) const { return adj_.at(index).size(); }
  std::size_t degree(VertexId v) const { return degree_at(index_of(v)); }
  bool adjacent(VertexId u, VertexId v) const;

  /// Each edge once, as (u, v) with index(u) < index(v), ordered by index.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
};

// All-pairs hop distances, indexed by vertex position, with cached row sums.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  std::size_t order() const noexcept { return order_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return {entries_.data() + i * order_, order_};
  }
  std::uint64_t row_sum(std::size_t i) const { return row_sums_.at(i); }
  const std::vector<std::uint64_t>& row_sums() const noexcept { return row_sums_; }

  friend DistanceMatrix distance_matrix(const Graph& g);

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> entries_;
  std::vector<std::uint64_t> row_sums_;
};

/// Hop counts from `source`, aligned with g.vertices(). Throws UnknownVertex,
/// or DisconnectedGraph if some vertex is unreachable.
std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source);

/// Throws DisconnectedGraph (EmptyGraph for zero vertices).
DistanceMatrix distance_matrix(const Graph& g);

/// Throws EmptyGraph for zero vertices.
bool is_connected(const Graph& g);

bool is_tree(const Graph& g);

/// Exhaustive backtracking with degree and distance-profile pruning. Throws
/// TooLarge when either order exceeds `cap`.
bool are_isomorphic(const Graph& a, const Graph& b, std::size_t cap = kDefaultIsomorphismCap);

/// Relabeling-invariant fingerprint: equal for isomorphic graphs. Used to
/// bucket candidates before running are_isomorphic.
std::vector<std::uint32_t> isomorphism_invariant(const Graph& g);

/// Same edges, ids replaced through `relabel` (must be injective).
Graph relabeled(const Graph& g, const std::unordered_map<VertexId, VertexId>& relabel);

// Small named families, ids 0..n-1.
Graph singleton_graph();
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);       // n >= 3
Graph extended_cycle(std::size_t r);    // K1 (r=1), K2 (r=2), C_r (r>=3)
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);   // center 0
Graph diamond_graph();                  // K4 minus edge {0,3}; 0 and 3 have degree 2

}  // namespace graft_moments
