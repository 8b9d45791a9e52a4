#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "graft_moments/graph.hpp"
#include "graft_moments/weights.hpp"

namespace graft_moments {

struct RootedBranch {
  Graph graph;
  VertexId root = 0;
  WeightFunction weights = WeightFunction::degree();
};

struct RootedGraph {
  Graph graph;
  VertexId root = 0;
};

struct Attachment {
  VertexId receptor = 0;
  Graph branch;
  VertexId root = 0;
  WeightFunction weights = WeightFunction::degree();
};

// Host plus an ordered list of branches to glue on. Receptors may repeat.
struct GraftSpec {
  Graph host;
  std::vector<Attachment> attachments;
  WeightFunction host_weights = WeightFunction::degree();
};

// Product ids are dense: host vertex i (by position) becomes i, then each
// branch's non-root vertices follow in attachment order and branch vertex
// order. branch_maps[k] sends attachment k's root to its receptor's image.
struct GraftProduct {
  Graph graph;
  WeightFunction gamma = WeightFunction::zero();
  std::map<VertexId, VertexId> host_map;
  std::vector<std::map<VertexId, VertexId>> branch_maps;
};

/// Throws UnknownVertex for a bad receptor/root, DisconnectedGraph (or
/// EmptyGraph) for a disconnected factor.
GraftProduct graft(const GraftSpec& spec);

GraftProduct coalescence(const Graph& host, VertexId x, const Graph& branch, VertexId y,
                         const WeightFunction& alpha = WeightFunction::degree(),
                         const WeightFunction& beta = WeightFunction::degree());

/// One branch per host vertex, in host vertex order. Throws ArityMismatch.
GraftProduct rooted_product(const Graph& host, std::span<const RootedBranch> branches,
                            const WeightFunction& alpha = WeightFunction::degree());

/// All branches glued at a single new vertex of weight `center_weight`.
/// Throws InvalidArgument when `branches` is empty.
GraftProduct flower(const Rational& center_weight, std::span<const RootedBranch> branches);

/// Copy i of `k` is rooted at k's vertex sigma[i] (positions, 0-based) and
/// glued to h's i-th vertex. Throws OrderMismatch when |V_H| != |V_K| and
/// InvalidArgument when sigma is not a permutation of 0..r-1.
GraftProduct permutation_graph(const Graph& h, const Graph& k, std::span<const std::size_t> sigma,
                               const WeightFunction& alpha = WeightFunction::degree(),
                               const WeightFunction& beta = WeightFunction::degree());

/// One copy of k glued at `root` onto each receptor. Receptors must be
/// distinct (DuplicateReceptor) and nonempty (InvalidArgument).
GraftProduct hierarchical_product(const Graph& h, const Graph& k, VertexId root,
                                  std::span<const VertexId> receptors,
                                  const WeightFunction& alpha = WeightFunction::degree(),
                                  const WeightFunction& beta = WeightFunction::degree());

/// Full hierarchical product: every host vertex is a receptor.
GraftProduct hierarchical_product(const Graph& h, const Graph& k, VertexId root,
                                  const WeightFunction& alpha = WeightFunction::degree(),
                                  const WeightFunction& beta = WeightFunction::degree());

/// K2 ⊓ (K2 ⊓ (... ⊓ K2)) with n factors, rooted at id 0; 2^n vertices.
/// binomial_tree(0) is K1.
Graph binomial_tree(std::size_t n);

/// `copies` copies of k, all glued at their root onto the single host vertex x.
/// Throws InvalidArgument when copies == 0.
GraftProduct star_receptor_graft(const Graph& h, VertexId x, const Graph& k, VertexId root,
                                 std::size_t copies,
                                 const WeightFunction& alpha = WeightFunction::degree(),
                                 const WeightFunction& beta = WeightFunction::degree());

/// Cycle C_r (ids 0..r-1 in cycle order) with trees hung on its vertices;
/// forest keys are cycle vertex ids. Degree weights throughout. Throws
/// NotATree, InvalidArgument for r < 3.
GraftProduct cycle_forest_graft(std::size_t r, const std::map<VertexId, std::vector<RootedGraph>>& forest);

/// Extended cycle of order host_r with the extended cycle of order
/// branch_orders[x] glued at its vertex 0 onto host vertex x. Degree weights.
/// Throws InvalidExtendedCycle for zero orders, ArityMismatch when
/// branch_orders.size() != host_r.
GraftProduct extended_cycle_graft(std::size_t host_r, std::span<const std::size_t> branch_orders);

}  // namespace graft_moments
