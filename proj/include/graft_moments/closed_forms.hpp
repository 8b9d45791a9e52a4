#pragma once

// Closed-form moment formulas for graft products, evaluated from the factors
// alone. None of these build the product graph; the only distances used are
// those inside the factors (and between receptors in the host).

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "graft_moments/graph.hpp"
#include "graft_moments/products.hpp"
#include "graft_moments/rational.hpp"
#include "graft_moments/weights.hpp"

namespace graft_moments {

// Branches grouped by the host vertex they hang from.
using BranchFamily = std::map<VertexId, std::vector<RootedBranch>>;

// Per host vertex (host position order): n_x is the order of everything glued
// at x counting x once (1 when nothing is attached), w_x the total branch
// weight glued there.
struct HostVectors {
  std::vector<std::int64_t> n;
  std::vector<Rational> w;
  DistanceMatrix distances;
};

HostVectors host_vectors(const Graph& host, const BranchFamily& family);

// Extended-cycle data per host vertex: order r_x, edges m_x, common row sum
// theta_x of its distance matrix and its (constant) degree delta_x.
struct CycleVectors {
  std::vector<std::int64_t> r, m, theta, delta;
};

/// Throws InvalidExtendedCycle unless each (r, m) is (1,0), (2,1) or (r>=3, r).
CycleVectors cycle_vectors(std::span<const std::pair<std::int64_t, std::int64_t>> per_vertex);

/// Moment of graft(spec).graph under its combined weight, from the factors.
/// Exact for distinct receptors; use family_graft_moment when they repeat.
Rational graft_moment(const GraftSpec& spec);

/// Same quantity for arbitrary (possibly repeated) receptors, through the
/// per-host-vertex vectors n, w and the host distance matrix.
Rational family_graft_moment(const Graph& host, const WeightFunction& alpha, const BranchFamily& family);
Rational family_graft_moment(const GraftSpec& spec);

/// Moment of the flower (all branches on one fresh vertex of weight center_weight).
Rational flower_moment(const Rational& center_weight, std::span<const RootedBranch> branches);

/// Moment of any permutation graph of h and k (all r! choices agree).
/// Throws OrderMismatch unless |V_H| == |V_K|.
Rational permutation_moment(const Graph& h, const WeightFunction& alpha, const Graph& k,
                            const WeightFunction& beta);
/// Unit-weight moment (host weight 0, branch weight 1).
Rational permutation_unit_moment(const Graph& h, const Graph& k);
Rational permutation_mean_distance(const Graph& h, const Graph& k);
/// Degree distance (degree weights on both factors).
Rational permutation_degree_moment(const Graph& h, const Graph& k);

/// M(G2) - M(G1): G2 hangs every copy of a branch on x, G1 hangs copy i on
/// receptors[i]. Only the branch order and total weight enter.
Rational comparison_difference(const Graph& h, const WeightFunction& alpha, VertexId x,
                               std::span<const VertexId> receptors, std::size_t branch_order,
                               const Rational& branch_total_weight);

/// floor(r/2) * floor((r+1)/2); the row sum of the distance matrix of C_r.
/// Throws InvalidArgument for r == 0.
std::int64_t cycle_theta(std::int64_t r);

/// Degree distance of C_r with the given trees attached (keys are cycle
/// vertex ids 0..r-1). Throws NotATree, InvalidArgument for r < 3.
Rational unicyclic_degree_distance(std::size_t r, const std::map<VertexId, std::vector<RootedGraph>>& forest);

/// Degree distance of the graft of extended cycles: host of order host_r,
/// per_vertex[x] = (r_x, m_x). Throws InvalidExtendedCycle on inconsistent
/// (r, m) pairs and ArityMismatch when per_vertex.size() != host_r.
Rational extended_cycles_degree_distance(std::size_t host_r,
                                         std::span<const std::pair<std::int64_t, std::int64_t>> per_vertex);

/// Specialization of the above when host and every branch are proper cycles.
/// Throws InvalidExtendedCycle if any order is below 3.
Rational proper_cycles_degree_distance(std::size_t host_r, std::span<const std::int64_t> branch_orders);

/// (r, m) pairs for extended cycles of the given orders.
std::vector<std::pair<std::int64_t, std::int64_t>> extended_cycle_shapes(std::span<const std::size_t> orders);

}  // namespace graft_moments
