#pragma once

#include "graft_moments/graph.hpp"
#include "graft_moments/rational.hpp"
#include "graft_moments/weights.hpp"

namespace graft_moments {

/// sum_v w(v) * dist(v, u).
Rational moment_at(const Graph& g, const WeightFunction& w, VertexId u);
Rational moment_at(const Graph& g, const DistanceMatrix& dm, const WeightFunction& w, VertexId u);

/// sum_u moment_at(g, w, u), evaluated as sum_v w(v) * s(v) over the row sums.
Rational moment(const Graph& g, const WeightFunction& w);
Rational moment(const Graph& g, const DistanceMatrix& dm, const WeightFunction& w);

/// The same quantity through the symmetric pair sum
/// 1/2 * sum_{u,v} dist(u,v) * (w(u) + w(v)).
Rational moment_pairwise(const Graph& g, const WeightFunction& w);

Rational zagreb1(const Graph& g);

// Named indices of one graph. `moment` is under the weight the report was
// requested for; everything else is weight independent.
//
// hyper_wiener_paper is the literal W/2 + Zagreb1/2 combination. It is NOT the
// usual hyper-Wiener index (which sums squared distances); the name says so.
struct MomentReport {
  Rational moment;
  Rational mean_distance;
  Rational wiener;
  Rational degree_distance;
  Rational zagreb1;
  Rational mti;
  Rational hyper_wiener_paper;
};

/// One distance matrix, all values from its row sums. Throws DisconnectedGraph.
MomentReport indices(const Graph& g, const WeightFunction& w = WeightFunction::unit());

}  // namespace graft_moments
