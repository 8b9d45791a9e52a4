#include "graft_moments/moments.hpp"

#include "graft_moments/error.hpp"

namespace graft_moments {
namespace {

Rational from_count(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) throw Error(ErrorKind::Overflow, "count exceeds 64 bits");
  return Rational(static_cast<std::int64_t>(v));
}

}  // namespace

Rational moment_at(const Graph& g, const WeightFunction& w, VertexId u) {
  auto dist = bfs_distances(g, u);
  Rational sum;
  for (std::size_t v = 0; v < g.order(); ++v) {
    sum += w.eval_at(g, v) * Rational(dist[v]);
  }
  return sum;
}

Rational moment_at(const Graph& g, const DistanceMatrix& dm, const WeightFunction& w, VertexId u) {
  std::size_t i = g.index_of(u);
  auto row = dm.row(i);
  Rational sum;
  for (std::size_t v = 0; v < g.order(); ++v) {
    sum += w.eval_at(g, v) * Rational(row[v]);
  }
  return sum;
}

Rational moment(const Graph& g, const WeightFunction& w) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "moment of the empty graph");
  return moment(g, distance_matrix(g), w);
}

Rational moment(const Graph& g, const DistanceMatrix& dm, const WeightFunction& w) {
  Rational sum;
  for (std::size_t v = 0; v < g.order(); ++v) {
    sum += w.eval_at(g, v) * from_count(dm.row_sum(v));
  }
  return sum;
}

Rational moment_pairwise(const Graph& g, const WeightFunction& w) {
  auto dm = distance_matrix(g);
  auto values = weight_values(w, g);
  Rational twice;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (dm.at(u, v) != 0) twice += Rational(dm.at(u, v)) * (values[u] + values[v]);
    }
  }
  return twice / 2;
}

Rational zagreb1(const Graph& g) {
  std::uint64_t sum = 0;
  for (std::size_t v = 0; v < g.order(); ++v) sum += g.degree_at(v) * g.degree_at(v);
  return from_count(sum);
}

MomentReport indices(const Graph& g, const WeightFunction& w) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "indices of the empty graph");
  auto dm = distance_matrix(g);
  MomentReport r;
  r.moment = moment(g, dm, w);
  Rational unit_moment = moment(g, dm, WeightFunction::unit());
  auto n = static_cast<std::int64_t>(g.order());
  r.mean_distance = unit_moment / Rational(n * n);
  r.wiener = moment(g, dm, WeightFunction::half());
  r.degree_distance = moment(g, dm, WeightFunction::degree());
  r.zagreb1 = zagreb1(g);
  r.mti = r.zagreb1 + r.degree_distance;
  r.hyper_wiener_paper = r.wiener / 2 + r.zagreb1 / 2;
  return r;
}

}  // namespace graft_moments
