#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "graft_moments/graph.hpp"
#include "graft_moments/products.hpp"
#include "graft_moments/rational.hpp"
#include "graft_moments/weights.hpp"

namespace graft_moments {

// Seeded generator for verification instances. Draws only from raw 64-bit
// engine output so a seed gives the same instances on every platform.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool chance(unsigned percent) { return uniform(0, 99) < percent; }

  /// Random spanning tree plus extra edges; ids are a shuffled sample of
  /// [0, 3n) so callers never rely on dense labels.
  Graph connected_graph(std::size_t n);
  Graph tree(std::size_t n);

  /// Numerator in [0, 20], denominator in [1, 5].
  Rational small_rational();
  /// Mostly explicit random tables, sometimes a preset.
  WeightFunction weights(const Graph& g);
  WeightFunction explicit_weights(const Graph& g);

  VertexId pick_vertex(const Graph& g) { return g.id_at(uniform(0, g.order() - 1)); }

  /// Host of 1..max_host vertices, up to max_branches branches of
  /// 1..max_branch vertices. Receptors are distinct unless allow_repeats.
  GraftSpec graft_spec(std::size_t max_host, std::size_t max_branches, std::size_t max_branch,
                       bool allow_repeats);

  std::vector<std::size_t> permutation(std::size_t r);

  /// Trees hung on random vertices of C_r.
  std::map<VertexId, std::vector<RootedGraph>> forest(std::size_t r, std::size_t max_trees,
                                                      std::size_t max_tree);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::vector<VertexId> shuffled_ids(std::size_t n);

  std::mt19937_64 rng_;
};

}  // namespace graft_moments
