#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graft_moments/graph.hpp"
#include "graft_moments/rational.hpp"

namespace graft_moments {

// Vertex weight function. Presets are evaluated against whatever graph they
// are applied to; Explicit carries its own table; Affine is a*base + c and is
// how the derived per-branch weights of the graft formulas are expressed
// without materializing them. Cheap to copy (shared immutable nodes).
class WeightFunction {
 public:
  enum class Kind { Unit, Half, Degree, Constant, Explicit, Affine };

  static WeightFunction unit() { return WeightFunction(Kind::Unit); }
  static WeightFunction half() { return WeightFunction(Kind::Half); }
  static WeightFunction degree() { return WeightFunction(Kind::Degree); }
  static WeightFunction constant(Rational c);
  static WeightFunction zero() { return constant(0); }
  static WeightFunction explicit_values(std::map<VertexId, Rational> values);
  static WeightFunction affine(Rational scale, WeightFunction base, Rational offset);

  Kind kind() const noexcept { return kind_; }

  /// Throws UnknownVertex if v is not in g (or missing from an Explicit
  /// table), NegativeWeight if the value is negative.
  Rational eval(const Graph& g, VertexId v) const;
  Rational eval_at(const Graph& g, std::size_t index) const;

  // Constant: value; Affine: scale.
  const Rational& scale() const noexcept { return scalar_; }
  const Rational& offset() const noexcept { return offset_; }
  const WeightFunction& base() const { return *base_; }
  const std::map<VertexId, Rational>& table() const { return *table_; }

  /// Short human-readable form, e.g. "degree", "const:3/1", "affine(3/1*unit+15/1)".
  std::string describe() const;

 private:
  explicit WeightFunction(Kind kind) : kind_(kind) {}

  Rational raw(const Graph& g, std::size_t index) const;

  Kind kind_;
  Rational scalar_;
  Rational offset_;
  std::shared_ptr<const WeightFunction> base_;
  std::shared_ptr<const std::map<VertexId, Rational>> table_;
};

inline Rational eval(const WeightFunction& w, const Graph& g, VertexId v) { return w.eval(g, v); }

/// Values aligned with g.vertices().
std::vector<Rational> weight_values(const WeightFunction& w, const Graph& g);

/// Sum over all vertices. Throws EmptyGraph for the empty graph.
Rational total_weight(const WeightFunction& w, const Graph& g);

/// Explicit table of sum_k coeff_k * w_k over g's vertices.
WeightFunction linear_combination(const Graph& g,
                                  std::span<const std::pair<Rational, WeightFunction>> terms);

// One factor of a graft: its graph, its weight function, and where each of
// its vertices landed in the product.
struct WeightedPart {
  const Graph& graph;
  const WeightFunction& weights;
  const std::map<VertexId, VertexId>& to_product;
};

/// The product weight: each product vertex receives the sum of the weights of
/// every factor vertex identified with it (host weight off the receptors,
/// host plus root weights on receptors, branch weights elsewhere). Throws
/// ProvenanceMismatch if the maps are partial or leave product vertices
/// uncovered.
WeightFunction combine_gamma(const Graph& product, const WeightedPart& host,
                             std::span<const WeightedPart> branches);

}  // namespace graft_moments
