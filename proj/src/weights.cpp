#include "graft_moments/weights.hpp"

#include <string>

#include "graft_moments/error.hpp"

namespace graft_moments {

WeightFunction WeightFunction::constant(Rational c) {
  WeightFunction w(Kind::Constant);
  w.scalar_ = c;
  return w;
}

WeightFunction WeightFunction::explicit_values(std::map<VertexId, Rational> values) {
  WeightFunction w(Kind::Explicit);
  w.table_ = std::make_shared<const std::map<VertexId, Rational>>(std::move(values));
  return w;
}

WeightFunction WeightFunction::affine(Rational scale, WeightFunction base, Rational offset) {
  WeightFunction w(Kind::Affine);
  w.scalar_ = scale;
  w.offset_ = offset;
  w.base_ = std::make_shared<const WeightFunction>(std::move(base));
  return w;
}

Rational WeightFunction::raw(const Graph& g, std::size_t index) const {
  switch (kind_) {
    case Kind::Unit: return 1;
    case Kind::Half: return Rational(1, 2);
    case Kind::Degree: return static_cast<std::int64_t>(g.degree_at(index));
    case Kind::Constant: return scalar_;
    case Kind::Explicit: {
      auto it = table_->find(g.id_at(index));
      if (it == table_->end()) {
        throw Error(ErrorKind::UnknownVertex, "no explicit weight for vertex " + std::to_string(g.id_at(index)));
      }
      return it->second;
    }
    case Kind::Affine: return scalar_ * base_->eval_at(g, index) + offset_;
  }
  return 0;
}

Rational WeightFunction::eval_at(const Graph& g, std::size_t index) const {
  if (index >= g.order()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(index));
  Rational value = raw(g, index);
  if (value.is_negative()) {
    throw Error(ErrorKind::NegativeWeight, describe() + " is " + value.str() + " at vertex " +
                                               std::to_string(g.id_at(index)));
  }
  return value;
}

Rational WeightFunction::eval(const Graph& g, VertexId v) const { return eval_at(g, g.index_of(v)); }

std::string WeightFunction::describe() const {
  switch (kind_) {
    case Kind::Unit: return "unit";
    case Kind::Half: return "half";
    case Kind::Degree: return "degree";
    case Kind::Constant: return "const:" + scalar_.str();
    case Kind::Explicit: return "explicit";
    case Kind::Affine: return "affine(" + scalar_.str() + "*" + base_->describe() + "+" + offset_.str() + ")";
  }
  return "?";
}

std::vector<Rational> weight_values(const WeightFunction& w, const Graph& g) {
  std::vector<Rational> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) out.push_back(w.eval_at(g, i));
  return out;
}

Rational total_weight(const WeightFunction& w, const Graph& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "total weight of the empty graph");
  Rational sum;
  for (std::size_t i = 0; i < g.order(); ++i) sum += w.eval_at(g, i);
  return sum;
}

WeightFunction linear_combination(const Graph& g,
                                  std::span<const std::pair<Rational, WeightFunction>> terms) {
  std::map<VertexId, Rational> table;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Rational value;
    for (const auto& [coeff, w] : terms) value += coeff * w.eval_at(g, i);
    table.emplace(g.id_at(i), value);
  }
  return WeightFunction::explicit_values(std::move(table));
}

WeightFunction combine_gamma(const Graph& product, const WeightedPart& host,
                             std::span<const WeightedPart> branches) {
  std::vector<Rational> sums(product.order());
  std::vector<bool> covered(product.order(), false);
  auto accumulate = [&](const WeightedPart& part) {
    if (part.to_product.size() != part.graph.order()) {
      throw Error(ErrorKind::ProvenanceMismatch, "provenance map does not cover its factor");
    }
    for (std::size_t i = 0; i < part.graph.order(); ++i) {
      auto it = part.to_product.find(part.graph.id_at(i));
      if (it == part.to_product.end()) {
        throw Error(ErrorKind::ProvenanceMismatch,
                    "factor vertex " + std::to_string(part.graph.id_at(i)) + " has no image");
      }
      auto target = product.find(it->second);
      if (!target) {
        throw Error(ErrorKind::ProvenanceMismatch,
                    "image " + std::to_string(it->second) + " is not a product vertex");
      }
      sums[*target] += part.weights.eval_at(part.graph, i);
      covered[*target] = true;
    }
  };
  accumulate(host);
  for (const auto& branch : branches) accumulate(branch);

  std::map<VertexId, Rational> table;
  for (std::size_t i = 0; i < product.order(); ++i) {
    if (!covered[i]) {
      throw Error(ErrorKind::ProvenanceMismatch,
                  "product vertex " + std::to_string(product.id_at(i)) + " has no preimage");
    }
    table.emplace(product.id_at(i), sums[i]);
  }
  return WeightFunction::explicit_values(std::move(table));
}

}  // namespace graft_moments
