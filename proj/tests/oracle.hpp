#pragma once

// Reference values that share nothing with the library's BFS or moment code:
// Floyd-Warshall over the raw edge list, degrees counted from that list, and
// moments summed pair by pair.

#include <cstdint>
#include <limits>
#include <vector>

#include "graft_moments/graph.hpp"
#include "graft_moments/rational.hpp"
#include "graft_moments/weights.hpp"

namespace oracle {

namespace gm = graft_moments;

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const gm::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges()) {
    d[g.index_of(u)][g.index_of(v)] = 1;
    d[g.index_of(v)][g.index_of(u)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline std::vector<std::int64_t> degrees(const gm::Graph& g) {
  std::vector<std::int64_t> deg(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    ++deg[g.index_of(u)];
    ++deg[g.index_of(v)];
  }
  return deg;
}

// sum over unordered pairs {u,v} of d(u,v) (w(u) + w(v)); w is index-aligned.
inline gm::Rational moment(const gm::Graph& g, const std::vector<gm::Rational>& w) {
  const auto d = floyd_warshall(g);
  gm::Rational total;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j) total += gm::Rational(d[i][j]) * (w[i] + w[j]);
  return total;
}

inline gm::Rational moment(const gm::Graph& g, const gm::WeightFunction& w) {
  std::vector<gm::Rational> values;
  for (std::size_t i = 0; i < g.order(); ++i) values.push_back(w.eval_at(g, i));
  return moment(g, values);
}

inline gm::Rational unit_moment(const gm::Graph& g) {
  return moment(g, std::vector<gm::Rational>(g.order(), gm::Rational(1)));
}

inline gm::Rational degree_distance(const gm::Graph& g) {
  std::vector<gm::Rational> values;
  for (auto d : degrees(g)) values.emplace_back(d);
  return moment(g, values);
}

inline std::int64_t wiener(const gm::Graph& g) {
  const auto d = floyd_warshall(g);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j) total += d[i][j];
  return total;
}

inline bool connected(const gm::Graph& g) {
  for (const auto& row : floyd_warshall(g))
    for (auto x : row)
      if (x >= kInf) return false;
  return true;
}

}  // namespace oracle
