#include "graft_moments/closed_forms.hpp"

#include <string>

#include "graft_moments/error.hpp"
#include "graft_moments/moments.hpp"

namespace graft_moments {
namespace {

Rational count(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, std::string(what) + " is disconnected");
}

// Moments of one branch that every formula needs: its own moment, its total
// weight and its distance matrix (for the root moment under derived weights).
struct BranchTerms {
  const Graph* graph;
  const WeightFunction* weights;
  VertexId root;
  DistanceMatrix distances;
  Rational own_moment;
  Rational total;
};

BranchTerms branch_terms(const Graph& g, const WeightFunction& w, VertexId root) {
  g.index_of(root);
  require_connected(g, "branch");
  BranchTerms t{&g, &w, root, distance_matrix(g), {}, total_weight(w, g)};
  t.own_moment = moment(g, t.distances, w);
  return t;
}

// sum_x a_x * sum_y D[x][y] * b_y
template <typename A, typename B>
Rational bilinear(const DistanceMatrix& d, const std::vector<A>& a, const std::vector<B>& b) {
  Rational sum;
  for (std::size_t x = 0; x < d.order(); ++x) {
    Rational row;
    for (std::size_t y = 0; y < d.order(); ++y) row += Rational(d.at(x, y)) * Rational(b[y]);
    sum += Rational(a[x]) * row;
  }
  return sum;
}

Rational sum_of(const std::vector<std::int64_t>& v) {
  Rational s;
  for (auto x : v) s += x;
  return s;
}

Rational dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * Rational(b[i]);
  return s;
}

std::int64_t extended_cycle_degree(std::int64_t r) { return r >= 3 ? 2 : r - 1; }
std::int64_t extended_cycle_edges(std::int64_t r) { return r >= 3 ? r : r - 1; }

}  // namespace

HostVectors host_vectors(const Graph& host, const BranchFamily& family) {
  HostVectors hv{std::vector<std::int64_t>(host.order(), 1), std::vector<Rational>(host.order()),
                 distance_matrix(host)};
  for (const auto& [x, branches] : family) {
    std::size_t i = host.index_of(x);
    for (const auto& b : branches) {
      hv.n[i] += static_cast<std::int64_t>(b.graph.order()) - 1;
      hv.w[i] += total_weight(b.weights, b.graph);
    }
  }
  return hv;
}

CycleVectors cycle_vectors(std::span<const std::pair<std::int64_t, std::int64_t>> per_vertex) {
  CycleVectors cv;
  for (const auto& [r, m] : per_vertex) {
    if (r < 1 || m != extended_cycle_edges(r)) {
      throw Error(ErrorKind::InvalidExtendedCycle,
                  "(r, m) = (" + std::to_string(r) + ", " + std::to_string(m) + ") is not an extended cycle");
    }
    cv.r.push_back(r);
    cv.m.push_back(m);
    cv.theta.push_back(cycle_theta(r));
    cv.delta.push_back(extended_cycle_degree(r));
  }
  return cv;
}

Rational graft_moment(const GraftSpec& spec) {
  const Graph& host = spec.host;
  require_connected(host, "host");
  const auto host_dist = distance_matrix(host);
  const std::size_t r = spec.attachments.size();

  std::vector<BranchTerms> branches;
  branches.reserve(r);
  std::vector<std::size_t> receptor(r);
  std::size_t order = host.order();
  for (std::size_t i = 0; i < r; ++i) {
    const auto& a = spec.attachments[i];
    receptor[i] = host.index_of(a.receptor);
    branches.push_back(branch_terms(a.branch, a.weights, a.root));
    order += a.branch.order() - 1;
  }
  Rational host_total = total_weight(spec.host_weights, host);
  Rational total = host_total;
  for (const auto& b : branches) total += b.total;

  Rational result = moment(host, host_dist, spec.host_weights);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& b = branches[i];
    const Rational others = count(b.graph->order() - 1);
    result += b.own_moment;
    // Host weights seen from receptor i: (|V_i|-1) alpha + B_i.
    auto xi = WeightFunction::affine(others, spec.host_weights, b.total);
    result += moment_at(host, host_dist, xi, spec.attachments[i].receptor);
    // Branch weights seen from its root: (|V|-|V_i|) beta_i + W - B_i.
    auto eta = WeightFunction::affine(count(order - b.graph->order()), *b.weights, total - b.total);
    result += moment_at(*b.graph, b.distances, eta, b.root);
    for (std::size_t j = 0; j < r; ++j) {
      result += others * Rational(host_dist.at(receptor[i], receptor[j])) * branches[j].total;
    }
  }
  return result;
}

Rational family_graft_moment(const Graph& host, const WeightFunction& alpha, const BranchFamily& family) {
  require_connected(host, "host");
  HostVectors hv = host_vectors(host, family);

  std::int64_t order = 0;
  for (auto n : hv.n) order += n;
  Rational total = total_weight(alpha, host);
  for (const auto& w : hv.w) total += w;

  Rational result = moment(host, hv.distances, alpha);
  for (std::size_t x = 0; x < host.order(); ++x) {
    auto xi = WeightFunction::affine(hv.n[x] - 1, alpha, hv.w[x]);
    result += moment_at(host, hv.distances, xi, host.id_at(x));
  }
  for (const auto& [x, branches] : family) {
    for (const auto& b : branches) {
      auto t = branch_terms(b.graph, b.weights, b.root);
      result += t.own_moment;
      auto eta = WeightFunction::affine(order - static_cast<std::int64_t>(b.graph.order()), b.weights,
                                        total - t.total);
      result += moment_at(b.graph, t.distances, eta, b.root);
    }
  }
  std::vector<std::int64_t> n_minus_j(hv.n);
  for (auto& v : n_minus_j) v -= 1;
  result += bilinear(hv.distances, n_minus_j, hv.w);
  return result;
}

Rational family_graft_moment(const GraftSpec& spec) {
  BranchFamily family;
  for (const auto& a : spec.attachments) family[a.receptor].push_back({a.branch, a.root, a.weights});
  return family_graft_moment(spec.host, spec.host_weights, family);
}

Rational flower_moment(const Rational& center_weight, std::span<const RootedBranch> branches) {
  if (branches.empty()) throw Error(ErrorKind::InvalidArgument, "flower needs at least one branch");
  if (center_weight.is_negative()) throw Error(ErrorKind::NegativeWeight, "center weight " + center_weight.str());
  std::vector<BranchTerms> terms;
  Rational order_sum, weight_sum;
  for (const auto& b : branches) {
    terms.push_back(branch_terms(b.graph, b.weights, b.root));
    order_sum += count(b.graph.order());
    weight_sum += terms.back().total;
  }
  const Rational r = count(branches.size());
  Rational result;
  for (const auto& t : terms) {
    result += t.own_moment;
    // (sum_{j != i} |V_j| - r + 1) beta_i + center + sum_{j != i} B_j
    Rational scale = order_sum - count(t.graph->order()) - r + 1;
    auto eta = WeightFunction::affine(scale, *t.weights, center_weight + weight_sum - t.total);
    result += moment_at(*t.graph, t.distances, eta, t.root);
  }
  return result;
}

namespace {

std::int64_t common_order(const Graph& h, const Graph& k) {
  if (h.order() != k.order() || h.empty()) {
    throw Error(ErrorKind::OrderMismatch, "host order " + std::to_string(h.order()) +
                                              " != branch order " + std::to_string(k.order()));
  }
  return static_cast<std::int64_t>(h.order());
}

}  // namespace

Rational permutation_moment(const Graph& h, const WeightFunction& alpha, const Graph& k,
                            const WeightFunction& beta) {
  const Rational r = common_order(h, k);
  const auto hd = distance_matrix(h);
  const auto kd = distance_matrix(k);
  const Rational a = total_weight(alpha, h);
  const Rational b = total_weight(beta, k);
  return r * moment(h, hd, alpha) + r * r * moment(k, kd, beta) +
         r * b * moment(h, hd, WeightFunction::unit()) + (a + (r - 1) * b) * moment(k, kd, WeightFunction::unit());
}

Rational permutation_unit_moment(const Graph& h, const Graph& k) {
  const Rational r = common_order(h, k);
  return r * r * moment(h, WeightFunction::unit()) + r * (2 * r - 1) * moment(k, WeightFunction::unit());
}

Rational permutation_mean_distance(const Graph& h, const Graph& k) {
  const Rational r = common_order(h, k);
  const Rational d_h = moment(h, WeightFunction::unit()) / (r * r);
  const Rational d_k = moment(k, WeightFunction::unit()) / (r * r);
  return d_h + (Rational(2) - Rational(1) / r) * d_k;
}

Rational permutation_degree_moment(const Graph& h, const Graph& k) {
  const Rational r = common_order(h, k);
  const Rational m_h = count(h.edge_count());
  const Rational m_k = count(k.edge_count());
  const auto hd = distance_matrix(h);
  const auto kd = distance_matrix(k);
  const auto unit = WeightFunction::unit();
  const auto deg = WeightFunction::degree();
  return r * moment(h, hd, deg) + r * r * moment(k, kd, deg) + 2 * r * m_k * moment(h, hd, unit) +
         2 * (m_h + (r - 1) * m_k) * moment(k, kd, unit);
}

Rational comparison_difference(const Graph& h, const WeightFunction& alpha, VertexId x,
                               std::span<const VertexId> receptors, std::size_t branch_order,
                               const Rational& branch_total_weight) {
  if (branch_order == 0) throw Error(ErrorKind::InvalidArgument, "branch order must be positive");
  require_connected(h, "host");
  const auto hd = distance_matrix(h);
  const Rational others = count(branch_order - 1);
  const auto xi = WeightFunction::affine(others, alpha, branch_total_weight);
  const Rational at_x = moment_at(h, hd, xi, x);

  Rational result;
  std::vector<std::size_t> idx;
  for (VertexId xi_vertex : receptors) {
    idx.push_back(h.index_of(xi_vertex));
    result += at_x - moment_at(h, hd, xi, xi_vertex);
  }
  Rational spread;
  for (auto i : idx)
    for (auto j : idx) spread += Rational(hd.at(i, j));
  return result - branch_total_weight * others * spread;
}

std::int64_t cycle_theta(std::int64_t r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "theta needs r >= 1");
  return (r / 2) * ((r + 1) / 2);
}

Rational unicyclic_degree_distance(std::size_t r, const std::map<VertexId, std::vector<RootedGraph>>& forest) {
  if (r < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  const Graph cycle = cycle_graph(r);
  std::vector<std::int64_t> n(r, 1);
  for (const auto& [x, trees] : forest) {
    std::size_t i = cycle.index_of(x);
    for (const auto& t : trees) {
      if (!is_tree(t.graph)) throw Error(ErrorKind::NotATree, "branch at " + std::to_string(x) + " is not a tree");
      t.graph.index_of(t.root);
      n[i] += static_cast<std::int64_t>(t.graph.order()) - 1;
    }
  }
  std::int64_t order = 0;
  for (auto v : n) order += v;

  Rational result;
  const auto deg = WeightFunction::degree();
  for (const auto& [x, trees] : forest) {
    for (const auto& t : trees) {
      const auto td = distance_matrix(t.graph);
      result += moment(t.graph, td, deg);
      // (|V| - |V_T|)(delta + 2) + 2
      const Rational spare = order - static_cast<std::int64_t>(t.graph.order());
      result += moment_at(t.graph, td, WeightFunction::affine(spare, deg, 2 * spare + 2), t.root);
    }
  }
  return result + 2 * bilinear(distance_matrix(cycle), n, n);
}

Rational extended_cycles_degree_distance(std::size_t host_r,
                                         std::span<const std::pair<std::int64_t, std::int64_t>> per_vertex) {
  if (host_r == 0) throw Error(ErrorKind::InvalidExtendedCycle, "host order must be positive");
  if (per_vertex.size() != host_r) {
    throw Error(ErrorKind::ArityMismatch, "need one (r, m) pair per host vertex");
  }
  const auto cv = cycle_vectors(per_vertex);
  const auto h = static_cast<std::int64_t>(host_r);
  // Scalar m is the host's edge count; see the extended-cycle notes in the README.
  const Rational m = extended_cycle_edges(h);
  const Rational theta = cycle_theta(h);
  const Rational host_degree = extended_cycle_degree(h);
  const Rational sum_theta = sum_of(cv.theta);
  const Rational sum_m = sum_of(cv.m);
  const Rational sum_r = sum_of(cv.r);

  return 2 * (m * sum_theta + sum_m * sum_theta - dot(cv.m, cv.theta)) +
         (host_degree * theta + dot(cv.delta, cv.theta)) * sum_r +
         2 * bilinear(distance_matrix(extended_cycle(host_r)), cv.r, cv.m);
}

Rational proper_cycles_degree_distance(std::size_t host_r, std::span<const std::int64_t> branch_orders) {
  if (host_r < 3) throw Error(ErrorKind::InvalidExtendedCycle, "host must be a proper cycle");
  if (branch_orders.size() != host_r) {
    throw Error(ErrorKind::ArityMismatch, "need one branch order per host vertex");
  }
  std::vector<std::int64_t> r(branch_orders.begin(), branch_orders.end());
  std::vector<std::int64_t> theta;
  for (auto rx : r) {
    if (rx < 3) throw Error(ErrorKind::InvalidExtendedCycle, "branch order " + std::to_string(rx) + " < 3");
    theta.push_back(cycle_theta(rx));
  }
  const Rational h = static_cast<std::int64_t>(host_r);
  const Rational sum_r = sum_of(r);
  const Rational sum_theta = sum_of(theta);
  return 4 * sum_r * sum_theta +
         2 * (Rational(cycle_theta(static_cast<std::int64_t>(host_r))) * sum_r + h * sum_theta - dot(r, theta)) +
         2 * bilinear(distance_matrix(cycle_graph(host_r)), r, r);
}

std::vector<std::pair<std::int64_t, std::int64_t>> extended_cycle_shapes(std::span<const std::size_t> orders) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (auto r : orders) {
    if (r == 0) throw Error(ErrorKind::InvalidExtendedCycle, "order must be positive");
    auto ri = static_cast<std::int64_t>(r);
    out.emplace_back(ri, extended_cycle_edges(ri));
  }
  return out;
}

}  // namespace graft_moments
