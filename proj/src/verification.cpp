#include "graft_moments/verification.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "graft_moments/closed_forms.hpp"
#include "graft_moments/error.hpp"
#include "graft_moments/moments.hpp"
#include "graft_moments/products.hpp"
#include "graft_moments/random_instances.hpp"

namespace graft_moments {
namespace {

constexpr std::array<std::string_view, 8> kFormulas = {
    "theorem1", "theorem41", "sigma", "flower", "comparison", "unicyclic", "extcycles", "propercycles"};

constexpr std::size_t kMaxBranches = 4;
constexpr std::size_t kMaxBranchOrder = 8;

struct Sizes {
  std::size_t host;
  std::size_t branch;
};

// Collects checks for one instance; the instance JSON is rendered lazily.
class Checker {
 public:
  Checker(VerificationReport& report, std::function<io::json()> describe)
      : report_(report), describe_(std::move(describe)) {}

  void expect(const char* check, const Rational& oracle, const Rational& formula) {
    if (oracle == formula) return;
    report_.mismatches.push_back({check, oracle, formula, describe_().dump()});
  }

 private:
  VerificationReport& report_;
  std::function<io::json()> describe_;
};

Rational oracle(const GraftProduct& p) { return moment(p.graph, p.gamma); }

io::json rooted_to_json(const std::vector<RootedBranch>& branches) {
  io::json out = io::json::array();
  for (const auto& b : branches) {
    out.push_back({{"branch", io::to_json(b.graph)}, {"root", b.root}, {"weights", io::weights_to_json(b.weights)}});
  }
  return out;
}

io::json forest_to_json(const std::map<VertexId, std::vector<RootedGraph>>& forest) {
  io::json out = io::json::array();
  for (const auto& [x, trees] : forest) {
    for (const auto& t : trees) out.push_back({{"receptor", x}, {"tree", io::to_json(t.graph)}, {"root", t.root}});
  }
  return out;
}

void run_graft(InstanceGenerator& gen, const Sizes& s, VerificationReport& report, bool repeats) {
  GraftSpec spec = gen.graft_spec(s.host, kMaxBranches, s.branch, repeats);
  Checker c(report, [&] { return io::to_json(spec); });
  const Rational expected = oracle(graft(spec));
  if (repeats) {
    c.expect("family_graft_moment", expected, family_graft_moment(spec));
  } else {
    c.expect("graft_moment", expected, graft_moment(spec));
  }
}

void run_sigma(InstanceGenerator& gen, const Sizes& s, VerificationReport& report) {
  const std::size_t r = gen.uniform(1, std::min<std::size_t>(s.host, 6));
  Graph h = gen.connected_graph(r);
  Graph k = gen.connected_graph(r);
  WeightFunction alpha = gen.weights(h);
  WeightFunction beta = gen.weights(k);
  auto sigma = gen.permutation(r);
  Checker c(report, [&] {
    return io::json{{"host", io::to_json(h)}, {"host_weights", io::weights_to_json(alpha)},
                    {"branch", io::to_json(k)}, {"branch_weights", io::weights_to_json(beta)},
                    {"sigma", sigma}};
  });
  c.expect("permutation_moment", oracle(permutation_graph(h, k, sigma, alpha, beta)),
           permutation_moment(h, alpha, k, beta));
  auto unit_product = permutation_graph(h, k, sigma, WeightFunction::zero(), WeightFunction::unit());
  c.expect("permutation_unit_moment", oracle(unit_product), permutation_unit_moment(h, k));
  const auto n = static_cast<std::int64_t>(unit_product.graph.order());
  c.expect("permutation_mean_distance", oracle(unit_product) / Rational(n * n), permutation_mean_distance(h, k));
  auto degree_product = permutation_graph(h, k, sigma);
  c.expect("permutation_degree_moment", moment(degree_product.graph, WeightFunction::degree()),
           permutation_degree_moment(h, k));
}

void run_flower(InstanceGenerator& gen, const Sizes& s, VerificationReport& report) {
  std::vector<RootedBranch> branches;
  const std::size_t count = gen.uniform(1, kMaxBranches);
  for (std::size_t i = 0; i < count; ++i) {
    Graph g = gen.connected_graph(gen.uniform(1, s.branch));
    VertexId root = gen.pick_vertex(g);
    WeightFunction w = gen.weights(g);
    branches.push_back({std::move(g), root, std::move(w)});
  }
  const Rational center = gen.small_rational();
  Checker c(report, [&] { return io::json{{"center_weight", center.str()}, {"branches", rooted_to_json(branches)}}; });
  c.expect("flower_moment", oracle(flower(center, branches)), flower_moment(center, branches));
}

void run_comparison(InstanceGenerator& gen, const Sizes& s, VerificationReport& report) {
  Graph h = gen.connected_graph(gen.uniform(1, s.host));
  WeightFunction alpha = gen.weights(h);
  const VertexId x = gen.pick_vertex(h);
  std::vector<VertexId> receptors(gen.uniform(1, kMaxBranches));
  for (auto& v : receptors) v = gen.pick_vertex(h);
  Graph k = gen.connected_graph(gen.uniform(1, s.branch));
  VertexId root = gen.pick_vertex(k);
  WeightFunction beta = gen.weights(k);
  const Rational b = total_weight(beta, k);

  // A structurally different branch with the same order and total weight.
  Graph k2 = gen.connected_graph(k.order());
  VertexId root2 = gen.pick_vertex(k2);
  WeightFunction beta2 = WeightFunction::constant(b / Rational(static_cast<std::int64_t>(k.order())));

  Checker c(report, [&] {
    return io::json{{"host", io::to_json(h)}, {"host_weights", io::weights_to_json(alpha)}, {"x", x},
                    {"receptors", receptors}, {"branch", io::to_json(k)}, {"root", root},
                    {"branch_weights", io::weights_to_json(beta)}, {"alt_branch", io::to_json(k2)},
                    {"alt_root", root2}};
  });

  auto difference = [&](const Graph& branch, VertexId y, const WeightFunction& w) {
    auto g2 = star_receptor_graft(h, x, branch, y, receptors.size(), alpha, w);
    GraftSpec g1{h, {}, alpha};
    for (VertexId xi : receptors) g1.attachments.push_back({xi, branch, y, w});
    return oracle(g2) - oracle(graft(g1));
  };
  const Rational formula = comparison_difference(h, alpha, x, receptors, k.order(), b);
  c.expect("comparison_difference", difference(k, root, beta), formula);
  c.expect("comparison_difference(alt branch)", difference(k2, root2, beta2), formula);
}

void run_unicyclic(InstanceGenerator& gen, const Sizes& s, VerificationReport& report) {
  const std::size_t r = gen.uniform(3, std::max<std::size_t>(3, std::min<std::size_t>(s.host, 8)));
  auto forest = gen.forest(r, kMaxBranches, s.branch);
  Checker c(report, [&] { return io::json{{"cycle", r}, {"forest", forest_to_json(forest)}}; });
  c.expect("unicyclic_degree_distance", moment(cycle_forest_graft(r, forest).graph, WeightFunction::degree()),
           unicyclic_degree_distance(r, forest));
}

std::vector<std::size_t> random_orders(InstanceGenerator& gen, std::size_t n, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out(n);
  for (auto& v : out) v = gen.uniform(lo, hi);
  return out;
}

void run_extcycles(InstanceGenerator& gen, const Sizes& s, VerificationReport& report) {
  const std::size_t cap = std::max<std::size_t>(1, std::min<std::size_t>(s.host, 6));
  const std::size_t host_r = gen.uniform(1, cap);
  auto orders = random_orders(gen, host_r, 1, std::min<std::size_t>(s.branch, 6));
  Checker c(report, [&] { return io::json{{"host_r", host_r}, {"branch_orders", orders}}; });
  c.expect("extended_cycles_degree_distance",
           moment(extended_cycle_graft(host_r, orders).graph, WeightFunction::degree()),
           extended_cycles_degree_distance(host_r, extended_cycle_shapes(orders)));
}

void run_propercycles(InstanceGenerator& gen, const Sizes& s, VerificationReport& report) {
  const std::size_t host_r = gen.uniform(3, std::max<std::size_t>(3, std::min<std::size_t>(s.host, 6)));
  auto orders = random_orders(gen, host_r, 3, std::max<std::size_t>(3, std::min<std::size_t>(s.branch, 6)));
  std::vector<std::int64_t> signed_orders(orders.begin(), orders.end());
  Checker c(report, [&] { return io::json{{"host_r", host_r}, {"branch_orders", orders}}; });
  const Rational formula = proper_cycles_degree_distance(host_r, signed_orders);
  c.expect("proper_cycles_degree_distance",
           moment(extended_cycle_graft(host_r, orders).graph, WeightFunction::degree()), formula);
  c.expect("proper_vs_extended", extended_cycles_degree_distance(host_r, extended_cycle_shapes(orders)), formula);
}

}  // namespace

std::span<const std::string_view> verifiable_formulas() { return kFormulas; }

VerificationReport verify_formula(std::string_view formula, const VerifyOptions& options) {
  if (std::find(kFormulas.begin(), kFormulas.end(), formula) == kFormulas.end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown formula '" + std::string(formula) + "'");
  }
  if (options.max_size == 0) throw Error(ErrorKind::InvalidArgument, "max-size must be positive");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.formula = std::string(formula);
  report.seed = options.seed;
  InstanceGenerator gen(options.seed);
  const Sizes sizes{options.max_size, std::min(kMaxBranchOrder, options.max_size)};
  for (std::size_t i = 0; i < options.count; ++i) {
    if (formula == "theorem1") run_graft(gen, sizes, report, false);
    else if (formula == "theorem41") run_graft(gen, sizes, report, true);
    else if (formula == "sigma") run_sigma(gen, sizes, report);
    else if (formula == "flower") run_flower(gen, sizes, report);
    else if (formula == "comparison") run_comparison(gen, sizes, report);
    else if (formula == "unicyclic") run_unicyclic(gen, sizes, report);
    else if (formula == "extcycles") run_extcycles(gen, sizes, report);
    else run_propercycles(gen, sizes, report);
    ++report.instances;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

io::json to_json(const VerificationReport& report) {
  io::json mismatches = io::json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"check", m.check},
                          {"expected", m.expected.str()},
                          {"got", m.got.str()},
                          {"instance", io::json::parse(m.instance)}});
  }
  return io::json{{"formula", report.formula},
                  {"seed", report.seed},
                  {"instances", report.instances},
                  {"mismatch_count", report.mismatches.size()},
                  {"mismatches", std::move(mismatches)}};
}

namespace {

std::optional<Rational> predicted_moment(const Graph& h, const Graph& k, const std::string& spec) {
  if (spec == "unit") return permutation_unit_moment(h, k);
  if (spec == "half") return permutation_unit_moment(h, k) / 2;
  if (spec == "degree") return permutation_degree_moment(h, k);
  if (spec.starts_with("const:")) return io::parse_weight_spec(spec).scale() * permutation_unit_moment(h, k);
  return std::nullopt;
}

}  // namespace

IsomomentReport isomoment_family(const Graph& h, const Graph& k, std::span<const std::string> weight_specs,
                                 std::size_t samples, std::uint64_t seed) {
  if (h.order() != k.order() || h.empty()) {
    throw Error(ErrorKind::OrderMismatch, "host and branch must have the same positive order");
  }
  IsomomentReport report;
  report.r = h.order();
  report.weights.assign(weight_specs.begin(), weight_specs.end());
  std::vector<WeightFunction> weights;
  for (const auto& spec : report.weights) {
    weights.push_back(io::parse_weight_spec(spec));
    report.predicted.push_back(predicted_moment(h, k, spec));
  }

  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> buckets;
  auto consider = [&](const std::vector<std::size_t>& sigma) {
    ++report.permutations;
    Graph g = permutation_graph(h, k, sigma).graph;
    auto& bucket = buckets[isomorphism_invariant(g)];
    for (std::size_t idx : bucket) {
      if (are_isomorphic(report.classes[idx].representative, g, g.order())) {
        ++report.classes[idx].members;
        return;
      }
    }
    IsomomentClass cls{sigma, 1, {}, std::move(g)};
    const auto dm = distance_matrix(cls.representative);
    for (const auto& w : weights) cls.moments.push_back(moment(cls.representative, dm, w));
    bucket.push_back(report.classes.size());
    report.classes.push_back(std::move(cls));
  };

  std::vector<std::size_t> sigma(report.r);
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
  if (report.r <= kMaxEnumeratedOrder) {
    do consider(sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));
  } else {
    report.sampled = true;
    InstanceGenerator gen(seed);
    for (std::size_t i = 0; i < samples; ++i) consider(gen.permutation(report.r));
  }

  for (std::size_t w = 0; w < weights.size(); ++w) {
    for (const auto& cls : report.classes) {
      if (cls.moments[w] != report.classes.front().moments[w]) report.consistent = false;
      if (report.predicted[w] && cls.moments[w] != *report.predicted[w]) report.consistent = false;
    }
  }
  return report;
}

io::json to_json(const IsomomentReport& report) {
  io::json classes = io::json::array();
  for (const auto& cls : report.classes) {
    io::json moments = io::json::object();
    for (std::size_t w = 0; w < report.weights.size(); ++w) moments[report.weights[w]] = cls.moments[w].str();
    classes.push_back({{"sigma", cls.sigma},
                       {"members", cls.members},
                       {"moments", std::move(moments)},
                       {"graph", io::to_json(cls.representative)}});
  }
  io::json predicted = io::json::object();
  for (std::size_t w = 0; w < report.weights.size(); ++w) {
    predicted[report.weights[w]] = report.predicted[w] ? io::json(report.predicted[w]->str()) : io::json(nullptr);
  }
  return io::json{{"r", report.r},
                  {"permutations", report.permutations},
                  {"sampled", report.sampled},
                  {"class_count", report.classes.size()},
                  {"consistent", report.consistent},
                  {"predicted", std::move(predicted)},
                  {"classes", std::move(classes)}};
}

std::vector<ThetaRow> theta_table(std::size_t max_r) {
  std::vector<ThetaRow> rows;
  for (std::size_t r = 1; r <= max_r; ++r) {
    const auto theta = cycle_theta(static_cast<std::int64_t>(r));
    const auto dm = distance_matrix(extended_cycle(r));
    bool match = std::all_of(dm.row_sums().begin(), dm.row_sums().end(),
                             [&](std::uint64_t s) { return static_cast<std::int64_t>(s) == theta; });
    rows.push_back({static_cast<std::int64_t>(r), theta, match});
  }
  return rows;
}

}  // namespace graft_moments
