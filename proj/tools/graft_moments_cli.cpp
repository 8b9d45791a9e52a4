// graft-moments: distance moments and graft-product formulas from the command line.
//
// Exit status: 0 success, 1 verification failure, 2 input error, 3 domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graft_moments/error.hpp"
#include "graft_moments/io.hpp"
#include "graft_moments/moments.hpp"
#include "graft_moments/products.hpp"
#include "graft_moments/verification.hpp"

namespace gm = graft_moments;

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;
constexpr int kDomainError = 3;

int exit_code_for(gm::ErrorKind kind) {
  switch (kind) {
    case gm::ErrorKind::ParseError:
    case gm::ErrorKind::InvalidArgument: return kInputError;
    default: return kDomainError;
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GRAFT_MOMENTS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw gm::Error(gm::ErrorKind::ParseError, std::string("GRAFT_MOMENTS_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

void emit(const gm::io::json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gm::Error(gm::ErrorKind::ParseError, "cannot write " + out_path);
  out << text;
}

int cmd_indices(const std::string& graph_file, const std::string& weights) {
  auto g = gm::io::graph_from_json(gm::io::read_json_file(graph_file));
  auto w = gm::io::parse_weight_spec(weights);
  auto report = gm::io::to_json(gm::indices(g, w));
  gm::io::json out{{"weights", weights}, {"order", g.order()}, {"edge_count", g.edge_count()}};
  for (auto& [key, value] : report.items()) out[key] = value;
  emit(out, "");
  return 0;
}

int cmd_graft(const std::string& spec_file, const std::string& out_path) {
  auto spec = gm::io::graft_spec_from_json(gm::io::read_json_file(spec_file));
  emit(gm::io::to_json(gm::graft(spec)), out_path);
  return 0;
}

int cmd_verify(const std::string& formula, std::size_t count, std::uint64_t seed, std::size_t max_size) {
  auto report = gm::verify_formula(formula, {count, seed, max_size});
  emit(gm::to_json(report), "");
  std::cerr << "elapsed_ms: " << report.elapsed.count() << "\n";
  return report.ok() ? 0 : kVerificationFailed;
}

int cmd_isomoment(const std::string& host_file, const std::string& branch_file,
                  const std::vector<std::string>& weights, std::size_t samples, std::uint64_t seed) {
  auto h = gm::io::graph_from_json(gm::io::read_json_file(host_file));
  auto k = gm::io::graph_from_json(gm::io::read_json_file(branch_file));
  if (h.order() > gm::kMaxEnumeratedOrder) {
    std::cerr << "warning: r = " << h.order() << " > " << gm::kMaxEnumeratedOrder << ", sampling " << samples
              << " permutations with seed " << seed << "\n";
  }
  auto report = gm::isomoment_family(h, k, weights, samples, seed);
  emit(gm::to_json(report), "");
  return report.consistent ? 0 : kVerificationFailed;
}

int cmd_theta(std::size_t max_r) {
  if (max_r == 0) throw gm::Error(gm::ErrorKind::InvalidArgument, "max-r must be at least 1");
  bool all = true;
  std::cout << "r\ttheta\trow_sums\n";
  for (const auto& row : gm::theta_table(max_r)) {
    std::cout << row.r << "\t" << row.theta << "\t" << (row.rows_match ? "ok" : "MISMATCH") << "\n";
    all = all && row.rows_match;
  }
  return all ? 0 : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance moments of graphs and graft products"};
  app.require_subcommand(1);

  std::string graph_file, weights = "unit";
  auto* indices = app.add_subcommand("indices", "Moment and distance-based indices of a graph");
  indices->add_option("graph", graph_file, "Graph JSON file")->required();
  indices->add_option("--weights", weights, "unit | half | degree | const:p/q | file:path");

  std::string spec_file, out_path;
  auto* graft = app.add_subcommand("graft", "Build a graft product from a spec file");
  graft->add_option("spec", spec_file, "GraftSpec JSON file")->required();
  graft->add_option("--out", out_path, "Output path (default stdout)");

  std::string formula;
  std::size_t count = 100, max_size = 12;
  std::optional<std::uint64_t> seed;
  auto* verify = app.add_subcommand("verify", "Check a closed form against brute force on random instances");
  verify->add_option("formula", formula, "Formula name")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem41", "sigma", "flower", "comparison", "unicyclic", "extcycles",
                             "propercycles"}));
  verify->add_option("--count", count, "Number of instances");
  verify->add_option("--seed", seed, "Seed (falls back to GRAFT_MOMENTS_SEED, then 0)");
  verify->add_option("--max-size", max_size, "Maximum host order");

  std::string host_file, branch_file;
  std::vector<std::string> iso_weights{"unit", "degree"};
  std::size_t samples = 1000;
  auto* isomoment = app.add_subcommand("isomoment", "Enumerate permutation graphs and group equal-moment classes");
  isomoment->add_option("host", host_file, "Host graph JSON")->required();
  isomoment->add_option("branch", branch_file, "Branch graph JSON")->required();
  isomoment->add_option("--weights", iso_weights, "Comma-separated weight specs")->delimiter(',');
  isomoment->add_option("--count", samples, "Sampled permutations when r > 8");
  isomoment->add_option("--seed", seed, "Sampling seed (falls back to GRAFT_MOMENTS_SEED, then 0)");

  std::size_t max_r = 0;
  auto* theta = app.add_subcommand("theta", "Check cycle distance-matrix row sums");
  theta->add_option("max-r", max_r, "Largest cycle order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*indices) return cmd_indices(graph_file, weights);
    if (*graft) return cmd_graft(spec_file, out_path);
    if (*verify) return cmd_verify(formula, count, resolve_seed(seed), max_size);
    if (*isomoment) return cmd_isomoment(host_file, branch_file, iso_weights, samples, resolve_seed(seed));
    if (*theta) return cmd_theta(max_r);
  } catch (const gm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kInputError;
}
