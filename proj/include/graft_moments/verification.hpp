#pragma once

// Seeded formula-vs-oracle batches and the equal-moment family search that
// back the `verify`, `isomoment` and `theta` commands.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graft_moments/graph.hpp"
#include "graft_moments/io.hpp"
#include "graft_moments/rational.hpp"

namespace graft_moments {

struct Mismatch {
  std::string check;
  Rational expected;  // brute-force value on the constructed product
  Rational got;       // closed form
  std::string instance;
};

struct VerificationReport {
  std::string formula;
  std::size_t instances = 0;
  std::vector<Mismatch> mismatches;
  std::chrono::milliseconds elapsed{0};
  std::uint64_t seed = 0;

  bool ok() const noexcept { return mismatches.empty(); }
};

struct VerifyOptions {
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::size_t max_size = 12;  // host order cap; branches are capped at min(8, max_size)
};

/// theorem1, theorem41, sigma, flower, comparison, unicyclic, extcycles, propercycles
std::span<const std::string_view> verifiable_formulas();

/// Throws InvalidArgument for an unknown formula name.
VerificationReport verify_formula(std::string_view formula, const VerifyOptions& options);

/// Elapsed time is left out so equal seeds give equal bytes.
io::json to_json(const VerificationReport& report);

struct IsomomentClass {
  std::vector<std::size_t> sigma;  // first permutation (lexicographic) that produced the class
  std::size_t members = 0;
  std::vector<Rational> moments;   // one per requested weight
  Graph representative;
};

struct IsomomentReport {
  std::size_t r = 0;
  std::size_t permutations = 0;
  bool sampled = false;
  std::vector<std::string> weights;
  std::vector<std::optional<Rational>> predicted;  // closed form, where one exists for the weight
  std::vector<IsomomentClass> classes;
  bool consistent = true;
};

/// Builds every permutation graph of h and k (r <= 8) or `samples` seeded
/// random ones (r > 8), buckets them into isomorphism classes and evaluates
/// each weight spec directly on every product. Throws OrderMismatch.
IsomomentReport isomoment_family(const Graph& h, const Graph& k, std::span<const std::string> weight_specs,
                                 std::size_t samples, std::uint64_t seed);

inline constexpr std::size_t kMaxEnumeratedOrder = 8;

io::json to_json(const IsomomentReport& report);

struct ThetaRow {
  std::int64_t r;
  std::int64_t theta;
  bool rows_match;
};

/// For r = 1..max_r: the extended cycle of order r and whether every row sum
/// of its distance matrix equals cycle_theta(r).
std::vector<ThetaRow> theta_table(std::size_t max_r);

}  // namespace graft_moments
