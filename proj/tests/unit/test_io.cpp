#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "graft_moments/error.hpp"
#include "graft_moments/io.hpp"
#include "graft_moments/moments.hpp"
#include "graft_moments/products.hpp"

namespace gm = graft_moments;
namespace io = graft_moments::io;
using gm::Rational;
using io::json;

namespace {

gm::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const gm::Error& e) {
    return e.kind();
  }
  FAIL("expected graft_moments::Error");
  return gm::ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("graph json round trip") {
  auto j = json::parse(R"({"vertices":[0,1,2],"edges":[[0,1],[1,2]]})");
  auto g = io::graph_from_json(j);
  CHECK(g == gm::path_graph(3));
  CHECK(io::to_json(g) == j);
}

TEST_CASE("graph json errors") {
  CHECK(kind_of([] { io::graph_from_json(json::parse(R"({"vertices":[0,0],"edges":[]})")); }) ==
        gm::ErrorKind::ParseError);
  CHECK(kind_of([] { io::graph_from_json(json::parse(R"({"vertices":[0,1],"edges":[[1,1]]})")); }) ==
        gm::ErrorKind::ParseError);
  CHECK(kind_of([] { io::graph_from_json(json::parse(R"({"vertices":[0]})")); }) == gm::ErrorKind::ParseError);
  CHECK(kind_of([] { io::graph_from_json(json::parse(R"({"vertices":["a"],"edges":[]})")); }) ==
        gm::ErrorKind::ParseError);
  CHECK(kind_of([] { io::read_json_file("/nonexistent/graph.json"); }) == gm::ErrorKind::ParseError);
}

TEST_CASE("weight specs") {
  auto g = gm::star_graph(2);
  CHECK(io::parse_weight_spec("unit").eval(g, 0) == Rational(1));
  CHECK(io::parse_weight_spec("half").eval(g, 0) == Rational(1, 2));
  CHECK(io::parse_weight_spec("degree").eval(g, 0) == Rational(2));
  CHECK(io::parse_weight_spec("const:3/4").eval(g, 1) == Rational(3, 4));
  CHECK(kind_of([] { io::parse_weight_spec("weird"); }) == gm::ErrorKind::ParseError);
  CHECK(kind_of([] { io::parse_weight_spec("const:x"); }) == gm::ErrorKind::ParseError);

  auto path = std::filesystem::temp_directory_path() / "graft_moments_weights.json";
  std::ofstream(path) << R"({"0":"1/2","1":"3","2":"0/1"})";
  auto w = io::parse_weight_spec("file:" + path.string());
  CHECK(w.eval(g, 0) == Rational(1, 2));
  CHECK(w.eval(g, 1) == Rational(3));
  std::filesystem::remove(path);
}

TEST_CASE("graft spec json") {
  auto j = json::parse(R"({"host":{"vertices":[0,1],"edges":[[0,1]]},
    "attachments":[{"receptor":0,"branch":{"vertices":[0,1,2],"edges":[[0,1],[1,2]]},"root":2,"weights":"degree"}],
    "host_weights":"unit"})");
  auto spec = io::graft_spec_from_json(j);
  CHECK(spec.attachments.size() == 1);
  CHECK(spec.attachments[0].root == 2);
  auto again = io::graft_spec_from_json(io::to_json(spec));
  CHECK(io::to_json(again) == io::to_json(spec));
  CHECK(kind_of([] { io::graft_spec_from_json(json::parse(R"({"attachments":[]})")); }) ==
        gm::ErrorKind::ParseError);
}

TEST_CASE("reports serialize rationals as p/q strings") {
  auto r = io::to_json(gm::indices(gm::diamond_graph()));
  CHECK(r["moment"] == "14/1");
  CHECK(r["mean_distance"] == "7/8");
  CHECK(r["degree_distance"] == "34/1");

  auto p = io::to_json(gm::coalescence(gm::path_graph(2), 1, gm::path_graph(2), 0));
  CHECK(p["gamma"]["1"] == "2/1");
  CHECK(p.contains("host_map"));
  CHECK(p["branch_maps"].size() == 1);
}
