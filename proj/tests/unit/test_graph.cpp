#include <vector>

#include <doctest.h>

#include "../oracle.hpp"
#include "graft_moments/error.hpp"
#include "graft_moments/graph.hpp"
#include "graft_moments/random_instances.hpp"

namespace gm = graft_moments;
using gm::ErrorKind;
using gm::Graph;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const gm::Error& e) {
    return e.kind();
  }
  FAIL("expected graft_moments::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("construction validates ids and edges") {
  CHECK(kind_of([] { Graph({0, 0}, {}); }) == ErrorKind::InvalidGraph);
  CHECK(kind_of([] { Graph({-1}, {}); }) == ErrorKind::InvalidGraph);
  CHECK(kind_of([] { Graph({0, 1}, {{0, 0}}); }) == ErrorKind::InvalidGraph);
  CHECK(kind_of([] { Graph({0, 1}, {{0, 1}, {1, 0}}); }) == ErrorKind::InvalidGraph);
  CHECK(kind_of([] { Graph({0, 1}, {{0, 5}}); }) == ErrorKind::UnknownVertex);
  std::vector<gm::VertexId> many(gm::kMaxOrder + 1);
  for (std::size_t i = 0; i < many.size(); ++i) many[i] = static_cast<gm::VertexId>(i);
  CHECK(kind_of([&] { Graph(many, std::vector<gm::Edge>{}); }) == ErrorKind::TooLarge);
}

TEST_CASE("sparse ids keep their insertion order") {
  Graph g({10, 3, 7}, {{10, 3}, {3, 7}});
  CHECK(g.order() == 3);
  CHECK(g.id_at(0) == 10);
  CHECK(g.degree(3) == 2);
  CHECK(g.adjacent(7, 3));
  CHECK_FALSE(g.adjacent(10, 7));
  CHECK(gm::bfs_distances(g, 10) == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("distance matrix and BFS agree with Floyd-Warshall") {
  gm::InstanceGenerator gen(11);
  for (int t = 0; t < 40; ++t) {
    Graph g = gen.connected_graph(gen.uniform(1, 14));
    auto dm = gm::distance_matrix(g);
    auto ref = oracle::floyd_warshall(g);
    for (std::size_t i = 0; i < g.order(); ++i) {
      auto row = gm::bfs_distances(g, g.id_at(i));
      std::uint64_t sum = 0;
      for (std::size_t j = 0; j < g.order(); ++j) {
        REQUIRE(dm.at(i, j) == ref[i][j]);
        REQUIRE(row[j] == ref[i][j]);
        sum += ref[i][j];
      }
      CHECK(dm.row_sum(i) == sum);
    }
  }
}

TEST_CASE("disconnected and empty graphs are rejected") {
  Graph two({0, 1}, {});
  CHECK_FALSE(gm::is_connected(two));
  CHECK(kind_of([&] { gm::distance_matrix(two); }) == ErrorKind::DisconnectedGraph);
  CHECK(kind_of([&] { gm::bfs_distances(two, 0); }) == ErrorKind::DisconnectedGraph);
  CHECK(kind_of([&] { gm::bfs_distances(two, 9); }) == ErrorKind::UnknownVertex);
  Graph none(std::vector<gm::VertexId>{}, std::vector<gm::Edge>{});
  CHECK(kind_of([&] { gm::distance_matrix(none); }) == ErrorKind::EmptyGraph);
}

TEST_CASE("named families") {
  CHECK(gm::path_graph(4).edge_count() == 3);
  CHECK(gm::cycle_graph(5).edge_count() == 5);
  CHECK(gm::complete_graph(5).edge_count() == 10);
  CHECK(gm::star_graph(3).degree(0) == 3);
  CHECK(gm::extended_cycle(1).order() == 1);
  CHECK(gm::extended_cycle(2).edge_count() == 1);
  CHECK(gm::extended_cycle(6) == gm::cycle_graph(6));
  Graph d = gm::diamond_graph();
  CHECK(d.edge_count() == 5);
  CHECK(d.degree(0) == 2);
  CHECK(d.degree(3) == 2);
  CHECK_FALSE(d.adjacent(0, 3));
  CHECK(gm::is_tree(gm::star_graph(4)));
  CHECK_FALSE(gm::is_tree(gm::cycle_graph(4)));
}

TEST_CASE("isomorphism") {
  Graph p = gm::path_graph(5);
  Graph q = gm::relabeled(p, {{0, 40}, {1, 3}, {2, 17}, {3, 8}, {4, 1}});
  CHECK(gm::are_isomorphic(p, q));
  CHECK_FALSE(gm::are_isomorphic(p, gm::star_graph(4)));
  // Same degree sequence, different structure.
  Graph c6 = gm::cycle_graph(6);
  Graph two_triangles({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(gm::are_isomorphic(c6, two_triangles));
  CHECK(kind_of([] { gm::are_isomorphic(gm::path_graph(20), gm::path_graph(20)); }) == ErrorKind::TooLarge);
  CHECK(gm::are_isomorphic(gm::path_graph(20), gm::path_graph(20), 20));
}
