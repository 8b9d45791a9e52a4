#include <map>
#include <vector>

#include <doctest.h>

#include "../oracle.hpp"
#include "graft_moments/error.hpp"
#include "graft_moments/moments.hpp"
#include "graft_moments/products.hpp"
#include "graft_moments/random_instances.hpp"

namespace gm = graft_moments;
using gm::ErrorKind;
using gm::Rational;
using gm::WeightFunction;

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

TEST_CASE("graft renumbers host first, then branches in order") {
  gm::Graph host({5, 9}, {{5, 9}});
  gm::Graph branch({2, 4, 6}, {{2, 4}, {4, 6}});
  gm::GraftSpec spec{host, {{9, branch, 4, WeightFunction::unit()}}, WeightFunction::unit()};
  auto p = gm::graft(spec);
  CHECK(p.graph.vertices() == std::vector<gm::VertexId>{0, 1, 2, 3});
  CHECK(p.host_map.at(5) == 0);
  CHECK(p.host_map.at(9) == 1);
  REQUIRE(p.branch_maps.size() == 1);
  CHECK(p.branch_maps[0].at(4) == 1);
  CHECK(p.branch_maps[0].at(2) == 2);
  CHECK(p.branch_maps[0].at(6) == 3);
  CHECK(p.gamma.eval(p.graph, 1) == Rational(2));
  CHECK(p.gamma.eval(p.graph, 2) == Rational(1));
  CHECK(p.graph.degree(1) == 3);
}

TEST_CASE("graft is deterministic") {
  gm::InstanceGenerator a(3), b(3);
  for (int t = 0; t < 20; ++t) {
    auto pa = gm::graft(a.graft_spec(8, 4, 6, true));
    auto pb = gm::graft(b.graft_spec(8, 4, 6, true));
    CHECK(pa.graph == pb.graph);
    CHECK(gm::moment(pa.graph, pa.gamma) == gm::moment(pb.graph, pb.gamma));
  }
}

TEST_CASE("graft order and edge count") {
  gm::InstanceGenerator gen(21);
  for (int t = 0; t < 30; ++t) {
    auto spec = gen.graft_spec(10, 4, 6, true);
    auto p = gm::graft(spec);
    std::size_t n = spec.host.order(), m = spec.host.edge_count();
    for (const auto& a : spec.attachments) {
      n += a.branch.order() - 1;
      m += a.branch.edge_count();
    }
    CHECK(p.graph.order() == n);
    CHECK(p.graph.edge_count() == m);
    CHECK(oracle::connected(p.graph));
  }
}

TEST_CASE("graft input errors") {
  auto k2 = gm::path_graph(2);
  gm::Graph split({0, 1}, {});
  CHECK(kind_of([&] { gm::graft({k2, {{7, k2, 0, WeightFunction::unit()}}, WeightFunction::unit()}); }) ==
        ErrorKind::UnknownVertex);
  CHECK(kind_of([&] { gm::graft({k2, {{0, k2, 3, WeightFunction::unit()}}, WeightFunction::unit()}); }) ==
        ErrorKind::UnknownVertex);
  CHECK(kind_of([&] { gm::graft({split, {}, WeightFunction::unit()}); }) == ErrorKind::DisconnectedGraph);
  CHECK(kind_of([&] { gm::graft({k2, {{0, split, 0, WeightFunction::unit()}}, WeightFunction::unit()}); }) ==
        ErrorKind::DisconnectedGraph);
}

TEST_CASE("named products") {
  auto k2 = gm::path_graph(2);
  auto unit = WeightFunction::unit();
  auto c = gm::coalescence(k2, 1, k2, 0, unit, unit);
  CHECK(c.graph == gm::path_graph(3));

  std::vector<gm::RootedBranch> pendants(4, gm::RootedBranch{k2, 0, WeightFunction::degree()});
  auto sun = gm::rooted_product(gm::cycle_graph(4), pendants);
  CHECK(sun.graph.order() == 8);
  CHECK(oracle::degree_distance(sun.graph) == Rational(216));
  CHECK(gm::moment(sun.graph, sun.gamma) == Rational(216));
  CHECK(kind_of([&] { gm::rooted_product(gm::cycle_graph(3), pendants); }) == ErrorKind::ArityMismatch);

  std::vector<gm::RootedBranch> petals(3, gm::RootedBranch{k2, 0, unit});
  auto f = gm::flower(Rational(0), petals);
  CHECK(f.graph == gm::star_graph(3));
  CHECK(gm::moment(f.graph, f.gamma) == Rational(24));
  CHECK(kind_of([] { gm::flower(Rational(1), {}); }) == ErrorKind::InvalidArgument);

  std::vector<gm::VertexId> receptors{0, 0};
  CHECK(kind_of([&] { gm::hierarchical_product(k2, k2, 0, receptors); }) == ErrorKind::DuplicateReceptor);
  auto full = gm::hierarchical_product(gm::path_graph(3), k2, 0);
  CHECK(full.graph.order() == 6);

  auto star = gm::star_receptor_graft(k2, 0, k2, 0, 3);
  CHECK(star.graph.degree(0) == 4);
}

TEST_CASE("permutation graphs") {
  auto d = gm::diamond_graph();
  auto p = gm::path_graph(4);
  std::vector<std::size_t> sigma{1, 0, 3, 2};
  auto g = gm::permutation_graph(d, p, sigma);
  CHECK(g.graph.order() == 16);
  CHECK(g.graph.edge_count() == 17);
  // Host vertex 0 carries copy 0 rooted at P4's second vertex, which has degree 2.
  CHECK(g.graph.degree(0) == 2 + 2);
  std::vector<std::size_t> bad{0, 0, 1, 2};
  CHECK(kind_of([&] { gm::permutation_graph(d, p, bad); }) == ErrorKind::InvalidArgument);
  std::vector<std::size_t> id{0, 1, 2};
  CHECK(kind_of([&] { gm::permutation_graph(d, gm::path_graph(3), id); }) == ErrorKind::OrderMismatch);
}

TEST_CASE("binomial trees") {
  for (std::size_t n = 0; n <= 6; ++n) {
    auto t = gm::binomial_tree(n);
    CHECK(t.order() == (std::size_t{1} << n));
    CHECK(gm::is_tree(t));
    CHECK(t.degree(0) == n);
  }
  // The root's children head binomial trees of orders n-1, ..., 0.
  CHECK(gm::are_isomorphic(gm::binomial_tree(2), gm::path_graph(4)));
  CHECK(gm::are_isomorphic(gm::binomial_tree(3), gm::Graph({0, 1, 2, 3, 4, 5, 6, 7},
                                                            {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {4, 6}, {2, 7}})));
}

TEST_CASE("cycle grafts") {
  std::map<gm::VertexId, std::vector<gm::RootedGraph>> forest{{0, {{gm::path_graph(2), 0}}}};
  auto paw = gm::cycle_forest_graft(3, forest);
  CHECK(paw.graph.order() == 4);
  CHECK(gm::moment(paw.graph, paw.gamma) == Rational(30));
  std::map<gm::VertexId, std::vector<gm::RootedGraph>> not_tree{{0, {{gm::cycle_graph(3), 0}}}};
  CHECK(kind_of([&] { gm::cycle_forest_graft(3, not_tree); }) == ErrorKind::NotATree);

  std::vector<std::size_t> triangles{3, 3, 3};
  auto tt = gm::extended_cycle_graft(3, triangles);
  CHECK(tt.graph.order() == 9);
  CHECK(tt.graph.edge_count() == 12);
  CHECK(oracle::degree_distance(tt.graph) == Rational(360));
  std::vector<std::size_t> short_list{3};
  CHECK(kind_of([&] { gm::extended_cycle_graft(3, short_list); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("degree weights on both factors give degree weights on the product") {
  gm::InstanceGenerator gen(77);
  for (int t = 0; t < 30; ++t) {
    auto spec = gen.graft_spec(8, 4, 6, true);
    spec.host_weights = WeightFunction::degree();
    for (auto& a : spec.attachments) a.weights = WeightFunction::degree();
    auto p = gm::graft(spec);
    auto deg = oracle::degrees(p.graph);
    for (std::size_t i = 0; i < p.graph.order(); ++i) REQUIRE(p.gamma.eval_at(p.graph, i) == Rational(deg[i]));
  }
}

TEST_CASE("named products coincide where their definitions do") {
  auto k2 = gm::path_graph(2);
  auto p3 = gm::path_graph(3);
  auto unit = WeightFunction::unit();

  CHECK(gm::are_isomorphic(gm::hierarchical_product(k2, k2, 0).graph, gm::path_graph(4)));
  std::vector<gm::VertexId> one{1};
  auto single = gm::hierarchical_product(p3, k2, 0, one, unit, unit);
  auto coal = gm::coalescence(p3, 1, k2, 0, unit, unit);
  CHECK(single.graph == coal.graph);
  CHECK(gm::moment(single.graph, single.gamma) == gm::moment(coal.graph, coal.gamma));

  auto full = gm::hierarchical_product(p3, k2, 1, unit, unit);
  std::vector<gm::RootedBranch> same(3, gm::RootedBranch{k2, 1, unit});
  auto rooted = gm::rooted_product(p3, same, unit);
  CHECK(full.graph == rooted.graph);
  CHECK(gm::moment(full.graph, full.gamma) == gm::moment(rooted.graph, rooted.gamma));

  auto one_copy = gm::star_receptor_graft(p3, 2, k2, 0, 1, unit, unit);
  CHECK(one_copy.graph == gm::coalescence(p3, 2, k2, 0, unit, unit).graph);

  auto on_k1 = gm::star_receptor_graft(gm::singleton_graph(), 0, p3, 0, 3, WeightFunction::zero(), unit);
  std::vector<gm::RootedBranch> petals(3, gm::RootedBranch{p3, 0, unit});
  auto fl = gm::flower(Rational(0), petals);
  CHECK(on_k1.graph == fl.graph);
  CHECK(gm::moment(on_k1.graph, on_k1.gamma) == gm::moment(fl.graph, fl.gamma));

  // Two P3 branches hung by an endpoint on K2 form P6.
  auto two_p3 = gm::hierarchical_product(k2, p3, 0, unit, unit);
  CHECK(gm::are_isomorphic(two_p3.graph, gm::path_graph(6)));
  auto coal_p3 = gm::coalescence(p3, 1, p3, 1);
  CHECK(gm::are_isomorphic(coal_p3.graph, gm::star_graph(4)));
}
