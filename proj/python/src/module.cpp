#include <map>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graft_moments/closed_forms.hpp"
#include "graft_moments/error.hpp"
#include "graft_moments/graph.hpp"
#include "graft_moments/io.hpp"
#include "graft_moments/moments.hpp"
#include "graft_moments/products.hpp"
#include "graft_moments/rational.hpp"
#include "graft_moments/verification.hpp"
#include "graft_moments/weights.hpp"

namespace py = pybind11;
namespace gm = graft_moments;

// Rational <-> fractions.Fraction (also accepts int and "p/q" strings).
namespace pybind11::detail {
template <>
struct type_caster<gm::Rational> {
  PYBIND11_TYPE_CASTER(gm::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (py::isinstance<py::str>(src)) {
      value = gm::Rational::parse(src.cast<std::string>());
      return true;
    }
    if (PyBool_Check(src.ptr())) return false;
    if (py::isinstance<py::int_>(src)) {
      value = gm::Rational(src.cast<std::int64_t>());
      return true;
    }
    if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator") && !PyFloat_Check(src.ptr())) {
      value = gm::Rational(src.attr("numerator").cast<std::int64_t>(), src.attr("denominator").cast<std::int64_t>());
      return true;
    }
    return false;
  }

  static handle cast(const gm::Rational& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.numerator(), r.denominator()).release();
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_python(const gm::io::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::map<gm::VertexId, gm::Rational> gamma_table(const gm::GraftProduct& p) {
  std::map<gm::VertexId, gm::Rational> out;
  for (std::size_t i = 0; i < p.graph.order(); ++i) out.emplace(p.graph.id_at(i), p.gamma.eval_at(p.graph, i));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distance moments of graphs, graft products and their closed-form moment formulas.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<gm::Error>(m, "GraftMomentsError", PyExc_ValueError);

  py::class_<gm::Graph>(m, "Graph")
      .def(py::init([](std::vector<gm::VertexId> vertices, const std::vector<gm::Edge>& edges) {
             return gm::Graph(std::move(vertices), edges);
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("order", &gm::Graph::order)
      .def_property_readonly("edge_count", &gm::Graph::edge_count)
      .def_property_readonly("vertices", &gm::Graph::vertices)
      .def("edges", &gm::Graph::edges)
      .def("degree", &gm::Graph::degree)
      .def("adjacent", &gm::Graph::adjacent)
      .def("__contains__", &gm::Graph::contains)
      .def("__len__", &gm::Graph::order)
      .def("__eq__", [](const gm::Graph& a, const gm::Graph& b) { return a == b; })
      .def("__repr__", [](const gm::Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("singleton_graph", &gm::singleton_graph);
  m.def("path_graph", &gm::path_graph, py::arg("n"));
  m.def("cycle_graph", &gm::cycle_graph, py::arg("n"));
  m.def("extended_cycle", &gm::extended_cycle, py::arg("r"));
  m.def("complete_graph", &gm::complete_graph, py::arg("n"));
  m.def("star_graph", &gm::star_graph, py::arg("leaves"));
  m.def("diamond_graph", &gm::diamond_graph);
  m.def("binomial_tree", &gm::binomial_tree, py::arg("n"));

  m.def("bfs_distances", [](const gm::Graph& g, gm::VertexId source) {
    auto dist = gm::bfs_distances(g, source);
    std::map<gm::VertexId, std::uint32_t> out;
    for (std::size_t i = 0; i < dist.size(); ++i) out.emplace(g.id_at(i), dist[i]);
    return out;
  });
  m.def("distance_matrix", [](const gm::Graph& g) {
    auto dm = gm::distance_matrix(g);
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < dm.order(); ++i) rows.emplace_back(dm.row(i).begin(), dm.row(i).end());
    return rows;
  });
  m.def("is_connected", &gm::is_connected);
  m.def("is_tree", &gm::is_tree);
  m.def("are_isomorphic", &gm::are_isomorphic, py::arg("a"), py::arg("b"),
        py::arg("cap") = gm::kDefaultIsomorphismCap);

  py::class_<gm::WeightFunction>(m, "WeightFunction")
      .def_static("unit", &gm::WeightFunction::unit)
      .def_static("half", &gm::WeightFunction::half)
      .def_static("degree", &gm::WeightFunction::degree)
      .def_static("constant", &gm::WeightFunction::constant, py::arg("value"))
      .def_static("explicit", &gm::WeightFunction::explicit_values, py::arg("values"))
      .def_static("affine", &gm::WeightFunction::affine, py::arg("scale"), py::arg("base"), py::arg("offset"))
      .def_static("parse", [](const std::string& spec) { return gm::io::parse_weight_spec(spec); })
      .def("eval", &gm::WeightFunction::eval, py::arg("graph"), py::arg("vertex"))
      .def("__repr__", &gm::WeightFunction::describe);

  m.def("total_weight", &gm::total_weight, py::arg("weights"), py::arg("graph"));

  m.def("moment", py::overload_cast<const gm::Graph&, const gm::WeightFunction&>(&gm::moment), py::arg("graph"),
        py::arg("weights") = gm::WeightFunction::unit());
  m.def("moment_at",
        py::overload_cast<const gm::Graph&, const gm::WeightFunction&, gm::VertexId>(&gm::moment_at),
        py::arg("graph"), py::arg("weights"), py::arg("vertex"));
  m.def("moment_pairwise", &gm::moment_pairwise, py::arg("graph"), py::arg("weights"));
  m.def("indices", [](const gm::Graph& g, const gm::WeightFunction& w) { return to_python(gm::io::to_json(gm::indices(g, w))); },
        py::arg("graph"), py::arg("weights") = gm::WeightFunction::unit());

  py::class_<gm::Attachment>(m, "Attachment")
      .def(py::init([](gm::VertexId receptor, gm::Graph branch, gm::VertexId root, gm::WeightFunction weights) {
             return gm::Attachment{receptor, std::move(branch), root, std::move(weights)};
           }),
           py::arg("receptor"), py::arg("branch"), py::arg("root"), py::arg("weights") = gm::WeightFunction::degree())
      .def_readonly("receptor", &gm::Attachment::receptor)
      .def_readonly("branch", &gm::Attachment::branch)
      .def_readonly("root", &gm::Attachment::root);

  py::class_<gm::RootedBranch>(m, "RootedBranch")
      .def(py::init([](gm::Graph graph, gm::VertexId root, gm::WeightFunction weights) {
             return gm::RootedBranch{std::move(graph), root, std::move(weights)};
           }),
           py::arg("graph"), py::arg("root"), py::arg("weights") = gm::WeightFunction::degree())
      .def_readonly("graph", &gm::RootedBranch::graph)
      .def_readonly("root", &gm::RootedBranch::root);

  py::class_<gm::GraftSpec>(m, "GraftSpec")
      .def(py::init([](gm::Graph host, std::vector<gm::Attachment> attachments, gm::WeightFunction host_weights) {
             return gm::GraftSpec{std::move(host), std::move(attachments), std::move(host_weights)};
           }),
           py::arg("host"), py::arg("attachments"), py::arg("host_weights") = gm::WeightFunction::degree())
      .def_static("from_json", [](const std::string& text) {
        return gm::io::graft_spec_from_json(gm::io::json::parse(text));
      })
      .def("to_json", [](const gm::GraftSpec& s) { return gm::io::to_json(s).dump(); });

  py::class_<gm::GraftProduct>(m, "GraftProduct")
      .def_readonly("graph", &gm::GraftProduct::graph)
      .def_readonly("gamma_weights", &gm::GraftProduct::gamma)
      .def_property_readonly("gamma", &gamma_table)
      .def_readonly("host_map", &gm::GraftProduct::host_map)
      .def_readonly("branch_maps", &gm::GraftProduct::branch_maps)
      .def("moment", [](const gm::GraftProduct& p) { return gm::moment(p.graph, p.gamma); })
      .def("to_json", [](const gm::GraftProduct& p) { return gm::io::to_json(p).dump(); });

  const auto degree = gm::WeightFunction::degree();
  m.def("graft", &gm::graft, py::arg("spec"));
  m.def("coalescence", &gm::coalescence, py::arg("host"), py::arg("x"), py::arg("branch"), py::arg("y"),
        py::arg("alpha") = degree, py::arg("beta") = degree);
  m.def("rooted_product",
        [](const gm::Graph& h, const std::vector<gm::RootedBranch>& b, const gm::WeightFunction& a) {
          return gm::rooted_product(h, b, a);
        },
        py::arg("host"), py::arg("branches"), py::arg("alpha") = degree);
  m.def("flower", [](const gm::Rational& c, const std::vector<gm::RootedBranch>& b) { return gm::flower(c, b); },
        py::arg("center_weight"), py::arg("branches"));
  m.def("permutation_graph",
        [](const gm::Graph& h, const gm::Graph& k, const std::vector<std::size_t>& sigma,
           const gm::WeightFunction& a, const gm::WeightFunction& b) { return gm::permutation_graph(h, k, sigma, a, b); },
        py::arg("host"), py::arg("branch"), py::arg("sigma"), py::arg("alpha") = degree, py::arg("beta") = degree);
  m.def("hierarchical_product",
        [](const gm::Graph& h, const gm::Graph& k, gm::VertexId root, std::optional<std::vector<gm::VertexId>> receptors,
           const gm::WeightFunction& a, const gm::WeightFunction& b) {
          return receptors ? gm::hierarchical_product(h, k, root, *receptors, a, b)
                           : gm::hierarchical_product(h, k, root, a, b);
        },
        py::arg("host"), py::arg("branch"), py::arg("root"), py::arg("receptors") = py::none(),
        py::arg("alpha") = degree, py::arg("beta") = degree);
  m.def("star_receptor_graft", &gm::star_receptor_graft, py::arg("host"), py::arg("x"), py::arg("branch"),
        py::arg("root"), py::arg("copies"), py::arg("alpha") = degree, py::arg("beta") = degree);

  m.def("graft_moment", &gm::graft_moment, py::arg("spec"));
  m.def("family_graft_moment", py::overload_cast<const gm::GraftSpec&>(&gm::family_graft_moment), py::arg("spec"));
  m.def("flower_moment",
        [](const gm::Rational& c, const std::vector<gm::RootedBranch>& b) { return gm::flower_moment(c, b); },
        py::arg("center_weight"), py::arg("branches"));
  m.def("permutation_moment", &gm::permutation_moment, py::arg("host"), py::arg("alpha"), py::arg("branch"),
        py::arg("beta"));
  m.def("permutation_unit_moment", &gm::permutation_unit_moment);
  m.def("permutation_mean_distance", &gm::permutation_mean_distance);
  m.def("permutation_degree_moment", &gm::permutation_degree_moment);
  m.def("comparison_difference",
        [](const gm::Graph& h, const gm::WeightFunction& a, gm::VertexId x, const std::vector<gm::VertexId>& receptors,
           std::size_t order, const gm::Rational& total) {
          return gm::comparison_difference(h, a, x, receptors, order, total);
        },
        py::arg("host"), py::arg("alpha"), py::arg("x"), py::arg("receptors"), py::arg("branch_order"),
        py::arg("branch_total_weight"));
  m.def("cycle_theta", &gm::cycle_theta, py::arg("r"));
  m.def("unicyclic_degree_distance",
        [](std::size_t r, const std::map<gm::VertexId, std::vector<std::pair<gm::Graph, gm::VertexId>>>& forest) {
          std::map<gm::VertexId, std::vector<gm::RootedGraph>> f;
          for (const auto& [x, trees] : forest)
            for (const auto& [t, root] : trees) f[x].push_back({t, root});
          return gm::unicyclic_degree_distance(r, f);
        },
        py::arg("r"), py::arg("forest"));
  m.def("extended_cycles_degree_distance",
        [](std::size_t host_r, const std::vector<std::pair<std::int64_t, std::int64_t>>& per_vertex) {
          return gm::extended_cycles_degree_distance(host_r, per_vertex);
        },
        py::arg("host_r"), py::arg("per_vertex"));
  m.def("proper_cycles_degree_distance",
        [](std::size_t host_r, const std::vector<std::int64_t>& orders) {
          return gm::proper_cycles_degree_distance(host_r, orders);
        },
        py::arg("host_r"), py::arg("branch_orders"));

  m.def("verify",
        [](const std::string& formula, std::size_t count, std::uint64_t seed, std::size_t max_size) {
          return to_python(gm::to_json(gm::verify_formula(formula, {count, seed, max_size})));
        },
        py::arg("formula"), py::arg("count") = 100, py::arg("seed") = 0, py::arg("max_size") = 12);
}
