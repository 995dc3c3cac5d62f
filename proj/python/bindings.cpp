#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "ising/dual_sampler.hpp"
#include "ising/error.hpp"
#include "ising/exact.hpp"
#include "ising/primal_sampler.hpp"
#include "ising/topology.hpp"

namespace py = pybind11;
using namespace ising;

namespace {

template <typename T>
std::vector<T> to_vector(std::span<const T> s) {
  return {s.begin(), s.end()};
}

std::vector<EdgeId> edge_ids(const EdgeSet& set) {
  const auto idx = set.indices();
  return {idx.begin(), idx.end()};
}

EstimateOptions options(std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  return {samples, seed, threads};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Primal and dual importance sampling for Ising partition functions";

  static py::exception<Error> ising_error(m, "IsingError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = ising_error;
      py::object instance = err(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(ising_error.ptr(), instance.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& endpoints) {
             return Graph::build(vertex_count, endpoints);
           }),
           py::arg("vertex_count"), py::arg("endpoints"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<std::pair<VertexId, VertexId>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      });

  py::class_<TreePartition>(m, "TreePartition")
      .def_property_readonly("branch_ids", [](const TreePartition& t) { return to_vector(t.branch_ids()); })
      .def_property_readonly("chord_ids", [](const TreePartition& t) { return to_vector(t.chord_ids()); })
      .def_property_readonly("root", &TreePartition::root)
      .def("incidence", [](const TreePartition& t) {
        std::vector<std::vector<int>> rows(t.branch_count(), std::vector<int>(t.chord_count(), 0));
        for (std::size_t i = 0; i < t.branch_count(); ++i) {
          for (std::size_t j = 0; j < t.chord_count(); ++j) rows[i][j] = t.incidence(i, j);
        }
        return rows;
      }, "branch x chord 0/1 matrix");

  m.def("maximum_spanning_tree", [](const Graph& g, const std::vector<double>& w) { return maximum_spanning_tree(g, w); },
        py::arg("graph"), py::arg("weights"));
  m.def("fundamental_cycle", [](const TreePartition& t, EdgeId c) { return edge_ids(fundamental_cycle(t, c)); });
  m.def("fundamental_cutset", [](const TreePartition& t, EdgeId b) { return edge_ids(fundamental_cutset(t, b)); });

  py::class_<IsingModel>(m, "IsingModel")
      .def(py::init<Graph, std::vector<double>>(), py::arg("graph"), py::arg("couplings"))
      .def_property_readonly("graph", &IsingModel::graph)
      .def_property_readonly("couplings", [](const IsingModel& model) { return to_vector(model.couplings()); })
      .def_property_readonly("is_ferromagnetic", &IsingModel::is_ferromagnetic);

  m.def("factor_primal", [](double j, bool y) { return factor_primal(j, y).value(); });
  m.def("factor_primal_reduced", [](double j, bool y) { return factor_primal_reduced(j, y).value(); });
  m.def("factor_dual", [](double j, bool y) { return factor_dual(j, y).value(); });
  m.def("factor_dual_reduced", [](double j, bool y) { return factor_dual_reduced(j, y).value(); });
  m.def("log_prefactor_primal", &log_prefactor_primal);
  m.def("log_prefactor_dual", &log_prefactor_dual);
  m.def("log_proposal_normalizer_primal", &log_proposal_normalizer_primal);
  m.def("log_proposal_normalizer_dual", &log_proposal_normalizer_dual);

  m.def("brute_force_log_Z", &brute_force_log_Z, py::arg("model"), py::arg("threads") = 1);
  m.def("brute_force_log_ZM", &brute_force_log_ZM, py::arg("model"), py::arg("partition"), py::arg("threads") = 1);
  m.def("brute_force_log_Zd", &brute_force_log_Zd, py::arg("model"), py::arg("partition"), py::arg("threads") = 1);
  m.def("closed_form_periodic_chain_log_Z", &closed_form_periodic_chain_log_Z);

  py::class_<EstimateReport>(m, "EstimateReport")
      .def_readonly("log_estimate", &EstimateReport::log_estimate)
      .def_readonly("log_reduced_estimate", &EstimateReport::log_reduced_estimate)
      .def_readonly("std_error_log", &EstimateReport::std_error_log)
      .def_readonly("empirical_chi_square", &EstimateReport::empirical_chi_square)
      .def_readonly("sample_count", &EstimateReport::sample_count)
      .def_readonly("seed", &EstimateReport::seed)
      .def_readonly("wall_time_seconds", &EstimateReport::wall_time_seconds)
      .def("__repr__", [](const EstimateReport& r) {
        return "EstimateReport(log_estimate=" + std::to_string(r.log_estimate) +
               ", std_error_log=" + std::to_string(r.std_error_log) +
               ", chi_square=" + std::to_string(r.empirical_chi_square) + ")";
      });

  m.def("estimate_primal",
        [](const IsingModel& model, const TreePartition& t, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
          py::gil_scoped_release release;
          return estimate_primal(model, t, options(samples, seed, threads));
        },
        py::arg("model"), py::arg("partition"), py::arg("samples"), py::arg("seed") = kDefaultSeed,
        py::arg("threads") = 1);
  m.def("estimate_dual",
        [](const IsingModel& model, const TreePartition& t, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
          py::gil_scoped_release release;
          return estimate_dual(model, t, options(samples, seed, threads));
        },
        py::arg("model"), py::arg("partition"), py::arg("samples"), py::arg("seed") = kDefaultSeed,
        py::arg("threads") = 1);

  m.def("periodic_chain", &periodic_chain, py::arg("n"));
  m.def("lattice_2d", &lattice_2d, py::arg("rows"), py::arg("cols"), py::arg("periodic") = false);
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("couplings_constant", &couplings_constant);
  m.def("couplings_uniform", &couplings_uniform, py::arg("graph"), py::arg("lo"), py::arg("hi"), py::arg("seed"));
  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("render_edge_list", &render_edge_list);

  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
