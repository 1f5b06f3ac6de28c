#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hckm/driver.hpp"
#include "hckm/enumeration.hpp"
#include "hckm/io.hpp"
#include "hckm/oracle.hpp"

namespace py = pybind11;
using namespace hckm;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hard-capacitated k-means: FPT approximation solver and oracles";

    py::register_exception<InfeasibleError>(m, "InfeasibleInstanceError");

    py::class_<Instance>(m, "Instance")
        .def(py::init([](std::vector<Point> points, int k, std::int64_t u) {
                 Instance inst{std::move(points), k, u};
                 inst.validate();
                 return inst;
             }),
             py::arg("points"), py::arg("k"), py::arg("u"))
        .def_readonly("points", &Instance::points)
        .def_readonly("k", &Instance::k)
        .def_readonly("u", &Instance::u)
        .def_property_readonly("n", &Instance::n)
        .def_property_readonly("dim", &Instance::dim);

    py::class_<Partition>(m, "Partition")
        .def_readonly("labels", &Partition::labels)
        .def_readonly("centers", &Partition::centers);

    py::class_<CostReport>(m, "CostReport")
        .def_readonly("cost_d", &CostReport::cost_d)
        .def_readonly("cost_h", &CostReport::cost_h);

    py::class_<SubroutineConfig>(m, "SubroutineConfig")
        .def(py::init<>())
        .def_readwrite("epsilon_prime", &SubroutineConfig::epsilon_prime)
        .def_readwrite("overseed_factor", &SubroutineConfig::overseed_factor)
        .def_readwrite("lloyd_rounds", &SubroutineConfig::lloyd_rounds)
        .def_readwrite("rng_seed", &SubroutineConfig::rng_seed);

    py::class_<DriverOptions>(m, "DriverOptions")
        .def(py::init<>())
        .def_readwrite("workers", &DriverOptions::workers)
        .def_readwrite("prune", &DriverOptions::prune)
        .def_readwrite("subroutine", &DriverOptions::subroutine);

    py::class_<SubroutineStats>(m, "SubroutineStats")
        .def_readonly("set_size", &SubroutineStats::set_size)
        .def_readonly("voronoi_cost", &SubroutineStats::voronoi_cost)
        .def_readonly("seed", &SubroutineStats::seed);

    py::class_<Solution>(m, "Solution")
        .def_readonly("partition", &Solution::partition)
        .def_readonly("cost_before_recenter", &Solution::cost_before_recenter)
        .def_readonly("cost_after_recenter", &Solution::cost_after_recenter)
        .def_readonly("winning_composition", &Solution::winning_composition)
        .def_readonly("compositions_evaluated", &Solution::compositions_evaluated)
        .def_readonly("subroutine_stats", &Solution::subroutine_stats)
        .def_readonly("wall_time_ms", &Solution::wall_time_ms)
        .def_readonly("complete", &Solution::complete);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("opt_cost", &OracleResult::opt_cost)
        .def_readonly("opt_partition", &OracleResult::opt_partition)
        .def_readonly("nodes_explored", &OracleResult::nodes_explored);

    m.def("check_feasibility", &check_feasibility, py::arg("instance"));
    m.def("centroid", &centroid, py::arg("cluster"));
    m.def("evaluate_cost_d", &evaluate_cost_d, py::arg("instance"), py::arg("partition"));
    m.def("dist_d", &dist_d, py::arg("x"), py::arg("y"));
    m.def("check_extended_triangle", &check_extended_triangle);
    m.def("check_four_point", &check_four_point);
    m.def("run_subroutine",
          [](const Instance& inst, const SubroutineConfig& cfg) {
              return run_subroutine(inst, cfg);
          },
          py::arg("instance"), py::arg("config"));
    m.def("count_compositions", &count_compositions, py::arg("size"), py::arg("k"),
          py::arg("per_slot_cap"));
    m.def("list_compositions",
          [](int size, int k, int cap) {
              std::vector<Composition> all;
              enumerate_compositions(size, k, cap, [&](const Composition& c) {
                  all.push_back(c);
                  return true;
              });
              return all;
          },
          py::arg("size"), py::arg("k"), py::arg("per_slot_cap"));
    m.def("solve_hckm",
          [](const Instance& inst, const SubroutineConfig& cfg, const DriverOptions& opts) {
              return solve_hckm(inst, cfg, opts);
          },
          py::arg("instance"), py::arg("config") = SubroutineConfig{},
          py::arg("options") = DriverOptions{});
    m.def("ratio_bound", &ratio_bound, py::arg("lambda1"), py::arg("lambda2"));
    m.def("exact_hckm", &exact_hckm, py::arg("instance"));
    m.def("exact_km", &exact_km, py::arg("instance"));
    m.def("generate_blobs",
          [](int count, int per_blob, double sigma, double spread, int dim,
             std::uint64_t seed) {
              return generate_instance({count, per_blob, sigma, spread, dim, seed});
          },
          py::arg("count"), py::arg("per_blob"), py::arg("sigma"), py::arg("spread"),
          py::arg("dim") = 2, py::arg("seed") = 0);
    m.def("solution_to_json", &solution_to_json, py::arg("solution"), py::arg("instance"),
          py::arg("config"), py::arg("include_timing") = true);
}
