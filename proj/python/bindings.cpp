#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "picker/dp.hpp"
#include "picker/errors.hpp"
#include "picker/model.hpp"
#include "picker/oracle.hpp"
#include "picker/reduce.hpp"
#include "picker/render.hpp"
#include "picker/tour.hpp"

namespace py = pybind11;
using namespace picker;

namespace {

py::dict solve(const std::string &instance_json, bool prune, bool exclude_double) {
  const auto instance = parse_instance(instance_json);
  const WarehouseGraph graph(instance);
  const auto result = solve_dp(instance, {prune, exclude_double});
  py::dict out;
  out["length"] = result.length;
  out["tour"] = serialize_tour(graph, result.subgraph);
  out["states_expanded"] = result.stats.states_expanded;
  out["transitions"] = result.stats.transitions;
  return out;
}

py::dict held_karp(const std::string &instance_json) {
  const auto result = solve_held_karp(parse_instance(instance_json));
  py::dict out;
  out["length"] = result.length;
  out["order"] = result.order;
  return out;
}

py::dict brute_force(const std::string &instance_json) {
  const auto instance = parse_instance(instance_json);
  const WarehouseGraph graph(instance);
  const auto result = brute_force_subgraphs(instance);
  py::dict out;
  out["length"] = result.length;
  out["tour"] = serialize_tour(graph, *result.subgraph);
  return out;
}

py::dict verify(const std::string &instance_json, const std::string &tour_json) {
  const WarehouseGraph graph(parse_instance(instance_json));
  const auto tour = parse_tour(graph, tour_json);
  const auto report = is_tour_subgraph(graph, tour);
  py::list failures;
  for (const auto &f : report.failures)
    failures.append(py::make_tuple(std::string(to_string(f.condition)), f.witness));
  py::dict out;
  out["valid"] = report.valid;
  out["failures"] = failures;
  out["length"] = tour_length(graph, tour);
  return out;
}

py::dict reduce(const std::string &instance_json, const std::string &tour_json) {
  const WarehouseGraph graph(parse_instance(instance_json));
  const auto tour = parse_tour(graph, tour_json);
  const auto result = eliminate_connecting_doubles(graph, tour);
  py::list steps;
  for (const auto &s : result.steps) {
    py::dict step;
    step["case"] = s.case_label;
    step["aisle"] = s.run.aisle;
    step["rows"] = py::make_tuple(s.run.low_row, s.run.high_row);
    step["length_before"] = s.length_before;
    step["length_after"] = s.length_after;
    step["valid_after"] = s.valid_after;
    step["potential_decreased"] = s.potential_decreased;
    steps.append(step);
  }
  py::dict out;
  out["tour"] = serialize_tour(graph, result.tour);
  out["length"] = tour_length(graph, result.tour);
  out["steps"] = steps;
  out["trace"] = format_trace(result.steps);
  return out;
}

std::string generate(std::uint64_t seed, int aisles, int cross_aisles, int items) {
  GeneratorParams params;
  params.aisles = aisles;
  params.cross_aisles = cross_aisles;
  params.items = items;
  return serialize_instance(generate_instance(params, seed));
}

std::string render(const std::string &instance_json, const std::optional<std::string> &tour_json) {
  const WarehouseGraph graph(parse_instance(instance_json));
  if (!tour_json)
    return render_svg(graph);
  const auto tour = parse_tour(graph, *tour_json);
  return render_svg(graph, &tour);
}

} // namespace

PYBIND11_MODULE(_picker, m) {
  m.doc() = "Single-picker routing in rectangular warehouses. Instances and tours are JSON documents.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  m.def("normalize_instance",
        [](const std::string &text) { return serialize_instance(parse_instance(text)); },
        py::arg("instance"), "Parse and re-serialize an instance document.");
  m.def("solve", &solve, py::arg("instance"), py::arg("prune") = true,
        py::arg("exclude_double") = false, "Optimal tour by the frontier dynamic program.");
  m.def("held_karp", &held_karp, py::arg("instance"), "Optimal length and visiting order.");
  m.def("brute_force", &brute_force, py::arg("instance"),
        "Optimal tour by enumerating configurations on tiny instances.");
  m.def("verify", &verify, py::arg("instance"), py::arg("tour"),
        "Validity report and length of a tour document.");
  m.def("reduce", &reduce, py::arg("instance"), py::arg("tour"),
        "Remove connecting double runs from a valid tour.");
  m.def("generate", &generate, py::arg("seed"), py::arg("aisles") = 3,
        py::arg("cross_aisles") = 3, py::arg("items") = 5, "Random instance document.");
  m.def("render_svg", &render, py::arg("instance"), py::arg("tour") = py::none(),
        "SVG drawing of the layout and, optionally, a tour.");
}
