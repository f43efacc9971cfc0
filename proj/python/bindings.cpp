#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recsort/bench.hpp"
#include "recsort/sort.hpp"

namespace py = pybind11;

namespace {

recsort::Alphabet make_alphabet(const std::string& symbols) {
  return recsort::Alphabet(symbols);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Count-space digit sorting (recombinant sort) with benchmark helpers";

  py::register_exception<recsort::Error>(m, "Error", PyExc_ValueError);

  py::class_<recsort::ExtractionReport>(m, "ExtractionReport")
      .def_readonly("written", &recsort::ExtractionReport::written)
      .def_readonly("cells_traversed", &recsort::ExtractionReport::cells_traversed)
      .def("__repr__", [](const recsort::ExtractionReport& r) {
        return "ExtractionReport(written=" + std::to_string(r.written) +
               ", cells_traversed=" + std::to_string(r.cells_traversed) + ")";
      });

  py::class_<recsort::bench::KeyShape>(m, "KeyShape")
      .def_readonly("total_digits", &recsort::bench::KeyShape::total_digits)
      .def_readonly("integer_digits", &recsort::bench::KeyShape::integer_digits)
      .def_readonly("cell_count", &recsort::bench::KeyShape::cell_count)
      .def_readonly("count_dims", &recsort::bench::KeyShape::count_dims)
      .def_readonly("h_min_dims", &recsort::bench::KeyShape::h_min_dims)
      .def_readonly("h_max_dims", &recsort::bench::KeyShape::h_max_dims);

  py::class_<recsort::bench::WorstCaseConstant>(m, "WorstCaseConstant")
      .def_readonly("numerator", &recsort::bench::WorstCaseConstant::numerator)
      .def_readonly("denominator", &recsort::bench::WorstCaseConstant::denominator)
      .def_property_readonly("value", &recsort::bench::WorstCaseConstant::value)
      .def("below_squared_bound",
           &recsort::bench::WorstCaseConstant::below_squared_bound);

  m.def(
      "sort_decimals",
      [](const std::vector<std::string>& values, std::uint64_t max_cells) {
        auto r = recsort::sort_decimals(values, max_cells);
        return py::make_tuple(std::move(r.values), r.report);
      },
      py::arg("values"), py::arg("max_cells") = recsort::kDefaultCellBudget,
      "Sort decimal numerals; returns (sorted padded values, report).");

  m.def(
      "sort_integers",
      [](const std::vector<std::int64_t>& values, std::uint64_t max_cells) {
        auto r = recsort::sort_integers(values, max_cells);
        return py::make_tuple(std::move(r.values), r.report);
      },
      py::arg("values"), py::arg("max_cells") = recsort::kDefaultCellBudget,
      "Sort non-negative integers; returns (sorted values, report).");

  m.def(
      "sort_strings",
      [](const std::vector<std::string>& values, const std::string& alphabet,
         std::uint64_t max_cells) {
        auto r = recsort::sort_strings(values, make_alphabet(alphabet), max_cells);
        return py::make_tuple(std::move(r.values), r.report);
      },
      py::arg("values"), py::arg("alphabet") = "abcdefghijklmnopqrstuvwxyz",
      py::arg("max_cells") = recsort::kDefaultCellBudget,
      "Sort strings lexicographically over a fixed alphabet.");

  m.def(
      "generate",
      [](std::size_t n_elements, double range_lo, double range_hi,
         std::uint32_t cd, std::uint64_t seed) {
        return recsort::bench::generate(
            recsort::bench::DatasetSpec{n_elements, range_lo, range_hi, cd, seed});
      },
      py::arg("n_elements"), py::arg("range_lo"), py::arg("range_hi"),
      py::arg("cd"), py::arg("seed"),
      "Deterministic uniform decimal dataset over [range_lo, range_hi).");

  m.def(
      "describe",
      [](double range_lo, double range_hi, std::uint32_t cd) {
        return recsort::bench::describe(
            recsort::bench::CaseSpec{range_lo, range_hi, cd});
      },
      py::arg("range_lo"), py::arg("range_hi"), py::arg("cd"),
      "Count-array and traverse-map dimensions for a range/cd case.");

  m.def("worst_case_constant", &recsort::bench::worst_case_constant, py::arg("d"),
        "The exact worst-case multiplier C = 1 + 10^(d-1)/d.");

  m.attr("DEFAULT_CELL_BUDGET") = recsort::kDefaultCellBudget;
  m.attr("__version__") = "0.1.0";
}
