#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unisep/error.hpp"
#include "unisep/gf/matrix.hpp"
#include "unisep/harness.hpp"
#include "unisep/jordan.hpp"
#include "unisep/labels.hpp"

namespace py = pybind11;
using namespace unisep;

namespace {

gf::Matrix to_matrix(const std::vector<std::vector<int>>& rows, unsigned p) { return gf::Matrix::from_rows(p, rows); }

RunConfig config(const std::string& preset, std::uint64_t seed, std::size_t workers, std::size_t budget,
                 std::size_t saturation) {
  RunConfig c;
  c.preset = preset;
  c.seed = seed;
  c.workers = workers;
  c.budget = budget;
  c.saturation = saturation;
  return c;
}

// Reports cross the boundary as JSON text; the package decodes them.
std::pair<std::string, bool> out(const Report& r) { return {r.json.dump(), r.ok}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unipotent class separation over GF(2)";
  m.attr("__version__") = version();

  // Translators run most recent first, so the base class goes first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  m.def("preset_names", &preset_names);
  m.def(
      "jordan_type",
      [](const std::vector<std::vector<int>>& rows, unsigned p) {
        std::vector<std::pair<std::size_t, std::size_t>> r;
        const JordanType t = jordan_type(to_matrix(rows, p));
        for (const auto& b : t.blocks()) r.emplace_back(b.size, b.multiplicity);
        return r;
      },
      py::arg("rows"), py::arg("p") = 2);
  m.def(
      "hesselink_label",
      [](const std::string& preset, const std::string& word) {
        const Preset p = load_preset(preset);
        return hesselink_label(evaluate_word(p.gens, GroupWord::parse(word)), p.form).to_string();
      },
      py::arg("preset"), py::arg("word"));

  m.def(
      "classify",
      [](const std::string& preset, const std::string& word) {
        return out(cmd_classify(load_preset(preset), word, config(preset, 1, 1, 32000, 20000)));
      },
      py::arg("preset"), py::arg("word"));
  m.def(
      "chop",
      [](const std::string& preset, const std::string& expr, std::uint64_t seed, std::size_t budget) {
        py::gil_scoped_release release;
        return out(cmd_chop(load_preset(preset), expr, config(preset, seed, 1, budget, 20000)));
      },
      py::arg("preset"), py::arg("expr"), py::arg("seed") = 1, py::arg("budget") = 32000);
  m.def(
      "labels",
      [](const std::string& preset, std::uint64_t seed, std::size_t saturation, std::size_t workers) {
        py::gil_scoped_release release;
        return out(cmd_labels(load_preset(preset), config(preset, seed, workers, 32000, saturation)));
      },
      py::arg("preset"), py::arg("seed") = 1, py::arg("saturation") = 20000, py::arg("workers") = 1);
  m.def(
      "separate",
      [](const std::string& preset, std::uint64_t seed, std::size_t saturation, std::size_t workers,
         std::size_t budget) {
        py::gil_scoped_release release;
        return out(cmd_separate(load_preset(preset), config(preset, seed, workers, budget, saturation)));
      },
      py::arg("preset"), py::arg("seed") = 1, py::arg("saturation") = 20000, py::arg("workers") = 1,
      py::arg("budget") = 32000);
  m.def(
      "table3",
      [](std::uint64_t seed, std::size_t budget, std::size_t workers) {
        py::gil_scoped_release release;
        return out(cmd_table3(load_preset("sp10"), config("sp10", seed, workers, budget, 20000)));
      },
      py::arg("seed") = 1, py::arg("budget") = 7216, py::arg("workers") = 1);
}
