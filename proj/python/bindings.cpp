#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "dsf/compliance.hpp"
#include "dsf/coverage.hpp"
#include "dsf/datasheet.hpp"
#include "dsf/field_registry.hpp"
#include "dsf/parser.hpp"
#include "dsf/rdf.hpp"
#include "dsf/report_json.hpp"
#include "dsf/risk.hpp"
#include "dsf/serializer.hpp"
#include "dsf/validator.hpp"

namespace py = pybind11;

namespace {

// Reports cross the boundary as plain dicts so callers get something
// json.dumps-able without a second conversion step.
py::object to_py(const nlohmann::ordered_json& value) {
  if (value.is_null()) return py::none();
  if (value.is_boolean()) return py::bool_(value.get<bool>());
  if (value.is_number_unsigned()) return py::int_(value.get<std::uint64_t>());
  if (value.is_number_integer()) return py::int_(value.get<std::int64_t>());
  if (value.is_number_float()) return py::float_(value.get<double>());
  if (value.is_string()) return py::str(value.get<std::string>());
  if (value.is_array()) {
    py::list out;
    for (const auto& element : value) out.append(to_py(element));
    return out;
  }
  py::dict out;
  for (const auto& item : value.items()) out[py::str(item.key())] = to_py(item.value());
  return out;
}

dsf::Date reference_date_from(const std::string& text) {
  auto date = dsf::Date::parse(text);
  if (!date) throw py::value_error("not a calendar date: " + text);
  return *date;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Healthcare AI datasheet toolkit";

  py::class_<dsf::Datasheet>(m, "Datasheet")
      .def(py::init<>())
      .def(py::self == py::self)
      .def("__repr__", [](const dsf::Datasheet& ds) {
        return "<Datasheet '" + ds.metadata.title.value_or("untitled") + "'>";
      });

  m.def("format_version", [] { return std::string(dsf::format_version()); });

  m.def("new_template", &dsf::new_template, "Empty sheet ready for authoring.");

  m.def(
      "parse",
      [](const std::string& text, bool strict) {
        dsf::ParseResult result =
            dsf::parse(text, strict ? dsf::ParseMode::Strict : dsf::ParseMode::Lenient);
        py::list diagnostics;
        for (const dsf::Diagnostic& diagnostic : result.diagnostics) {
          diagnostics.append(to_py(dsf::to_json(diagnostic)));
        }
        py::object sheet = result.datasheet ? py::cast(*result.datasheet) : py::none();
        return py::make_tuple(sheet, diagnostics);
      },
      py::arg("text"), py::arg("strict") = false,
      "Returns (datasheet, diagnostics); the datasheet is None exactly when an "
      "error-severity diagnostic is present.");

  m.def("serialize", &dsf::serialize, py::arg("datasheet"),
        "Canonical interchange document, byte-stable for equal sheets.");

  m.def(
      "validate",
      [](const dsf::Datasheet& ds) { return to_py(dsf::to_json(dsf::validate(ds))); },
      py::arg("datasheet"));

  m.def(
      "assess",
      [](const dsf::Datasheet& ds, const std::string& reference_date) {
        return to_py(dsf::to_json(dsf::assess(ds, reference_date_from(reference_date))));
      },
      py::arg("datasheet"), py::arg("reference_date"),
      "Risk rule findings anchored at reference_date (YYYY-MM-DD).");

  m.def(
      "check_compliance",
      [](const dsf::Datasheet& ds) { return to_py(dsf::to_json(dsf::check_compliance(ds))); },
      py::arg("datasheet"));

  m.def(
      "coverage",
      [] { return to_py(dsf::to_json(dsf::coverage_matrix(dsf::builtin_profiles()))); },
      "Documentation coverage grid for the built-in profiles.");

  m.def("export_ntriples", &dsf::export_ntriples, py::arg("datasheet"), py::arg("base_iri"),
        "Sorted N-Triples lines describing the populated fields.");

  m.def("field_paths", [] {
    std::vector<std::string> paths;
    for (const dsf::FieldSpec& spec : dsf::field_registry()) paths.push_back(spec.path);
    return paths;
  });
}
