#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "infotile/cli.hpp"
#include "infotile/constants.hpp"
#include "infotile/shannon.hpp"
#include "infotile/verify.hpp"
#include "infotile/witness.hpp"

namespace py = pybind11;
using namespace infotile;

namespace {

// JSON crosses the boundary as text; the Python side parses it.
std::string doc(const json& j) { return json_doc_string(j); }

FactoredJoint joint_from(const std::string& text) {
  std::istringstream ss(text);
  return read_joint(ss);
}

}  // namespace

PYBIND11_MODULE(_infotile, m) {
  m.doc() = "Wang tiles to information inequalities";

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release nogil;
      code = run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command line front end; returns (exit code, stdout, stderr).");

  m.def("compile", [](const std::string& tileset) {
    return doc(system_json(compile_ttori(tileset_from_json(json::parse(tileset)))));
  });

  m.def("find_tiling", [](const std::string& tileset, int max_period) -> std::optional<std::string> {
    auto t = find_periodic_tiling(tileset_from_json(json::parse(tileset)), max_period);
    if (!t) return std::nullopt;
    return doc(tiling_json(*t));
  }, py::arg("tileset"), py::arg("max_period"));

  m.def("pick_alpha", [](long k) { return to_string(pick_alpha(k)); });
  m.def("pick_log_bounds", [](long k) {
    auto b = pick_log_bounds(k);
    return py::make_tuple(b.p, b.q);
  });
  m.def("elemental_count", &elemental_count);

  m.def("refute", [](const std::string& sas, std::optional<std::vector<std::string>> vars) {
    std::optional<std::vector<VarId>> r;
    if (vars) r = std::vector<VarId>(vars->begin(), vars->end());
    return doc(outcome_json(refute(sparse_from_json(json::parse(sas)), r)));
  }, py::arg("sas"), py::arg("vars") = py::none());

  m.def("entropy", [](const std::string& joint, const std::vector<std::string>& names) {
    return subset_entropy(joint_from(joint), VarSet::of_names(names));
  }, py::arg("joint"), py::arg("names"));

  m.def("verify", [](const std::string& joint, const std::string& cs, double tol) {
    return doc(report_json(verify(joint_from(joint), system_from_json(json::parse(cs)), tol)));
  }, py::arg("joint"), py::arg("system"), py::arg("tol") = kEndToEndTolerance);

  py::register_exception<WitnessRefusal>(m, "WitnessRefusal");
}
