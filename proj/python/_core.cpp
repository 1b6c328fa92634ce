#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pickylab/blocks.hpp"
#include "pickylab/chartab.hpp"
#include "pickylab/cli.hpp"
#include "pickylab/conjectures.hpp"
#include "pickylab/errors.hpp"
#include "pickylab/groups.hpp"
#include "pickylab/subnorm.hpp"
#include "pickylab/symfast.hpp"

namespace py = pybind11;
using namespace pickylab;

// Structured results cross the boundary as JSON text; the Python package
// decodes them.
PYBIND11_MODULE(_core, m)
{
  m.doc() = "pickylab engine";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<EngineError>(m, "EngineError", PyExc_RuntimeError);

  py::class_<PermGroup>(m, "Group")
    .def_property_readonly("degree", &PermGroup::degree)
    .def_property_readonly("order", [](PermGroup const &g) { return py::int_(py::str(g.order().get_str())); })
    .def_property_readonly("generators",
                           [](PermGroup const &g) {
                             std::vector<std::string> out;
                             for (auto const &x : g.generators())
                               out.push_back(x.str());
                             return out;
                           })
    .def("contains", [](PermGroup const &g, std::string const &x) { return g.contains(Perm::parse(x, g.degree())); })
    .def("__repr__", [](PermGroup const &g) {
      return "<Group of order " + g.order().get_str() + " on " + std::to_string(g.degree()) + " points>";
    });

  m.def("group", [](std::string const &source) { return resolve_group(source, std::filesystem::current_path()); },
        py::arg("source"), "Named group (S:4, D:8, wr:S:3~C:2, ...) or generator file path");
  m.def("group_from_generators", [](std::string const &text) { return parse_generator_text(text); },
        py::arg("text"));

  m.def("character_table", [](PermGroup const &g) {
    auto t = character_table(g);
    verify_orthogonality(t);
    return table_to_json(t).dump();
  });
  m.def("blocks", [](PermGroup const &g, std::uint64_t p) {
    auto t = character_table(g);
    return blocks_to_json(t, block_partition(t, p)).dump();
  });
  m.def("sylow", [](PermGroup const &g, std::uint64_t p) {
    auto sys = sylow_system(g, p);
    return nlohmann::json{{"sylow_order", sys.sylow.order().get_str()},
                          {"normalizer_order", sys.normalizer.order().get_str()},
                          {"count", sys.count()},
                          {"ti", is_ti_sylow(sys, g)}}
      .dump();
  });
  m.def("picky", [](PermGroup const &g, std::uint64_t p, std::string const &x) {
    return picky_to_json(picky_report(g, p, Perm::parse(x, g.degree()))).dump();
  });
  m.def("subnormalizer", [](PermGroup const &g, std::string const &x) {
    return subnormalizer_subgroup(g, Perm::parse(x, g.degree()));
  });
  m.def("is_subnormal", [](PermGroup const &h, PermGroup const &k) { return is_subnormal(h, k); });

  m.def(
    "check",
    [](PermGroup const &g, std::string const &name, std::uint64_t p, std::string const &variant,
       std::string const &label) {
      GroupAnalysis a(label, g);
      return report_to_json(run_check(a, name, p, parse_variant(variant))).dump();
    },
    py::arg("group"), py::arg("name"), py::arg("p"), py::arg("variant") = "plain", py::arg("label") = "G");
  m.def(
    "check_all",
    [](PermGroup const &g, std::uint64_t p, std::string const &label) {
      GroupAnalysis a(label, g);
      nlohmann::json out = nlohmann::json::array();
      for (auto const &r : run_all(a, p))
        out.push_back(report_to_json(r));
      return out.dump();
    },
    py::arg("group"), py::arg("p"), py::arg("label") = "G");
  m.def("check_names", &check_names);

  m.def("mn_value", [](std::vector<unsigned> const &lambda, std::vector<std::size_t> const &mu) {
    return mn_value(lambda, mu);
  });
  m.def("partition_degree", [](std::vector<unsigned> const &lambda) {
    return py::int_(py::str(degree(lambda).get_str()));
  });
  m.def("table1", [] { return table1_to_json(table1_report(8)).dump(); });

  m.def(
    "run_cli",
    [](std::vector<std::string> const &args) {
      std::ostringstream out, err;
      int code;
      {
        py::gil_scoped_release release;
        code = run(args, out, err);
      }
      return py::make_tuple(code, out.str(), err.str());
    },
    py::arg("args"));
}
