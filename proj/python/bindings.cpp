#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "convlab/algebra.hpp"
#include "convlab/convergence.hpp"
#include "convlab/errors.hpp"
#include "convlab/report.hpp"
#include "convlab/seqclass.hpp"
#include "convlab/submeasure.hpp"
#include "convlab/topology.hpp"
#include "convlab/verify.hpp"

namespace py = pybind11;
using namespace convlab;

namespace {

std::vector<std::uint32_t> element_masks(const ElementSet& s) {
  std::vector<std::uint32_t> out;
  for (const auto& e : s.elements()) out.push_back(e.mask());
  return out;
}

ElementSet from_masks(const Carrier& c, const std::vector<std::uint32_t>& masks) {
  ElementSet s(c);
  for (auto m : masks) s.insert(c.element(m));
  return s;
}

Convergence law(const Carrier& c, const std::string& name) {
  if (name == "ls") return ls_convergence(c);
  if (name == "li") return li_convergence(c);
  if (name == "s") return s_convergence(c);
  throw ValidationError("unknown law '" + name + "' (expected ls, li or s)");
}

}  // namespace

PYBIND11_MODULE(_convlab, m) {
  m.doc() = "Sequential convergences and topologies on finite Boolean algebras";

  auto base = py::register_exception<Error>(m, "ConvlabError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ScaleError>(m, "ScaleError", base.ptr());
  py::register_exception<CarrierMismatch>(m, "CarrierMismatch", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

  m.attr("MAX_ATOMS") = kMaxAtoms;
  m.attr("MAX_SWEEP_ATOMS") = kMaxSweepAtoms;

  py::class_<Carrier>(m, "Carrier")
      .def(py::init<int>(), py::arg("atoms"))
      .def_property_readonly("atoms", &Carrier::atoms)
      .def_property_readonly("size", &Carrier::size)
      .def_property_readonly("class_count", &Carrier::class_count)
      .def("__eq__", [](const Carrier& a, const Carrier& b) { return a == b; })
      .def("__repr__", [](const Carrier& c) { return "Carrier(" + std::to_string(c.atoms()) + ")"; });

  py::class_<Element>(m, "Element")
      .def(py::init<const Carrier&, std::uint32_t>(), py::arg("carrier"), py::arg("mask"))
      .def_property_readonly("mask", &Element::mask)
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__hash__", [](const Element& e) { return (e.atoms() << 8) | e.mask(); })
      .def("__str__", &Element::to_string)
      .def("__repr__", [](const Element& e) { return "Element(" + e.to_string() + ")"; });
  m.def("meet", &meet);
  m.def("join", &join);
  m.def("complement", &complement);

  py::class_<EPSeq>(m, "EPSeq")
      .def_property_readonly("preperiod", &EPSeq::preperiod)
      .def_property_readonly("period", &EPSeq::period)
      .def("at", &EPSeq::at)
      .def("complemented", &EPSeq::complemented)
      .def("__eq__", [](const EPSeq& a, const EPSeq& b) { return a == b; })
      .def("__str__", &EPSeq::to_string)
      .def("__repr__", [](const EPSeq& x) { return "EPSeq(" + x.to_string() + ")"; });
  m.def("parse_sequence", &parse_sequence, py::arg("carrier"), py::arg("literal"));
  m.def("liminf", &liminf);
  m.def("limsup", &limsup);

  py::class_<InfClass>(m, "InfClass")
      .def_static("from_masks", [](const Carrier& c, const std::vector<std::uint32_t>& masks) {
        return InfClass(from_masks(c, masks));
      })
      .def_property_readonly("mask", &InfClass::mask)
      .def_property_readonly("values", [](const InfClass& s) { return element_masks(s.values()); })
      .def("__len__", &InfClass::size)
      .def("__eq__", [](const InfClass& a, const InfClass& b) { return a == b; })
      .def("__str__", &InfClass::to_string);
  m.def("inf_class", &inf_class);

  py::class_<Convergence>(m, "Convergence")
      .def_property_readonly("name", &Convergence::name)
      .def("__call__", [](const Convergence& l, const InfClass& s) { return element_masks(l(s)); });
  m.def("law", &law, py::arg("carrier"), py::arg("name"));
  m.def("star", [](const Convergence& l) { return star(l); });
  m.def("meet_conv", &meet_conv);
  m.def("leq_conv", &leq_conv);
  m.def("equal_conv", &equal_conv);
  m.def("check_L1", &check_L1);
  m.def("check_L2", &check_L2);
  m.def("check_L3", &check_L3);
  m.def("converge", [](const Carrier& c, const std::string& literal, const std::string& name) {
    return element_masks(law(c, name)(inf_class(parse_sequence(c, literal))));
  }, py::arg("carrier"), py::arg("literal"), py::arg("law") = "s");

  py::class_<Topology>(m, "Topology")
      .def_property_readonly("open_count", &Topology::open_count)
      .def("opens", [](const Topology& t) {
        std::vector<std::uint32_t> out;
        for (const auto& s : t.opens()) out.push_back(s.bits());
        return out;
      })
      .def("is_open", [](const Topology& t, const std::vector<std::uint32_t>& masks) {
        return t.is_open(from_masks(t.carrier(), masks));
      })
      .def("coarser_than", &Topology::coarser_than)
      .def("limits", [](const Topology& t, const EPSeq& x) { return element_masks(lim_topo(t, x)); })
      .def("__eq__", [](const Topology& a, const Topology& b) { return a == b; });
  m.def("synthesize", [](const Convergence& l) { return synthesize_O_lambda(l); });
  m.def("join_topologies", &join_topologies);
  m.def("discrete_topology", &discrete_topology);
  m.def("antidiscrete_topology", &antidiscrete_topology);
  m.def("lim_convergence", &lim_of_topology_as_convergence);

  py::class_<DiagramReport>(m, "DiagramReport")
      .def_property_readonly("ok", &DiagramReport::ok)
      .def_readonly("violations", &DiagramReport::violations)
      .def_readonly("convergence_classes", &DiagramReport::convergence_classes)
      .def_readonly("topology_classes", &DiagramReport::topology_classes)
      .def_property_readonly("collapse", [](const DiagramReport& r) {
        return std::make_pair(r.collapse_convergences(), r.collapse_topologies());
      })
      .def("emit", [](const DiagramReport& r, const std::string& format) { return emit(r, format); },
           py::arg("format") = "table");
  m.def("build_diagram", &build_diagram);

  m.def("submeasure_axioms", [](const Carrier& c, const std::string& kind) {
    const Submeasure mu = kind == "counting" ? Submeasure::counting(c)
                          : kind == "truncated" ? Submeasure::truncated_cardinality(c)
                                                : load_submeasure(c, kind);
    const auto ax = validate_submeasure(mu);
    py::dict out;
    out["zero_at_bottom"] = ax.zero_at_bottom;
    out["monotone"] = ax.monotone;
    out["subadditive"] = ax.subadditive;
    out["strictly_positive"] = ax.strictly_positive;
    out["continuous"] = ax.continuous;
    out["triangle"] = check_triangle_inequality(mu);
    return out;
  }, py::arg("carrier"), py::arg("kind") = "counting");

  m.def("verify", [](int atoms, std::uint64_t seed, int samples) {
    VerifyConfig config;
    config.atoms = atoms;
    config.seed = seed;
    config.samples = samples;
    py::list out;
    for (const auto& r : run_verification(config)) {
      py::dict d;
      d["index"] = r.index;
      d["title"] = r.title;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("atoms") = 3, py::arg("seed") = 1, py::arg("samples") = 1000);
}
