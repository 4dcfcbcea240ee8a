// SPDX-License-Identifier: MIT
//
// Python bindings for the main operations: plat parsing and assembly, raw-DGA
// JSON, m-copies, augmentation enumeration, cohomology, compositions,
// isomorphism decisions, and the verification entry points.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "legaug/augcat.hpp"
#include "legaug/bordered.hpp"
#include "legaug/json_io.hpp"
#include "legaug/mcopy.hpp"
#include "legaug/slice_mc.hpp"

namespace py = pybind11;
using namespace legaug;

namespace {

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

Augmentation aug_from_dict(const Ring& ring,
                           const std::map<std::string, long long>& values) {
  Augmentation eps{ring, {}};
  for (const auto& [name, v] : values)
    eps.values.insert_or_assign(name, ring.reduce(Int(v)));
  return eps;
}

std::map<std::string, long long> aug_to_dict(const Augmentation& eps) {
  std::map<std::string, long long> out;
  for (const auto& [name, v] : eps.values) out[name] = to_ll(v);
  return out;
}

HomElement hom_from_dict(const Ring& ring,
                         const std::map<std::string, long long>& coeffs) {
  HomElement e(ring);
  for (const auto& [label, c] : coeffs) e.add(label, ring.reduce(Int(c)));
  return e;
}

std::map<std::string, long long> hom_to_dict(const HomElement& e) {
  std::map<std::string, long long> out;
  for (const auto& [label, c] : e.coeffs) out[label] = to_ll(c);
  return out;
}

HomDirection parse_direction(const std::string& s) {
  if (s == "plus") return HomDirection::plus;
  if (s == "minus") return HomDirection::minus;
  throw Error("direction must be \"plus\" or \"minus\"");
}

const char* kind_str(GenKind k) {
  return k == GenKind::reeb ? "reeb" : "basepoint";
}

}  // namespace

PYBIND11_MODULE(_legaug, m) {
  m.doc() =
      "Legendrian-link augmentation categories: plat fronts, their DGAs, and "
      "the A-infinity categories of augmentations over Z or F_p.";

  py::register_exception<Error>(m, "LegaugError");

  py::class_<PlatDiagram>(m, "PlatDiagram",
                          "A front in plat position: an even strand count and "
                          "a left-to-right crossing sequence.")
      .def_readonly("n", &PlatDiagram::n)
      .def_readonly("crossings", &PlatDiagram::crossings)
      .def("__str__", &plat_str);

  m.def("parse_plat", &parse_plat, py::arg("text"),
        "Parse the plat text format (\"strands n\" then \"cross k\" lines).");
  m.def("plat_str", &plat_str, py::arg("plat"),
        "Serialize a plat back to its text format.");

  py::class_<Dga>(m, "Dga",
                  "A differential graded algebra on named generators over Z "
                  "or F_p.")
      .def_property_readonly(
          "ring", [](const Dga& d) { return d.ring().str(); })
      .def("generators",
           [](const Dga& d) {
             py::list out;
             for (const GenInfo& g : d.generators())
               out.append(py::dict(
                   py::arg("name") = g.name, py::arg("degree") = g.degree,
                   py::arg("kind") = kind_str(g.kind), py::arg("r") = g.r,
                   py::arg("c") = g.c));
             return out;
           })
      .def("differential",
           [](const Dga& d, const std::string& name) {
             return d.differential(name).str();
           },
           py::arg("name"))
      .def("to_json", [](const Dga& d) { return dga_to_json(d); })
      .def_static("from_json",
                  [](const std::string& text) { return dga_from_json(text); },
                  py::arg("text"));

  m.def(
      "assemble",
      [](const PlatDiagram& d, const std::string& ring,
         const std::vector<int>& flip_components) {
        return assemble(d, Ring::parse(ring), flip_components).dga;
      },
      py::arg("plat"), py::arg("ring") = "Z",
      py::arg("flip_components") = std::vector<int>{},
      "Assemble the DGA of a plat front over \"Z\" or \"Fp:<p>\".");

  m.def(
      "classical_invariants",
      [](const PlatDiagram& d) {
        TraceResult t = trace_knot(d);
        ClassicalInvariants inv = classical_invariants(d, t);
        return py::dict(py::arg("components") = t.components,
                        py::arg("tb") = inv.tb_total,
                        py::arg("tb_component") = inv.tb_component,
                        py::arg("rotation") = inv.rotation);
      },
      py::arg("plat"),
      "Component count, Thurston-Bennequin and rotation numbers.");

  m.def(
      "build_mcopy",
      [](const Dga& base, int m_copies) {
        return build_mcopy(base, m_copies).dga;
      },
      py::arg("dga"), py::arg("m"),
      "The DGA of the m-copy (parallel pushoffs), with copy-indexed names.");

  m.def(
      "check_dga",
      [](const Dga& d) {
        DgaReport rep = check_dga(d);
        return py::make_tuple(rep.ok(), rep.str());
      },
      py::arg("dga"),
      "Structural verification (d^2 = 0, grading, composability); returns "
      "(ok, report).");

  py::class_<AugCategory>(
      m, "AugCategory",
      "The two A-infinity categories of augmentations of one DGA. "
      "Augmentations are dicts {generator: value}; hom elements are dicts "
      "{basis label: coefficient} with labels like \"a1+\", \"x1+\", "
      "\"y1+\", \"a1-\".")
      .def(py::init([](const Dga& base, const std::string& field) {
             return std::make_unique<AugCategory>(base, Ring::parse(field));
           }),
           py::arg("dga"), py::arg("field"))
      .def_property_readonly(
          "field", [](const AugCategory& c) { return c.field().str(); })
      .def("augmentations",
           [](const AugCategory& c) {
             std::vector<std::map<std::string, long long>> out;
             for (const Augmentation& e : c.enumerate_augmentations())
               out.push_back(aug_to_dict(e));
             return out;
           },
           "All augmentations, in the deterministic lexicographic order.")
      .def("basis",
           [](const AugCategory& c, const std::string& direction) {
             py::list out;
             for (const BasisElement& b :
                  c.basis(parse_direction(direction)).elements)
               out.append(py::dict(py::arg("label") = b.label,
                                   py::arg("degree") = b.degree));
             return out;
           },
           py::arg("direction"))
      .def("unit",
           [](const AugCategory& c) { return hom_to_dict(c.unit()); })
      .def(
          "cohomology",
          [](const AugCategory& c, const std::string& direction,
             const std::map<std::string, long long>& e1,
             const std::map<std::string, long long>& e2) {
            std::map<int, std::size_t> out;
            for (const auto& [k, dim] :
                 c.cohomology(parse_direction(direction),
                              aug_from_dict(c.field(), e1),
                              aug_from_dict(c.field(), e2)))
              if (dim > 0) out[k] = dim;
            return out;
          },
          py::arg("direction"), py::arg("eps1"), py::arg("eps2"),
          "Nonzero ranks {degree: dim} of hom (plus) or Hom_- (minus).")
      .def(
          "mk",
          [](const AugCategory& c, const std::string& direction,
             const std::vector<std::map<std::string, long long>>& chain,
             const std::vector<std::map<std::string, long long>>& args) {
            std::vector<Augmentation> eps;
            for (const auto& e : chain)
              eps.push_back(aug_from_dict(c.field(), e));
            std::vector<HomElement> hom_args;
            for (const auto& a : args)
              hom_args.push_back(hom_from_dict(c.field(), a));
            return hom_to_dict(
                c.mk(parse_direction(direction), eps, hom_args));
          },
          py::arg("direction"), py::arg("chain"), py::arg("args"),
          "The composition m_k on a chain of k+1 augmentations, arguments in "
          "written order.")
      .def(
          "homotopic",
          [](const AugCategory& c, const std::map<std::string, long long>& e1,
             const std::map<std::string, long long>& e2) {
            return c
                .dga_homotopic(aug_from_dict(c.field(), e1),
                               aug_from_dict(c.field(), e2))
                .homotopic;
          },
          py::arg("eps1"), py::arg("eps2"))
      .def(
          "isomorphic",
          [](const AugCategory& c, const std::map<std::string, long long>& e1,
             const std::map<std::string, long long>& e2) {
            return c.is_isomorphic_augplus(aug_from_dict(c.field(), e1),
                                           aug_from_dict(c.field(), e2));
          },
          py::arg("eps1"), py::arg("eps2"),
          "Isomorphism in the plus category (equals the homotopy relation).");

  m.def(
      "verify_slice_equivalences",
      [](int n, const std::vector<int>& mu, int trials,
         const std::string& field) {
        CheckReport rep =
            verify_slice_equivalences(n, mu, trials, Ring::parse(field));
        return py::make_tuple(rep.ok(), rep.str());
      },
      py::arg("n"), py::arg("mu"), py::arg("trials") = 25,
      py::arg("field") = "Fp:2",
      "Randomized slice/Morse-complex equivalence checks; returns (ok, "
      "report).");

  m.def("dga_to_json", &dga_to_json, py::arg("dga"));
  m.def("dga_from_json", &dga_from_json, py::arg("text"));
}
