#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ciflie/bracket.hpp"
#include "ciflie/error.hpp"
#include "ciflie/report.hpp"
#include "ciflie/theorems.hpp"
#include "ciflie/workspace.hpp"

namespace py = pybind11;
using namespace ciflie;

namespace {

py::tuple vec_tuple(const Vector& v) {
  py::tuple t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
  return t;
}

Vector to_vector(const std::vector<long long>& coords, const Superalgebra& alg) {
  std::vector<Elem> out;
  for (long long c : coords) out.push_back(alg.field().reduce(c));
  Vector v(std::move(out));
  alg.check_member(v);
  return v;
}

py::tuple degree_tuple(const CIFDegree& d) {
  return py::make_tuple(py::make_tuple(to_string(d.mem().r()), to_string(d.mem().w())),
                        py::make_tuple(to_string(d.non().r()), to_string(d.non().w())));
}

py::dict predicate_dict(const PredicateReport& r) {
  py::dict d;
  d["holds"] = r.holds;
  d["clause"] = r.clause;
  py::list w;
  for (const auto& v : r.witness) w.append(vec_tuple(v));
  d["witness"] = w;
  d["scalar"] = r.scalar ? py::cast(*r.scalar) : py::none();
  return d;
}

const NamedSpace& pick_space(const Workspace& ws, const std::string& name) {
  if (ws.spaces.empty()) throw Error("workspace declares no space");
  if (name.empty()) return ws.spaces.front();
  const NamedSpace* s = ws.find_space(name);
  if (!s) throw Error("no space named '" + name + "'");
  return *s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Complex intuitionistic fuzzy sets over finite Lie superalgebras";
  m.attr("__version__") = tool_version();

  const auto& error = py::register_exception<Error>(m, "CiflieError");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<CIFSet>(m, "CIFSet")
      .def("degree",
           [](const CIFSet& s, const std::vector<long long>& v) { return degree_tuple(s.at(to_vector(v, s.space()))); },
           py::arg("vector"), "((r, w), (r_hat, w_hat)) as reduced rational strings")
      .def("rows",
           [](const CIFSet& s) {
             py::list out;
             for (Code x = 0; x < s.size(); ++x) out.append(py::make_tuple(vec_tuple(s.space().decode(x)), degree_tuple(s.at_code(x))));
             return out;
           })
      .def_property_readonly("notes", &CIFSet::notes)
      .def("to_json", &cifset_json)
      .def("__len__", &CIFSet::size)
      .def("__eq__", [](const CIFSet& a, const CIFSet& b) { return a == b; })
      .def("__le__", [](const CIFSet& a, const CIFSet& b) { return subset_of(a, b); });

  py::class_<GradedMap>(m, "GradedMap")
      .def_property_readonly("anti", [](const GradedMap& g) { return g.kind() == MapKind::anti_homomorphism; })
      .def("__call__", [](const GradedMap& g, const std::vector<long long>& v) {
        return vec_tuple(apply_map(g, to_vector(v, g.source())));
      });

  py::class_<Workspace>(m, "Workspace")
      .def_property_readonly("field", [](const Workspace& ws) { return ws.field.modulus(); })
      .def_property_readonly("spaces",
                             [](const Workspace& ws) {
                               std::vector<std::string> out;
                               for (const auto& s : ws.spaces) out.push_back(s.name);
                               return out;
                             })
      .def_property_readonly("sets",
                             [](const Workspace& ws) {
                               std::vector<std::string> out;
                               for (const auto& s : ws.sets) out.push_back(s.name);
                               return out;
                             })
      .def_property_readonly("maps",
                             [](const Workspace& ws) {
                               std::vector<std::string> out;
                               for (const auto& s : ws.maps) out.push_back(s.name);
                               return out;
                             })
      .def("set",
           [](const Workspace& ws, const std::string& name) {
             const NamedSet* s = ws.find_set(name);
             if (!s) throw py::key_error(name);
             return s->set;
           })
      .def("map",
           [](const Workspace& ws, const std::string& name) {
             const NamedMap* s = ws.find_map(name);
             if (!s) throw py::key_error(name);
             return s->map;
           })
      .def("trivial", [](const Workspace& ws, const std::string& space) {
        return CIFSet::trivial(pick_space(ws, space).algebra);
      }, py::arg("space") = "")
      .def("serialize", &serialize)
      .def("__eq__", [](const Workspace& a, const Workspace& b) { return a == b; });

  m.def("load", &parse_spec, py::arg("text"), "Parse a spec document");

  m.def("cif_sum", &cif_sum);
  m.def("intersection", &intersection);
  m.def("scalar_action", [](long long c, const CIFSet& a) { return scalar_action(a.space().field().reduce(c), a); },
        py::arg("alpha"), py::arg("set"));
  m.def("bracket_product", &bracket_product);
  m.def("bracket_product_oracle", &bracket_product_oracle);
  m.def("bracket_graded_parts", &bracket_graded_parts);
  m.def("component_extension", [](const CIFSet& a, int parity) {
    return component_extension(a, parity ? Parity::odd : Parity::even);
  });
  m.def("image", &image, py::arg("map"), py::arg("set"));
  m.def("preimage", &preimage, py::arg("map"), py::arg("set"));

  m.def("subset_of", &subset_of);
  m.def("is_direct_sum", &is_direct_sum);
  m.def("is_cif_subspace", [](const CIFSet& a) { return predicate_dict(is_cif_subspace(a)); });
  m.def("is_z2_graded", [](const CIFSet& a) { return predicate_dict(is_z2_graded(a)); });
  m.def("is_cif_ideal", [](const CIFSet& a) { return predicate_dict(is_cif_ideal(a)); });
  m.def("is_homogeneous", [](const CIFSet& a) { return predicate_dict(is_homogeneous(a)); });
  m.def("pair_homogeneous", [](const CIFSet& a, const CIFSet& b) { return predicate_dict(pair_homogeneous(a, b)); });

  m.def("theorem_ids", &theorem_ids);
  m.def(
      "verify",
      [](const Workspace& ws, const std::string& theorem, const std::string& space, std::uint64_t seed,
         std::size_t trials, int chain_length) {
        const TheoremReport r = check_theorem(theorem, make_config(pick_space(ws, space).algebra, seed, chain_length), trials);
        py::dict d;
        d["theorem"] = r.theorem_id;
        d["trials"] = r.trials;
        d["specified"] = r.specified;
        d["passed"] = r.passed();
        py::list failures;
        for (const auto& f : r.failures) failures.append(py::make_tuple(f.seed, f.digest, f.witness));
        d["failures"] = failures;
        d["notes"] = r.notes;
        return d;
      },
      py::arg("workspace"), py::arg("theorem"), py::arg("space") = "", py::arg("seed") = 1, py::arg("trials") = 200,
      py::arg("chain_length") = 3);
}
