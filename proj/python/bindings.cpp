#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fillscope/error.hpp"
#include "fillscope/io.hpp"
#include "fillscope/smith.hpp"

namespace py = pybind11;
namespace fs = fillscope;

namespace {

// Arbitrary-precision integers cross the boundary as Python ints.
py::object to_py(const fs::Integer& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

fs::Integer from_py(const py::handle& h) {
  return fs::Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>());
}

py::object rational_to_py(const fs::Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(v.get_num()), to_py(v.get_den()));
}

fs::Rational rational_from_py(const py::handle& h) {
  const std::string text = py::str(h).cast<std::string>();
  return fs::parse_rational(text);
}

py::dict chain_to_py(const fs::ChainComplex& cc, const fs::Chain& c) {
  py::dict d;
  for (const auto& [cell, coef] : cc.named_terms(c)) d[py::str(cell)] = to_py(coef);
  return d;
}

fs::Chain chain_from_py(const fs::ChainComplex& cc, std::size_t dim, const py::dict& terms) {
  fs::Chain c(dim);
  for (const auto& [k, v] : terms) c.add_term(cc.cell_index(dim, k.cast<std::string>()), from_py(v));
  return c;
}

py::dict table_to_py(const fs::ProfileTable& t) {
  py::list values, statuses;
  for (const auto& e : t.entries) {
    values.append(e.value.infinite ? py::object(py::float_(INFINITY)) : to_py(e.value.value));
    statuses.append(fs::to_string(e.status));
  }
  py::dict d;
  d["values"] = values;
  d["statuses"] = statuses;
  d["caveats"] = t.caveats;
  d["budgets"] = t.budgets;
  d["csv"] = fs::emit_profile_csv(t);
  return d;
}

fs::ProfileTable table_from_py(const py::sequence& values) {
  fs::ProfileTable t;
  for (const auto& v : values) t.entries.push_back({{false, from_py(v)}, fs::EntryStatus::exact});
  return t;
}

py::object witness_to_py(const std::optional<fs::QuasiFitWitness>& w) {
  if (!w) return py::none();
  py::dict d;
  d["A"] = rational_to_py(w->A);
  d["B"] = rational_to_py(w->B);
  d["C"] = rational_to_py(w->C);
  d["D"] = rational_to_py(w->D);
  return d;
}

py::object document_to_py(fs::Document doc) {
  return std::visit([](auto&& v) { return py::cast(std::move(v)); }, std::move(doc));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact chain filling volumes, isoperimetric profiles and Dehn functions";

  static py::exception<fs::Error> error(m, "FillscopeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const fs::Error& e) {
      py::set_error(error, (std::string(fs::to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<fs::ChainComplex>(m, "ChainComplex")
      .def_property_readonly("top_dim", &fs::ChainComplex::top_dim)
      .def("cells", &fs::ChainComplex::cells, py::arg("dim"))
      .def("euler_characteristic",
           [](const fs::ChainComplex& cc) { return to_py(cc.euler_characteristic()); })
      .def(
          "homology",
          [](const fs::ChainComplex& cc, std::size_t d) {
            const fs::HomologySummary h = fs::homology_summary(cc, d);
            py::list torsion;
            for (const auto& t : h.torsion) torsion.append(to_py(t));
            return py::make_tuple(h.betti, torsion);
          },
          py::arg("dim"))
      .def(
          "boundary",
          [](const fs::ChainComplex& cc, std::size_t dim, const py::dict& chain) {
            return chain_to_py(cc, fs::boundary(cc, chain_from_py(cc, dim, chain)));
          },
          py::arg("dim"), py::arg("chain"))
      .def("to_json", &fs::emit_complex)
      .def("__eq__", [](const fs::ChainComplex& a, const fs::ChainComplex& b) { return a == b; });

  py::class_<fs::SimplicialComplex>(m, "SimplicialComplex")
      .def_property_readonly("vertices", &fs::SimplicialComplex::vertices)
      .def_property_readonly("dim", &fs::SimplicialComplex::dim)
      .def("counts", &fs::SimplicialComplex::counts)
      .def(
          "simplices",
          [](const fs::SimplicialComplex& sc, std::size_t d) {
            std::vector<std::vector<std::string>> out;
            for (const auto& s : sc.simplices(d)) {
              std::vector<std::string> names;
              for (std::size_t v : s) names.push_back(sc.vertices()[v]);
              out.push_back(std::move(names));
            }
            return out;
          },
          py::arg("dim"), "The d-simplices as lists of vertex names.")
      .def("euler_characteristic", &fs::SimplicialComplex::euler_characteristic)
      .def("component_count", &fs::SimplicialComplex::component_count)
      .def("to_chain_complex", &fs::to_chain_complex)
      .def("subdivide", &fs::barycentric_subdivide)
      .def("presentation", [](const fs::SimplicialComplex& sc) { return fs::edge_path_presentation(sc); })
      .def(
          "cover",
          [](const fs::SimplicialComplex& sc, std::size_t sheets, const py::dict& perms) {
            fs::PermutationAssignment pa(sheets);
            for (const auto& [edge, perm] : perms) {
              const auto ends = edge.cast<std::pair<std::string, std::string>>();
              auto u = sc.find_vertex(ends.first), v = sc.find_vertex(ends.second);
              if (!u || !v) throw fs::Error(fs::ErrorKind::unknown_cell, "unknown vertex in edge");
              pa.assign(*u, *v, perm.cast<std::vector<std::size_t>>());
            }
            fs::check_assignment(sc, pa);
            return fs::build_cover(sc, pa);
          },
          py::arg("sheets"), py::arg("perms"),
          "Cover given by {(u, v): permutation} over vertex names.")
      .def("to_json", &fs::emit_simplicial)
      .def("__eq__",
           [](const fs::SimplicialComplex& a, const fs::SimplicialComplex& b) { return a == b; });

  py::class_<fs::Presentation>(m, "Presentation")
      .def_property_readonly("generators", &fs::Presentation::generators)
      .def_property_readonly("relators",
                             [](const fs::Presentation& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.relators()) out.push_back(p.format_word(r));
                               return out;
                             })
      .def("to_json", &fs::emit_presentation);

  m.def("builtin_names", &fs::builtin_names);
  m.def("builtin_text", [](const std::string& name) { return fs::builtin_text(name); });
  m.def(
      "load", [](const std::string& name) { return document_to_py(fs::load_builtin(name)); },
      py::arg("name"), "Load a built-in example.");
  m.def(
      "parse", [](const std::string& text) { return document_to_py(fs::parse_document(text)); },
      py::arg("text"), "Parse a complex, simplicial complex or presentation document.");

  m.def(
      "fill_volume",
      [](const fs::ChainComplex& cc, std::size_t q, const py::dict& chain, std::size_t node_limit) {
        if (q == 0) throw fs::Error(fs::ErrorKind::dimension_out_of_range, "fill dimension must be >= 1");
        const fs::FillResult r =
            fs::fill_volume(cc, q, chain_from_py(cc, q - 1, chain), fs::FillBudget{node_limit});
        py::dict d;
        d["status"] = fs::to_string(r.status);
        d["value"] = r.status == fs::FillStatus::infinite ? py::object(py::float_(INFINITY))
                                                          : to_py(r.value);
        d["witness"] = r.witness ? py::object(chain_to_py(cc, *r.witness)) : py::none();
        d["nodes"] = r.nodes;
        return d;
      },
      py::arg("complex"), py::arg("dim"), py::arg("chain"), py::arg("node_limit") = 20000);

  m.def(
      "chain_profile",
      [](const fs::ChainComplex& cc, std::size_t q, std::size_t n_max, std::size_t node_limit,
         std::size_t max_candidates) {
        fs::ProfileBudget budget;
        budget.fill.node_limit = node_limit;
        budget.max_candidates = max_candidates;
        fs::ProfileTable t;
        {
          py::gil_scoped_release release;
          t = fs::chain_profile(cc, q, n_max, budget);
        }
        return table_to_py(t);
      },
      py::arg("complex"), py::arg("dim"), py::arg("n_max"), py::arg("node_limit") = 20000,
      py::arg("max_candidates") = 5'000'000);

  m.def(
      "dehn_function",
      [](const fs::Presentation& p, std::size_t n_max, std::size_t max_word_len,
         std::size_t max_cost) {
        fs::ProfileTable t;
        {
          py::gil_scoped_release release;
          t = fs::dehn_function(p, n_max, {max_word_len, max_cost});
        }
        return table_to_py(t);
      },
      py::arg("presentation"), py::arg("n_max"), py::arg("max_word_len") = 16,
      py::arg("max_cost") = 16);

  m.def(
      "filling_volume_word",
      [](const fs::Presentation& p, const std::string& word, std::size_t max_word_len,
         std::size_t max_cost) {
        const fs::Word w = p.parse_word(word);
        const fs::FVWordResult r = fs::filling_volume_word(p, w, {max_word_len, max_cost});
        py::dict d;
        d["status"] = fs::to_string(r.status);
        d["value"] = r.value;
        d["unconditional"] = r.unconditional;
        d["certificate_length"] = r.certificate.size();
        d["certificate_replays"] = fs::replay_certificate(p, w, r.certificate);
        d["caveats"] = r.caveats;
        return d;
      },
      py::arg("presentation"), py::arg("word"), py::arg("max_word_len") = 16,
      py::arg("max_cost") = 16);

  m.def(
      "quasi_equivalent_fit",
      [](const py::sequence& f, const py::sequence& g, const std::string& grid) {
        const auto out = fs::quasi_equivalent_fit(table_from_py(f), table_from_py(g),
                                                  fs::FitGrid::parse(grid));
        return py::make_tuple(witness_to_py(out.forward.witness),
                              witness_to_py(out.backward.witness));
      },
      py::arg("f"), py::arg("g"), py::arg("grid") = "A=1:8;B=1/2,1,2;C=0:8;D=0:8");

  m.def(
      "verify_quasi_bound",
      [](const py::sequence& f, const py::sequence& g, const py::dict& w) {
        fs::QuasiFitWitness witness{rational_from_py(w["A"]), rational_from_py(w["B"]),
                                    rational_from_py(w["C"]), rational_from_py(w["D"]),
                                    "f <= g"};
        return fs::verify_quasi_bound(table_from_py(f), table_from_py(g), witness);
      },
      py::arg("f"), py::arg("g"), py::arg("witness"));
}
