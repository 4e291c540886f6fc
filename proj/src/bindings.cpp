#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "mixforge/chain_complex.hpp"
#include "mixforge/geometry.hpp"
#include "mixforge/grammar.hpp"
#include "mixforge/splitter.hpp"
#include "mixforge/svg.hpp"
#include "mixforge/words.hpp"

namespace py = pybind11;
using namespace mixforge;

namespace {

Word w(const std::string& text, int n) { return parse_word(text, n); }

py::list path_points(const std::string& word, int n) {
  py::list out;
  for (const Point& p : to_path(w(word, n)).points) {
    py::list pt;
    for (int i = 0; i < n; ++i) pt.append(p[i]);
    out.append(pt);
  }
  return out;
}

py::list intersections(const std::string& word, int n, std::optional<int> q) {
  const LatticePath path = to_path(w(word, n));
  const auto records =
      q ? self_intersections(path, *q) : self_intersections(path);
  py::list out;
  for (const auto& rec : records)
    out.append(
        py::make_tuple(rec.t1, rec.t2, static_cast<int>(rec.case_label)));
  return out;
}

py::dict simplify(const std::string& w1, const std::string& w2, int n) {
  const SimplifyOutcome out = simplify_loop(w(w1, n), w(w2, n));
  py::dict d;
  d["embedded"] = out.embedded();
  d["reduced"] = py::make_tuple(format_word(out.reduced_w1),
                                format_word(out.reduced_w2));
  py::list deletions;
  for (const auto& del : out.deletions)
    deletions.append(py::make_tuple(
        del.t1, del.t2, static_cast<int>(del.case_label), del.removed));
  d["deletions"] = deletions;
  if (out.split) d["case5"] = py::make_tuple(out.split->t1, out.split->t2);
  return d;
}

std::int64_t winding(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& vectors,
    bool closed) {
  std::vector<Vec2> vs;
  for (const auto& [x, y] : vectors) vs.push_back({x, y});
  return winding_number(vs, closed);
}

py::dict degree_report(const std::string& word, const std::string& half,
                       int delta) {
  const WindingReport rep = link_cycle_degree(
      to_path(w(word, 2)),
      half == "second" ? PathHalf::Second : PathHalf::First, delta);
  py::dict d;
  d["cycle"] =
      rep.cycle_id == LinkCycleId::AlphaBeta ? "alpha_beta" : "gamma_delta";
  d["degree"] = rep.degree;
  d["case"] = static_cast<int>(rep.case_class);
  d["u_alpha"] = py::make_tuple(rep.u_alpha[0], rep.u_alpha[1]);
  d["u_beta"] = py::make_tuple(rep.u_beta[0], rep.u_beta[1]);
  d["u_gamma"] = py::make_tuple(rep.u_gamma[0], rep.u_gamma[1]);
  d["u_delta"] = py::make_tuple(rep.u_delta[0], rep.u_delta[1]);
  return d;
}

std::string derive_json(const std::string& w1, const std::string& w2) {
  return tree_to_json(derive(w(w1, 2), w(w2, 2)));
}

py::dict derive3_json(const std::string& w1, const std::string& w2,
                      const std::string& w3) {
  const auto result = derive3(w(w1, 3), w(w2, 3), w(w3, 3));
  py::dict d;
  if (const auto* tree = std::get_if<DerivationTree>(&result))
    d["tree"] = tree_to_json(*tree);
  else
    d["counterexample"] =
        counterexample_to_json(std::get<Counterexample3>(result));
  return d;
}

py::object split_json(const std::string& w1, const std::string& w2) {
  const auto wit = find_split(w(w1, 2), w(w2, 2));
  if (!wit) return py::none();
  return py::str(witness_to_json(*wit));
}

py::object alternating(const std::string& word) {
  const Word empty = parse_word("", 3);
  const auto wit = find_alternating_split3(w(word, 3), empty, empty);
  if (!wit) return py::none();
  py::dict d;
  d["cuts"] = py::make_tuple(wit->cuts[0], wit->cuts[1], wit->cuts[2],
                             wit->cuts[3], wit->cuts[4]);
  d["x"] = py::make_tuple(wit->x[0], wit->x[1], wit->x[2]);
  d["y"] = py::make_tuple(wit->y[0], wit->y[1], wit->y[2]);
  return d;
}

bool verify_tree_json(const std::string& json_text, int n) {
  const Grammar g = n == 2 ? grammar_o2() : grammar_o3();
  return static_cast<bool>(verify_tree(tree_from_json(json_text), g));
}

py::list derivable(int n, int bound) {
  const Grammar g = n == 2 ? grammar_o2() : grammar_o3();
  py::list out;
  for (const auto& tuple : enumerate_derivable(g, bound)) {
    py::tuple t(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) t[i] = tuple[i];
    out.append(t);
  }
  return out;
}

py::dict homology() {
  const HomologyReport h = homology_ranks(build_complex());
  py::dict d;
  d["betti"] = py::make_tuple(h.b0, h.b1, h.b2);
  d["h1_torsion"] = h.h1_torsion;
  d["euler_characteristic"] = h.euler_characteristic();
  return d;
}

py::dict link_info(int vertex) {
  const LinkGraph g = link_graph(build_complex(), vertex);
  py::dict d;
  d["base"] = g.base;
  d["vertices"] = g.vertices;
  py::list edges;
  for (const auto& e : g.edges)
    edges.append(py::make_tuple(e.cell, g.vertices[e.v1], g.vertices[e.v2]));
  d["edges"] = edges;
  return d;
}

py::list zeros(const std::string& word, std::optional<int> q) {
  const CellComplexData c = build_complex();
  const LatticePath path = to_path(w(word, 2));
  const auto found = q ? zero_scan(c, path, *q) : zero_scan(c, path);
  py::list out;
  for (const auto& z : found)
    out.append(py::make_tuple(c.two_cells[z.cell], z.x, z.y));
  return out;
}

}  // namespace

PYBIND11_MODULE(_mixforge, m) {
  m.doc() = "balanced-word grammar derivations, lattice loop decompositions "
            "and the verification complex";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "displacement",
      [](const std::string& word, int n) {
        const Displacement d = displacement(w(word, n));
        py::list out;
        for (int i = 0; i < n; ++i) out.append(d.c[i]);
        return out;
      },
      py::arg("word"), py::arg("n") = 2);
  m.def(
      "in_on", [](const std::string& word, int n) { return in_on(w(word, n)); },
      py::arg("word"), py::arg("n") = 2);
  m.def(
      "inverse_letter",
      [](const std::string& letter) {
        return std::string(
            1, inverse_letter(Letter::from_char(letter.at(0))).to_char());
      },
      py::arg("letter"));
  m.def(
      "enumerate_on",
      [](int length, int n, std::uint64_t cap) {
        py::list out;
        for (const Word& word : enumerate_on(length, n, cap))
          out.append(format_word(word));
        return out;
      },
      py::arg("length"), py::arg("n") = 2,
      py::arg("cap") = kDefaultEnumerationCap);

  m.def("to_path", &path_points, py::arg("word"), py::arg("n") = 2);
  m.def("self_intersections", &intersections, py::arg("word"),
        py::arg("n") = 2, py::arg("q") = py::none());
  m.def(
      "is_embedded",
      [](const std::string& word, int n) {
        return is_embedded(to_path(w(word, n)));
      },
      py::arg("word"), py::arg("n") = 2);
  m.def("simplify_loop", &simplify, py::arg("w1"), py::arg("w2"),
        py::arg("n") = 2);
  m.def("winding_number", &winding, py::arg("vectors"), py::arg("closed"));
  m.def("link_cycle_degree", &degree_report, py::arg("word"),
        py::arg("half") = "first", py::arg("delta") = 1);
  m.def(
      "render_svg",
      [](const std::string& word) { return render_svg(to_path(w(word, 2))); },
      py::arg("word"));

  m.def("derive", &derive_json, py::arg("w1"), py::arg("w2") = "");
  m.def("derive3", &derive3_json, py::arg("w1"), py::arg("w2") = "",
        py::arg("w3") = "");
  m.def("find_split", &split_json, py::arg("w1"), py::arg("w2") = "");
  m.def("find_alternating_split3", &alternating, py::arg("word"));
  m.def("verify_tree", &verify_tree_json, py::arg("tree_json"),
        py::arg("n") = 2);
  m.def("enumerate_derivable", &derivable, py::arg("n"), py::arg("bound"));

  m.def("verify_dd_zero", [] { return verify_dd_zero(build_complex()); });
  m.def("homology", &homology);
  m.def("link_graph", &link_info, py::arg("vertex"));
  m.def("complex_json", [] { return complex_to_json(build_complex()); });
  m.def("zero_scan", &zeros, py::arg("word"), py::arg("q") = py::none());
}
