#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lexcycle/checkers.hpp"
#include "lexcycle/constructions.hpp"
#include "lexcycle/cycle.hpp"
#include "lexcycle/graph_io.hpp"
#include "lexcycle/matrix.hpp"
#include "lexcycle/sweep.hpp"

namespace py = pybind11;
using namespace lexcycle;

namespace {

using Names = std::vector<std::string>;

Names names_of(const Graph& g, const Ordering& o) {
  Names out;
  for (Vertex v : o) out.push_back(g.name(v));
  return out;
}

Ordering ordering_of(const Graph& g, const Names& names) {
  std::vector<Vertex> seq;
  for (const auto& n : names) seq.push_back(g.index_of(n));
  Ordering o(std::move(seq));
  require_ordering_of(g, o);
  return o;
}

Ordering optional_ordering(const Graph& g, const std::optional<Names>& names) {
  return names ? ordering_of(g, *names) : Ordering::identity(g.order());
}

SearchKind kind_of(const std::string& text) {
  auto k = parse_search_kind(text);
  if (!k) throw py::value_error("unknown search '" + text + "'");
  return *k;
}

Engine engine_of(const std::string& text) {
  if (text == "partition") return Engine::PartitionRefinement;
  if (text == "reference") return Engine::Reference;
  throw py::value_error("unknown engine '" + text + "'");
}

py::list traces(const Graph& g, const std::vector<Ordering>& orderings) {
  py::list out;
  for (const auto& o : orderings) out.append(names_of(g, o));
  return out;
}

py::object fixture_dict(const Fixture& f) {
  py::dict orderings;
  for (const auto& [label, o] : f.orderings) orderings[py::str(label)] = names_of(f.graph, o);
  return py::make_tuple(f.graph, orderings);
}

py::object generated(const GeneratedGraph& gen) {
  if (!gen.witness) return py::make_tuple(gen.graph, py::none());
  return py::make_tuple(gen.graph, names_of(gen.graph, *gen.witness));
}

}  // namespace

PYBIND11_MODULE(_lexcycle, m) {
  m.doc() = "Multi-sweep graph searches, cycle detection and ordering checks";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_static("from_text", &parse_graph, py::arg("text"), "Parse the 'v name' / 'u w' text format.")
      .def_static(
          "from_edges",
          [](const Names& vertices, const std::vector<std::pair<std::string, std::string>>& edges) {
            GraphBuilder b;
            for (const auto& v : vertices) b.add_vertex(v);
            for (const auto& [u, w] : edges) {
              b.ensure_vertex(u);
              b.ensure_vertex(w);
              b.add_edge(u, w);
            }
            return std::move(b).build();
          },
          py::arg("vertices"), py::arg("edges"))
      .def("to_text", &serialize_graph)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("vertices", &Graph::names)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (auto [u, w] : g.edges()) out.emplace_back(g.name(u), g.name(w));
             return out;
           })
      .def("neighbors",
           [](const Graph& g, const std::string& v) {
             Names out;
             for (Vertex w : g.neighbors(g.index_of(v))) out.push_back(g.name(w));
             return out;
           })
      .def("adjacent", [](const Graph& g, const std::string& u, const std::string& v) {
        return g.adjacent(g.index_of(u), g.index_of(v));
      })
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("__len__", &Graph::order)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  m.def(
      "plus_sweep",
      [](const Graph& g, const Names& tiebreak, const std::string& search, const std::string& engine) {
        return names_of(g, plus_sweep(kind_of(search), g, ordering_of(g, tiebreak), engine_of(engine)));
      },
      py::arg("graph"), py::arg("tiebreak"), py::arg("search") = "lexbfs", py::arg("engine") = "partition",
      "One search with ties broken towards the rightmost vertex of `tiebreak`.");

  m.def(
      "sweep_sequence",
      [](const Graph& g, const Names& seed, std::size_t count, const std::string& search) {
        return traces(g, sweep_sequence(kind_of(search), g, ordering_of(g, seed), count).orderings);
      },
      py::arg("graph"), py::arg("seed"), py::arg("count"), py::arg("search") = "lexbfs");

  m.def(
      "detect_cycle",
      [](const Graph& g, const std::optional<Names>& seed, const std::string& search,
         std::optional<std::size_t> max_sweeps) {
        const Ordering s = optional_ordering(g, seed);
        const auto kind = kind_of(search);
        const auto r = max_sweeps ? detect_cycle(kind, g, s, *max_sweeps) : detect_cycle(kind, g, s);
        py::dict out;
        out["tail"] = r.tail;
        out["cycle_length"] = r.cycle_length;
        out["total_sweeps"] = r.total_sweeps;
        out["cycle"] = traces(g, r.cycle);
        return out;
      },
      py::arg("graph"), py::arg("seed") = py::none(), py::arg("search") = "lexbfs", py::arg("max_sweeps") = py::none());

  m.def(
      "lex_cycle",
      [](const Graph& g, std::size_t cap) {
        const auto r = lex_cycle(g, cap);
        py::dict out;
        out["value"] = r.value;
        out["exact"] = r.exact;
        out["witness"] = names_of(g, r.witness);
        out["seeds_examined"] = r.seeds_examined;
        return out;
      },
      py::arg("graph"), py::arg("cap") = kDefaultEnumerationCap,
      "Longest LexBFS+ cycle over every LexBFS seed.");

  m.def(
      "transitive_orientation",
      [](const Graph& g, std::size_t budget, const std::optional<Names>& seed) {
        std::optional<Ordering> s;
        if (seed) s = ordering_of(g, *seed);
        const auto r = transitive_orientation(g, budget, s);
        py::dict out;
        out["ordering"] = names_of(g, r.ordering);
        out["sweeps_used"] = r.sweeps_used;
        out["trace"] = traces(g, r.trace);
        return out;
      },
      py::arg("graph"), py::arg("budget") = 64, py::arg("seed") = py::none());

  m.def(
      "check",
      [](const Graph& g, const Names& order, const std::string& property) -> std::optional<Names> {
        const Ordering o = ordering_of(g, order);
        CheckResult r;
        if (property == "pi") r = check_pi_order(g, o);
        else if (property == "interval") r = check_i_order(g, o);
        else if (property == "cocomp") r = check_cocomp_order(g, o);
        else if (property == "lexbfs4pc") r = check_lexbfs_4pc(g, o);
        else if (property == "transitive") r = validate_transitive_orientation(g, o);
        else throw py::value_error("unknown property '" + property + "'");
        if (!r) return std::nullopt;
        Names witness;
        for (Vertex v : r->witness) witness.push_back(g.name(v));
        return witness;
      },
      py::arg("graph"), py::arg("order"), py::arg("property"),
      "None when the ordering has the property, otherwise the first violating tuple.");

  m.def(
      "asteroidal_number",
      [](const Graph& g, std::size_t size_cap) {
        const auto r = asteroidal_number(g, size_cap);
        Names witness;
        for (Vertex v : r.witness) witness.push_back(g.name(v));
        return py::make_tuple(r.value, witness, r.exact);
      },
      py::arg("graph"), py::arg("size_cap") = 64);

  m.def("starjoin", [](const std::vector<Graph>& graphs) { return starjoin(graphs).graph; }, py::arg("graphs"));

  m.def(
      "fixture",
      [](const std::string& name) {
        if (name == "g3") return fixture_dict(fixture_g3());
        if (name == "g4") return fixture_dict(fixture_g4());
        if (name == "lexdfs") return fixture_dict(fixture_lexdfs_example());
        throw py::value_error("unknown fixture '" + name + "'");
      },
      py::arg("name"), "(graph, {label: ordering}) for 'g3', 'g4' or 'lexdfs'.");
  m.def("two_chain", [](int n) { return fixture_dict(gen_two_chain(n)); }, py::arg("n"));
  m.def("domino", &gen_domino);
  m.def("ladder", &gen_ladder, py::arg("k"));
  m.def("unit_interval", [](std::size_t n, std::uint64_t seed) { return generated(gen_unit_interval(n, seed)); },
        py::arg("n"), py::arg("seed"));
  m.def("interval", [](std::size_t n, std::uint64_t seed) { return generated(gen_interval(n, seed)); }, py::arg("n"),
        py::arg("seed"));
  m.def("permutation_graph",
        [](std::size_t n, std::uint64_t seed) { return generated(gen_permutation_graph(n, seed)); }, py::arg("n"),
        py::arg("seed"));
  m.def("cobipartite",
        [](std::size_t p, std::size_t q, double density, std::uint64_t seed) {
          return generated(gen_cobipartite(p, q, density, seed));
        },
        py::arg("p"), py::arg("q"), py::arg("density"), py::arg("seed"));
  m.def("tree", [](std::size_t n, std::uint64_t seed) { return gen_tree(n, seed).graph; }, py::arg("n"),
        py::arg("seed"));

  m.def("sort_rows_lex", [](const std::vector<std::vector<int>>& rows) {
    return sort_rows_lex(BinaryMatrix::from_rows(rows)).to_rows();
  });
  m.def("sort_cols_lex", [](const std::vector<std::vector<int>>& rows) {
    return sort_cols_lex(BinaryMatrix::from_rows(rows)).to_rows();
  });
  m.def(
      "iterate_to_fixpoint",
      [](const std::vector<std::vector<int>>& rows, std::optional<std::size_t> max_steps) {
        const auto mat = BinaryMatrix::from_rows(rows);
        const auto r = iterate_to_fixpoint(mat, max_steps ? *max_steps : mat.rows() * mat.cols() + 2);
        py::dict out;
        out["final"] = r.final_matrix.to_rows();
        out["steps"] = r.steps;
        out["potential_trace"] = r.potential_trace;
        return out;
      },
      py::arg("rows"), py::arg("max_steps") = py::none());
}
