// Python bindings for the counting library. Big integers cross the boundary
// as Python ints, rationals as fractions.Fraction; the heavy oracles release
// the GIL while they run.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "spm/bipartite_graph.hpp"
#include "spm/disjointness.hpp"
#include "spm/formulas.hpp"
#include "spm/pi_matrix.hpp"
#include "spm/sudoku.hpp"
#include "spm/types.hpp"
#include "spm/version.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py_int(const spm::BigInt& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

spm::BigInt to_bigint(const py::int_& value) {
  return spm::BigInt(py::str(value).cast<std::string>());
}

py::object to_fraction(const spm::Rational& value) {
  static py::object fraction_type =
      py::module_::import("fractions").attr("Fraction");
  return fraction_type(spm::rational_to_string(value));
}

std::vector<spm::CellPair> to_cells(
    const std::vector<std::pair<int, int>>& pairs) {
  std::vector<spm::CellPair> cells;
  cells.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    cells.push_back(spm::CellPair{static_cast<std::uint8_t>(a),
                                  static_cast<std::uint8_t>(b)});
  }
  return cells;
}

std::vector<std::pair<int, int>> from_cells(
    const std::vector<spm::CellPair>& cells) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(cells.size());
  for (const auto& cell : cells) pairs.emplace_back(cell.a, cell.b);
  return pairs;
}

std::vector<std::vector<int>> sudoku_rows(const spm::SudokuMatrix& p) {
  const int order = p.n * p.n;
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) rows[r][c] = p.at(r, c);
  }
  return rows;
}

std::vector<std::uint16_t> flatten_rows(
    int n, const std::vector<std::vector<int>>& rows) {
  std::vector<std::uint16_t> grid;
  grid.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw spm::validation_error("grid must be square");
    }
    for (int value : row) grid.push_back(static_cast<std::uint16_t>(value));
  }
  const std::size_t order = static_cast<std::size_t>(n) * n;
  if (rows.size() != order) {
    throw spm::validation_error("grid must have n^2 rows");
  }
  return grid;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counting of disjoint pairs of S-permutation matrices";
  m.attr("__version__") = spm::kVersion;

  py::register_exception<spm::feasibility_error>(m, "FeasibilityError");
  py::register_exception<spm::validation_error>(m, "ValidationError");
  py::register_exception<spm::verification_error>(m, "VerificationError");
  py::register_exception<spm::sampling_error>(m, "SamplingError");

  py::class_<spm::BipartiteGraph>(m, "BipartiteGraph")
      .def(py::init<int, std::uint32_t>(), py::arg("n"), py::arg("edges"))
      .def_readonly("n", &spm::BipartiteGraph::n)
      .def_readonly("edges", &spm::BipartiteGraph::edges)
      .def("edge_count", &spm::BipartiteGraph::edge_count)
      .def("has_edge", &spm::BipartiteGraph::has_edge, py::arg("r"),
           py::arg("c"))
      .def(py::self == py::self)
      .def("__repr__", [](const spm::BipartiteGraph& g) {
        return "BipartiteGraph(n=" + std::to_string(g.n) +
               ", edges=" + std::to_string(g.edges) + ")";
      });

  m.def("canonical_form", &spm::canonical_form, py::arg("g"));
  m.def("is_isomorphic", &spm::is_isomorphic, py::arg("g1"), py::arg("g2"));
  m.def("relabel", &spm::relabel, py::arg("g"), py::arg("rho"),
        py::arg("sigma"));
  m.def(
      "enumerate_class_reps",
      [](int n, int k, bool allow_n5) {
        return spm::enumerate_class_reps(n, k,
                                         spm::EnumerationLimits{allow_n5});
      },
      py::arg("n"), py::arg("k"), py::arg("allow_n5") = false);
  m.def(
      "graph_count_table",
      [](int n, bool allow_n5) {
        return spm::graph_count_table(n, spm::EnumerationLimits{allow_n5});
      },
      py::arg("n"), py::arg("allow_n5") = false);
  m.def(
      "degree_profile",
      [](const spm::BipartiteGraph& g) { return spm::degree_profile(g).psi; },
      py::arg("g"));
  m.def(
      "neighborhood_classes",
      [](const spm::BipartiteGraph& g) {
        return spm::neighborhood_classes(g).deltas;
      },
      py::arg("g"));
  m.def("automorphism_count", &spm::automorphism_count, py::arg("g"));
  m.def(
      "labeled_class_size",
      [](const spm::BipartiteGraph& g) {
        return to_py_int(spm::labeled_class_size(g));
      },
      py::arg("g"));

  m.def(
      "omega", [](const spm::BipartiteGraph& g) { return to_fraction(spm::omega(g)); },
      py::arg("g"));
  m.def(
      "theta",
      [](int n, int k, bool allow_n5) {
        return to_fraction(spm::theta(n, k, spm::EnumerationLimits{allow_n5}));
      },
      py::arg("n"), py::arg("k"), py::arg("allow_n5") = false);
  m.def(
      "theta_table",
      [](int n, bool allow_n5) {
        py::list rows;
        for (const auto& row :
             spm::theta_table(n, spm::EnumerationLimits{allow_n5})) {
          rows.append(py::make_tuple(row.k, row.class_count,
                                     to_fraction(row.theta)));
        }
        return rows;
      },
      py::arg("n"), py::arg("allow_n5") = false);
  m.def(
      "b_count",
      [](int n, int k, bool allow_n5) {
        return to_py_int(spm::b_count(n, k, spm::EnumerationLimits{allow_n5}));
      },
      py::arg("n"), py::arg("k"), py::arg("allow_n5") = false);
  m.def(
      "binomial_identity_check",
      [](int n, bool allow_n5) {
        return spm::binomial_identity_check(n,
                                            spm::EnumerationLimits{allow_n5});
      },
      py::arg("n"), py::arg("allow_n5") = false);
  m.def(
      "q_count",
      [](int n, int k, bool allow_n5) {
        return to_py_int(spm::q_count(n, k, spm::EnumerationLimits{allow_n5}));
      },
      py::arg("n"), py::arg("k"), py::arg("allow_n5") = false);
  m.def(
      "s_perm_count",
      [](int n) { return to_py_int(spm::s_perm_count(n)); }, py::arg("n"));
  m.def(
      "disjoint_ordered",
      [](int n, bool allow_n5) {
        return to_py_int(
            spm::disjoint_ordered(n, spm::EnumerationLimits{allow_n5}));
      },
      py::arg("n"), py::arg("allow_n5") = false);
  m.def(
      "disjoint_unordered",
      [](int n, bool allow_n5) {
        return to_py_int(
            spm::disjoint_unordered(n, spm::EnumerationLimits{allow_n5}));
      },
      py::arg("n"), py::arg("allow_n5") = false);
  m.def(
      "disjoint_ordered_by_neighborhoods",
      [](int n, bool allow_n5) {
        return to_py_int(spm::disjoint_ordered_by_neighborhoods(
            n, spm::EnumerationLimits{allow_n5}));
      },
      py::arg("n"), py::arg("allow_n5") = false);
  m.def(
      "disjoint_ordered_by_profile",
      [](int n, bool allow_n5) {
        return to_py_int(spm::disjoint_ordered_by_profile(
            n, spm::EnumerationLimits{allow_n5}));
      },
      py::arg("n"), py::arg("allow_n5") = false);
  m.def(
      "z_from_sigma",
      [](const py::int_& sigma, int n) {
        return to_py_int(spm::z_from_sigma(to_bigint(sigma), n));
      },
      py::arg("sigma"), py::arg("n"));
  m.def(
      "count_report",
      [](int n, bool allow_n5) {
        const spm::CountReport report =
            spm::count_report(n, spm::EnumerationLimits{allow_n5});
        py::dict d;
        d["n"] = report.n;
        py::list per_k;
        for (const auto& row : report.per_k) {
          py::dict r;
          r["k"] = row.k;
          r["classes"] = row.class_count;
          r["theta"] = to_fraction(row.theta);
          r["q"] = to_py_int(row.q);
          per_k.append(r);
        }
        d["per_k"] = per_k;
        d["ordered_disjoint_pairs"] = to_py_int(report.ordered_pairs);
        d["unordered_disjoint_pairs"] = to_py_int(report.unordered_pairs);
        d["dual_path_check"] = report.dual_path_ok;
        return d;
      },
      py::arg("n"), py::arg("allow_n5") = false);

  py::class_<spm::PiMatrix>(m, "PiMatrix")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& cells) {
             return spm::PiMatrix(n, to_cells(cells));
           }),
           py::arg("n"), py::arg("cells"))
      .def_readonly("n", &spm::PiMatrix::n)
      .def_property_readonly(
          "cells",
          [](const spm::PiMatrix& p) { return from_cells(p.cells); })
      .def(py::self == py::self);

  py::class_<spm::SPermutationMatrix>(m, "SPermutationMatrix")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& ones) {
             return spm::SPermutationMatrix(n, to_cells(ones));
           }),
           py::arg("n"), py::arg("block_one"))
      .def_readonly("n", &spm::SPermutationMatrix::n)
      .def_property_readonly(
          "block_one",
          [](const spm::SPermutationMatrix& a) {
            return from_cells(a.block_one);
          })
      .def("to_dense",
           [](const spm::SPermutationMatrix& a) {
             const int order = a.n * a.n;
             const auto dense = a.to_dense();
             std::vector<std::vector<int>> rows(order,
                                                std::vector<int>(order));
             for (int r = 0; r < order; ++r) {
               for (int c = 0; c < order; ++c) {
                 rows[r][c] = dense[static_cast<std::size_t>(r) * order + c];
               }
             }
             return rows;
           })
      .def(py::self == py::self);

  m.def("pi_to_sperm", &spm::pi_to_sperm, py::arg("p"));
  m.def("sperm_to_pi", &spm::sperm_to_pi, py::arg("a"));
  m.def("pi_from_permutations", &spm::pi_from_permutations, py::arg("rho"),
        py::arg("sigma"));
  m.def("is_disjoint", &spm::is_disjoint, py::arg("x"), py::arg("y"));
  m.def("enumerate_pi", &spm::enumerate_pi, py::arg("n"));
  m.def("enumerate_sperm", &spm::enumerate_sperm, py::arg("n"));

  m.def(
      "brute_force_disjoint_count",
      [](int n, unsigned jobs) {
        spm::BigInt result;
        {
          py::gil_scoped_release release;
          result = spm::brute_force_disjoint_count(n, jobs);
        }
        return to_py_int(result);
      },
      py::arg("n"), py::arg("jobs") = 0);
  m.def(
      "agreement_histogram",
      [](int n, unsigned jobs) {
        std::vector<spm::BigInt> hist;
        {
          py::gil_scoped_release release;
          hist = spm::agreement_histogram(n, jobs);
        }
        py::list out;
        for (const auto& h : hist) out.append(to_py_int(h));
        return out;
      },
      py::arg("n"), py::arg("jobs") = 0);
  m.def(
      "q_from_histogram",
      [](const std::vector<py::int_>& hist, int k) {
        std::vector<spm::BigInt> values;
        values.reserve(hist.size());
        for (const auto& h : hist) values.push_back(to_bigint(h));
        return to_py_int(spm::q_from_histogram(values, k));
      },
      py::arg("hist"), py::arg("k"));

  py::class_<spm::DisjointnessGraph>(m, "DisjointnessGraph")
      .def_readonly("n", &spm::DisjointnessGraph::n)
      .def_property_readonly(
          "vertex_count",
          [](const spm::DisjointnessGraph& g) { return g.vertices.size(); })
      .def_property_readonly(
          "edge_count",
          [](const spm::DisjointnessGraph& g) {
            return to_py_int(g.edge_count);
          })
      .def("vertex",
           [](const spm::DisjointnessGraph& g, std::size_t i) {
             if (i >= g.vertices.size()) {
               throw py::index_error("vertex index out of range");
             }
             return g.vertices[i];
           },
           py::arg("i"))
      .def("edge",
           [](const spm::DisjointnessGraph& g, std::size_t i, std::size_t j) {
             if (i >= g.vertices.size() || j >= g.vertices.size()) {
               throw py::index_error("vertex index out of range");
             }
             return g.edge(i, j);
           },
           py::arg("i"), py::arg("j"));

  m.def(
      "build_disjointness_graph",
      [](int n, bool allow_n3_graph, unsigned jobs) {
        py::gil_scoped_release release;
        return spm::build_disjointness_graph(
            n, spm::OracleLimits{allow_n3_graph}, jobs);
      },
      py::arg("n"), py::arg("allow_n3_graph") = false, py::arg("jobs") = 0);
  m.def(
      "count_cliques",
      [](const spm::DisjointnessGraph& g, int size) {
        return to_py_int(spm::count_cliques(g, size));
      },
      py::arg("g"), py::arg("size"));
  m.def("list_cliques", &spm::list_cliques, py::arg("g"), py::arg("size"));

  py::class_<spm::SudokuMatrix>(m, "SudokuMatrix")
      .def(py::init([](int n, const std::vector<std::vector<int>>& rows) {
             return spm::SudokuMatrix(n, flatten_rows(n, rows));
           }),
           py::arg("n"), py::arg("rows"))
      .def_readonly("n", &spm::SudokuMatrix::n)
      .def("rows", &sudoku_rows)
      .def(py::self == py::self);

  m.def(
      "validate_sudoku",
      [](int n, const std::vector<std::vector<int>>& rows) {
        std::vector<std::uint16_t> grid;
        for (const auto& row : rows) {
          for (int value : row) {
            grid.push_back(static_cast<std::uint16_t>(value));
          }
        }
        return spm::validate_sudoku(n, grid);
      },
      py::arg("n"), py::arg("rows"));
  m.def("compose_sudoku", &spm::compose_sudoku, py::arg("family"),
        py::arg("labeling"));
  m.def("decompose_sudoku", &spm::decompose_sudoku, py::arg("p"));
  m.def(
      "random_sudoku",
      [](int n, std::uint64_t seed, std::uint64_t node_budget,
         int max_restarts) {
        return spm::random_sudoku(n, seed,
                                  spm::SamplerOptions{node_budget,
                                                      max_restarts});
      },
      py::arg("n"), py::arg("seed"), py::arg("node_budget") = 1000000,
      py::arg("max_restarts") = 64);
  m.def(
      "sample_disjoint_family",
      [](int n, std::uint64_t seed, std::uint64_t node_budget,
         int max_restarts) {
        return spm::sample_disjoint_family(
            n, seed, spm::SamplerOptions{node_budget, max_restarts});
      },
      py::arg("n"), py::arg("seed"), py::arg("node_budget") = 1000000,
      py::arg("max_restarts") = 64);
}
