#include "spm/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace spm {

namespace {

std::string read_nonempty_line(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw validation_error(std::string("unexpected end of input reading ") +
                         what);
}

}  // namespace

std::string mask_to_hex(int n, std::uint32_t mask) {
  const int digits = (n * n + 3) / 4;
  char buffer[16];
  std::snprintf(buffer, sizeof buffer, "%0*x", digits, mask);
  return buffer;
}

void write_graph_class_file(std::ostream& out, int n, int k,
                            const std::vector<BipartiteGraph>& reps) {
  out << "n=" << n << " k=" << k << " count=" << reps.size() << "\n";
  for (const BipartiteGraph& g : reps) {
    out << mask_to_hex(n, g.edges) << "\n";
  }
}

GraphClassFile read_graph_class_file(std::istream& in) {
  const std::string header = read_nonempty_line(in, "graph-class header");
  GraphClassFile file;
  std::size_t count = 0;
  if (std::sscanf(header.c_str(), "n=%d k=%d count=%zu", &file.n, &file.k,
                  &count) != 3) {
    throw validation_error("malformed graph-class header: " + header);
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::string line = read_nonempty_line(in, "graph mask");
    std::size_t used = 0;
    unsigned long mask = 0;
    try {
      mask = std::stoul(line, &used, 16);
    } catch (const std::exception&) {
      throw validation_error("bad mask line: " + line);
    }
    if (used != line.size()) {
      throw validation_error("bad mask line: " + line);
    }
    BipartiteGraph g(file.n, static_cast<std::uint32_t>(mask));
    if (g.edge_count() != file.k) {
      throw validation_error("mask " + line + " has " +
                             std::to_string(g.edge_count()) +
                             " edges, expected " + std::to_string(file.k));
    }
    file.reps.push_back(g);
  }
  return file;
}

void write_sudoku(std::ostream& out, const SudokuMatrix& p) {
  const int order = p.n * p.n;
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) {
      if (c != 0) out << ' ';
      out << p.at(r, c);
    }
    out << '\n';
  }
}

SudokuMatrix read_sudoku(std::istream& in) {
  const std::string first = read_nonempty_line(in, "sudoku row");
  std::vector<std::uint16_t> grid;
  std::istringstream first_row(first);
  long value = 0;
  while (first_row >> value) grid.push_back(static_cast<std::uint16_t>(value));
  const std::size_t order = grid.size();
  const int n = static_cast<int>(std::lround(std::sqrt(double(order))));
  if (order == 0 || static_cast<std::size_t>(n) * n != order) {
    throw validation_error("row length must be a perfect square n^2, got " +
                           std::to_string(order));
  }
  for (std::size_t r = 1; r < order; ++r) {
    std::istringstream row(read_nonempty_line(in, "sudoku row"));
    std::size_t cells = 0;
    while (row >> value) {
      grid.push_back(static_cast<std::uint16_t>(value));
      ++cells;
    }
    if (cells != order) {
      throw validation_error("sudoku row " + std::to_string(r) + " has " +
                             std::to_string(cells) + " cells, expected " +
                             std::to_string(order));
    }
  }
  return SudokuMatrix(n, std::move(grid));
}

void write_family(std::ostream& out,
                  const std::vector<SPermutationMatrix>& family) {
  const int n = family.empty() ? 0 : family[0].n;
  out << "n=" << n << " count=" << family.size() << "\n";
  for (const SPermutationMatrix& m : family) {
    for (std::size_t cell = 0; cell < m.block_one.size(); ++cell) {
      if (cell != 0) out << ' ';
      out << (m.block_one[cell].a - 1) * m.n + (m.block_one[cell].b - 1);
    }
    out << '\n';
  }
}

std::vector<SPermutationMatrix> read_family(std::istream& in) {
  const std::string header = read_nonempty_line(in, "family header");
  int n = 0;
  std::size_t count = 0;
  if (std::sscanf(header.c_str(), "n=%d count=%zu", &n, &count) != 2) {
    throw validation_error("malformed family header: " + header);
  }
  if (n < 1) throw validation_error("family side size must be >= 1");
  std::vector<SPermutationMatrix> family;
  family.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::istringstream line(read_nonempty_line(in, "family matrix"));
    std::vector<CellPair> ones;
    long code = 0;
    while (line >> code) {
      if (code < 0 || code >= n * n) {
        throw validation_error("symbol code " + std::to_string(code) +
                               " out of [0, n^2)");
      }
      ones.push_back(CellPair{static_cast<std::uint8_t>(code / n + 1),
                              static_cast<std::uint8_t>(code % n + 1)});
    }
    family.emplace_back(n, std::move(ones));
  }
  return family;
}

void write_clique_list(
    std::ostream& out,
    const std::vector<std::vector<std::uint32_t>>& cliques) {
  for (const auto& clique : cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (i != 0) out << ' ';
      out << clique[i];
    }
    out << '\n';
  }
}

std::string count_report_to_json(const CountReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CountRow& row : report.per_k) {
    rows.push_back({{"k", row.k},
                    {"classes", row.class_count},
                    {"theta", rational_to_string(row.theta)},
                    {"q", row.q.str()}});
  }
  j["per_k"] = rows;
  j["ordered_disjoint_pairs"] = report.ordered_pairs.str();
  j["unordered_disjoint_pairs"] = report.unordered_pairs.str();
  j["dual_path_check"] = report.dual_path_ok ? "ok" : "mismatch";
  return j.dump(2) + "\n";
}

}  // namespace spm
