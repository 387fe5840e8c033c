// Text file formats: graph-class files, Sudoku matrices, S-permutation
// families and clique lists, plus the JSON form of CountReport. All big
// integers are serialized as decimal strings and rationals as "p/q".
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spm/bipartite_graph.hpp"
#include "spm/formulas.hpp"
#include "spm/pi_matrix.hpp"
#include "spm/sudoku.hpp"

namespace spm {

// Graph-class file: header "n=<n> k=<k> count=<c>", then one lowercase hex
// mask per line (ceil(n^2/4) digits, bit 0 least significant).
void write_graph_class_file(std::ostream& out, int n, int k,
                            const std::vector<BipartiteGraph>& reps);
struct GraphClassFile {
  int n = 0;
  int k = 0;
  std::vector<BipartiteGraph> reps;
};
GraphClassFile read_graph_class_file(std::istream& in);

std::string mask_to_hex(int n, std::uint32_t mask);

// Sudoku matrix: n^2 lines of n^2 space-separated integers.
void write_sudoku(std::ostream& out, const SudokuMatrix& p);
SudokuMatrix read_sudoku(std::istream& in);

// Family file: header "n=<n> count=<c>", then one matrix per line as n^2
// space-separated symbol codes, cell-major (code = (a-1)*n + (b-1)).
void write_family(std::ostream& out,
                  const std::vector<SPermutationMatrix>& family);
std::vector<SPermutationMatrix> read_family(std::istream& in);

// Clique list: one clique per line as sorted vertex indices.
void write_clique_list(std::ostream& out,
                       const std::vector<std::vector<std::uint32_t>>& cliques);

// CountReport as a JSON object string (insertion-ordered keys, 2-space
// indent); integers as decimal strings, thetas as "p/q".
std::string count_report_to_json(const CountReport& report);

}  // namespace spm
