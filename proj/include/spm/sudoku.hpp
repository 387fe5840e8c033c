// Sudoku matrices over {1..n^2}: validation, composition from a family of
// pairwise-disjoint S-permutation matrices, decomposition back into value
// indicators, and a seeded randomized generator.
#pragma once

#include <cstdint>
#include <vector>

#include "spm/pi_matrix.hpp"
#include "spm/types.hpp"

namespace spm {

struct SudokuMatrix {
  int n = 0;
  std::vector<std::uint16_t> grid;  // n^2 x n^2 row-major, values 1..n^2

  SudokuMatrix() = default;
  // Throws validation_error unless every row, column and n x n block is a
  // permutation of {1..n^2}.
  SudokuMatrix(int side, std::vector<std::uint16_t> values);

  std::uint16_t at(int r, int c) const { return grid[r * n * n + c]; }

  friend bool operator==(const SudokuMatrix&, const SudokuMatrix&) = default;
};

// Total predicate on a raw grid; never throws on well-shaped input.
bool validate_sudoku(int n, const std::vector<std::uint16_t>& grid);

// P = sum labeling[i] * family[i]. family must hold n^2 pairwise-disjoint
// matrices of side n and labeling must be a permutation of {1..n^2};
// violations raise validation_error naming the offending pair / entry.
SudokuMatrix compose_sudoku(const std::vector<SPermutationMatrix>& family,
                            const std::vector<int>& labeling);

// The indicator matrix of each value 1..n^2, in value order. Pairwise
// disjoint by construction; compose_sudoku(decompose_sudoku(P), identity)
// == P.
std::vector<SPermutationMatrix> decompose_sudoku(const SudokuMatrix& p);

struct SamplerOptions {
  std::uint64_t node_budget = 1'000'000;  // backtracking nodes per attempt
  int max_restarts = 64;
};

// Random Sudoku matrix by seeded backtracking (most-constrained cell first,
// candidate values shuffled per cell). Deterministic for fixed (n, seed);
// throws sampling_error once the restart budget is exhausted.
SudokuMatrix random_sudoku(int n, std::uint64_t seed,
                           const SamplerOptions& options = {});

// n^2 pairwise-disjoint S-permutation matrices, deterministic given
// (n, seed). Requires n >= 2.
std::vector<SPermutationMatrix> sample_disjoint_family(
    int n, std::uint64_t seed, const SamplerOptions& options = {});

}  // namespace spm
