// Concrete matrix representations: the n x n grid-of-ordered-pairs form
// (row first-components and column second-components are permutations) and
// the block S-permutation matrix form, with the bijection between them and
// the bitmask fingerprint that makes disjointness a wordwise AND.
//
// Encoding: cell (i,j) -> i*n + j and pair <a,b> -> (a-1)*n + (b-1), both
// row-major and 0-based; fingerprint bit = cell*n^2 + symbol, packed into
// 64-bit words (n^4 bits total, e.g. 81 bits in two words at n=3).
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spm/types.hpp"

namespace spm {

// Ordered pair <a,b>, 1-based components in {1..n}.
struct CellPair {
  std::uint8_t a = 0;
  std::uint8_t b = 0;

  friend bool operator==(const CellPair&, const CellPair&) = default;
};

struct PiMatrix {
  int n = 0;
  std::vector<CellPair> cells;  // row-major n*n grid

  PiMatrix() = default;
  // Validates the two permutation conditions: first components along each
  // row and second components along each column. Throws validation_error.
  PiMatrix(int side, std::vector<CellPair> grid);

  const CellPair& at(int i, int j) const { return cells[i * n + j]; }

  friend bool operator==(const PiMatrix&, const PiMatrix&) = default;
};

struct SPermutationMatrix {
  int n = 0;
  // block_one[s*n + t] = in-block coordinates (1-based) of the single 1 in
  // block (s,t).
  std::vector<CellPair> block_one;
  // n^4-bit disjointness fingerprint, bit (cell*n^2 + symbol).
  std::vector<std::uint64_t> fingerprint;

  SPermutationMatrix() = default;
  // Validates that the reconstructed n^2 x n^2 matrix is a permutation
  // matrix (exactly one 1 per row and per column). Throws validation_error.
  SPermutationMatrix(int side, std::vector<CellPair> ones);

  // Dense n^2 x n^2 binary matrix, row-major.
  std::vector<std::uint8_t> to_dense() const;

  friend bool operator==(const SPermutationMatrix& x,
                         const SPermutationMatrix& y) {
    return x.n == y.n && x.block_one == y.block_one;
  }
};

// Number of 64-bit fingerprint words for side n.
std::size_t fingerprint_words(int n);

// Lemma-2-style bijection: block (i,j) carries its 1 at the in-block
// coordinates stored in grid cell (i,j), and conversely.
SPermutationMatrix pi_to_sperm(const PiMatrix& p);
PiMatrix sperm_to_pi(const SPermutationMatrix& a);

// The grid built from row permutations rho_1..rho_n and column permutations
// sigma_1..sigma_n: cell (i,j) = <rho_i(j), sigma_j(i)> (1-based images).
// Each permutation is given 0-based as a vector of images of 0..n-1.
PiMatrix pi_from_permutations(const std::vector<std::vector<int>>& rho,
                              const std::vector<std::vector<int>>& sigma);

// true iff the matrices share no 1 (no cell where both grids carry the same
// pair). Throws std::invalid_argument on mismatched n.
bool is_disjoint(const SPermutationMatrix& x, const SPermutationMatrix& y);

// All (n!)^{2n} matrices in lexicographic order of the
// (rho_1..rho_n, sigma_1..sigma_n) tuple, permutations ordered by lex rank.
// Requires n <= 3 (46656 at n=3).
std::vector<PiMatrix> enumerate_pi(int n);

// enumerate_pi composed with pi_to_sperm; same order. This is the vertex
// order of the disjointness graph.
std::vector<SPermutationMatrix> enumerate_sperm(int n);

}  // namespace spm
