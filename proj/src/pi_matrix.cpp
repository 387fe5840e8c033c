#include "spm/pi_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spm {

namespace {

// Conditions shared by both representations: first components along each
// row and second components along each column are permutations of {1..n}.
// Equivalent to "the reconstructed n^2 x n^2 block matrix is a permutation
// matrix with one 1 per block".
void validate_pair_grid(int n, const std::vector<CellPair>& cells,
                        const char* type_name) {
  if (n < 1) {
    throw validation_error(std::string(type_name) + ": side must be >= 1");
  }
  if (cells.size() != static_cast<std::size_t>(n) * n) {
    throw validation_error(std::string(type_name) + ": grid must hold n^2 " +
                           "cells, got " + std::to_string(cells.size()));
  }
  for (const CellPair& cell : cells) {
    if (cell.a < 1 || cell.a > n || cell.b < 1 || cell.b > n) {
      throw validation_error(std::string(type_name) +
                             ": pair components out of {1..n}");
    }
  }
  for (int i = 0; i < n; ++i) {
    std::uint32_t seen_a = 0;
    std::uint32_t seen_b = 0;
    for (int j = 0; j < n; ++j) {
      seen_a |= 1u << (cells[i * n + j].a - 1);
      seen_b |= 1u << (cells[j * n + i].b - 1);
    }
    if (seen_a != (1u << n) - 1u) {
      throw validation_error(std::string(type_name) + ": first components of "
                             "row " + std::to_string(i) +
                             " are not a permutation");
    }
    if (seen_b != (1u << n) - 1u) {
      throw validation_error(std::string(type_name) +
                             ": second components of column " +
                             std::to_string(i) + " are not a permutation");
    }
  }
}

std::vector<std::uint64_t> build_fingerprint(
    int n, const std::vector<CellPair>& cells) {
  const std::size_t symbols = static_cast<std::size_t>(n) * n;
  std::vector<std::uint64_t> words(fingerprint_words(n), 0);
  for (std::size_t cell = 0; cell < cells.size(); ++cell) {
    const std::size_t symbol =
        static_cast<std::size_t>(cells[cell].a - 1) * n + (cells[cell].b - 1);
    const std::size_t bit = cell * symbols + symbol;
    words[bit / 64] |= std::uint64_t{1} << (bit % 64);
  }
  return words;
}

}  // namespace

PiMatrix::PiMatrix(int side, std::vector<CellPair> grid)
    : n(side), cells(std::move(grid)) {
  validate_pair_grid(n, cells, "PiMatrix");
}

SPermutationMatrix::SPermutationMatrix(int side, std::vector<CellPair> ones)
    : n(side), block_one(std::move(ones)) {
  validate_pair_grid(n, block_one, "SPermutationMatrix");
  fingerprint = build_fingerprint(n, block_one);
}

std::vector<std::uint8_t> SPermutationMatrix::to_dense() const {
  const int order = n * n;
  std::vector<std::uint8_t> dense(static_cast<std::size_t>(order) * order, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const CellPair& one = block_one[s * n + t];
      const int row = s * n + (one.a - 1);
      const int col = t * n + (one.b - 1);
      dense[static_cast<std::size_t>(row) * order + col] = 1;
    }
  }
  return dense;
}

std::size_t fingerprint_words(int n) {
  const std::size_t bits =
      static_cast<std::size_t>(n) * n * n * n;
  return (bits + 63) / 64;
}

SPermutationMatrix pi_to_sperm(const PiMatrix& p) {
  return SPermutationMatrix(p.n, p.cells);
}

PiMatrix sperm_to_pi(const SPermutationMatrix& a) {
  return PiMatrix(a.n, a.block_one);
}

PiMatrix pi_from_permutations(const std::vector<std::vector<int>>& rho,
                              const std::vector<std::vector<int>>& sigma) {
  const int n = static_cast<int>(rho.size());
  if (sigma.size() != rho.size()) {
    throw validation_error("need n row and n column permutations");
  }
  std::vector<CellPair> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rho[i].size()) != n ||
        static_cast<int>(sigma[i].size()) != n) {
      throw validation_error("permutations must have length n");
    }
    for (int j = 0; j < n; ++j) {
      cells[i * n + j] = CellPair{static_cast<std::uint8_t>(rho[i][j] + 1),
                                  static_cast<std::uint8_t>(sigma[j][i] + 1)};
    }
  }
  return PiMatrix(n, std::move(cells));
}

bool is_disjoint(const SPermutationMatrix& x, const SPermutationMatrix& y) {
  if (x.n != y.n) {
    throw std::invalid_argument(
        "matrices with different side sizes are incomparable");
  }
  for (std::size_t w = 0; w < x.fingerprint.size(); ++w) {
    if (x.fingerprint[w] & y.fingerprint[w]) return false;
  }
  return true;
}

std::vector<PiMatrix> enumerate_pi(int n) {
  if (n < 1 || n > 3) {
    throw feasibility_error(
        "full enumeration is supported for n <= 3 ((n!)^{2n} elements), got "
        "n=" + std::to_string(n));
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  std::vector<int> p = identity;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t digits = 2 * static_cast<std::size_t>(n);
  std::vector<std::size_t> odometer(digits, 0);
  std::vector<PiMatrix> result;
  std::vector<std::vector<int>> rho(n), sigma(n);
  for (;;) {
    for (int i = 0; i < n; ++i) rho[i] = perms[odometer[i]];
    for (int j = 0; j < n; ++j) sigma[j] = perms[odometer[n + j]];
    result.push_back(pi_from_permutations(rho, sigma));

    // Odometer over lex ranks, last digit fastest: overall order is
    // lexicographic in (rho_1..rho_n, sigma_1..sigma_n).
    std::size_t d = digits;
    while (d > 0) {
      --d;
      if (++odometer[d] < perms.size()) break;
      odometer[d] = 0;
      if (d == 0) return result;
    }
  }
}

std::vector<SPermutationMatrix> enumerate_sperm(int n) {
  std::vector<SPermutationMatrix> result;
  for (const PiMatrix& p : enumerate_pi(n)) {
    result.push_back(pi_to_sperm(p));
  }
  return result;
}

}  // namespace spm
