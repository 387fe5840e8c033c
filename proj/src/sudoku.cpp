#include "spm/sudoku.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

namespace spm {

namespace {

// Values must be permutations of {1..n^2} along every row, column and
// block; tracked as bitmasks (value v -> bit v-1).
bool units_are_permutations(int n, const std::vector<std::uint16_t>& grid) {
  const int order = n * n;
  const std::uint64_t full = (order == 64) ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << order) - 1;
  std::vector<std::uint64_t> rows(order, 0), cols(order, 0), blocks(order, 0);
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) {
      const std::uint16_t value = grid[r * order + c];
      if (value < 1 || value > order) return false;
      const std::uint64_t bit = std::uint64_t{1} << (value - 1);
      const int block = (r / n) * n + (c / n);
      if ((rows[r] & bit) || (cols[c] & bit) || (blocks[block] & bit)) {
        return false;
      }
      rows[r] |= bit;
      cols[c] |= bit;
      blocks[block] |= bit;
    }
  }
  for (int u = 0; u < order; ++u) {
    if (rows[u] != full || cols[u] != full || blocks[u] != full) return false;
  }
  return true;
}

}  // namespace

SudokuMatrix::SudokuMatrix(int side, std::vector<std::uint16_t> values)
    : n(side), grid(std::move(values)) {
  if (!validate_sudoku(n, grid)) {
    throw validation_error("grid violates the row/column/block permutation "
                           "property");
  }
}

bool validate_sudoku(int n, const std::vector<std::uint16_t>& grid) {
  if (n < 1 || n > 8) return false;  // value masks are held in 64-bit words
  const std::size_t order = static_cast<std::size_t>(n) * n;
  if (grid.size() != order * order) return false;
  return units_are_permutations(n, grid);
}

SudokuMatrix compose_sudoku(const std::vector<SPermutationMatrix>& family,
                            const std::vector<int>& labeling) {
  if (family.empty()) {
    throw validation_error("family is empty");
  }
  const int n = family[0].n;
  const std::size_t order = static_cast<std::size_t>(n) * n;
  if (family.size() != order) {
    throw validation_error("family must hold n^2 = " + std::to_string(order) +
                           " matrices, got " + std::to_string(family.size()));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].n != n) {
      throw validation_error("family matrix " + std::to_string(i) +
                             " has mismatched side size");
    }
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!is_disjoint(family[i], family[j])) {
        throw validation_error("family matrices " + std::to_string(i) +
                               " and " + std::to_string(j) +
                               " are not disjoint");
      }
    }
  }
  if (labeling.size() != order) {
    throw validation_error("labeling must hold n^2 values");
  }
  std::uint64_t seen = 0;
  for (int value : labeling) {
    if (value < 1 || static_cast<std::size_t>(value) > order) {
      throw validation_error("labeling value " + std::to_string(value) +
                             " out of {1..n^2}");
    }
    const std::uint64_t bit = std::uint64_t{1} << (value - 1);
    if (seen & bit) {
      throw validation_error("labeling repeats value " +
                             std::to_string(value));
    }
    seen |= bit;
  }

  std::vector<std::uint16_t> grid(order * order, 0);
  for (std::size_t f = 0; f < family.size(); ++f) {
    const auto value = static_cast<std::uint16_t>(labeling[f]);
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        const CellPair& one = family[f].block_one[s * n + t];
        const std::size_t row = static_cast<std::size_t>(s) * n + one.a - 1;
        const std::size_t col = static_cast<std::size_t>(t) * n + one.b - 1;
        grid[row * order + col] = value;
      }
    }
  }
  return SudokuMatrix(n, std::move(grid));
}

std::vector<SPermutationMatrix> decompose_sudoku(const SudokuMatrix& p) {
  const int n = p.n;
  const int order = n * n;
  std::vector<std::vector<CellPair>> ones(
      order, std::vector<CellPair>(static_cast<std::size_t>(n) * n));
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) {
      const int value = p.grid[r * order + c];
      const int block = (r / n) * n + (c / n);
      ones[value - 1][block] = CellPair{static_cast<std::uint8_t>(r % n + 1),
                                        static_cast<std::uint8_t>(c % n + 1)};
    }
  }
  std::vector<SPermutationMatrix> family;
  family.reserve(order);
  for (int value = 0; value < order; ++value) {
    family.emplace_back(n, std::move(ones[value]));
  }
  return family;
}

namespace {

// Backtracking with the most-constrained cell first; candidate values are
// shuffled with a portable Fisher-Yates so the search is identical for a
// given seed on any platform.
struct SudokuSearch {
  int n;
  int order;
  std::uint64_t full;
  std::vector<std::uint16_t> grid;
  std::vector<std::uint64_t> rows, cols, blocks;
  std::mt19937_64& rng;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exceeded = false;

  SudokuSearch(int side, std::mt19937_64& generator, std::uint64_t node_budget)
      : n(side),
        order(side * side),
        full((order == 64) ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << order) - 1),
        grid(static_cast<std::size_t>(order) * order, 0),
        rows(order, 0),
        cols(order, 0),
        blocks(order, 0),
        rng(generator),
        budget(node_budget) {}

  int block_of(int r, int c) const { return (r / n) * n + (c / n); }

  bool solve(int remaining) {
    if (remaining == 0) return true;
    if (++nodes > budget) {
      exceeded = true;
      return false;
    }
    int best_cell = -1;
    int best_count = order + 1;
    std::uint64_t best_allowed = 0;
    for (int cell = 0; cell < order * order; ++cell) {
      if (grid[cell] != 0) continue;
      const int r = cell / order;
      const int c = cell % order;
      const std::uint64_t allowed =
          full & ~(rows[r] | cols[c] | blocks[block_of(r, c)]);
      const int count = std::popcount(allowed);
      if (count == 0) return false;
      if (count < best_count) {
        best_count = count;
        best_cell = cell;
        best_allowed = allowed;
      }
    }

    std::uint16_t candidates[64];
    int total = 0;
    std::uint64_t bits = best_allowed;
    while (bits != 0) {
      candidates[total++] =
          static_cast<std::uint16_t>(std::countr_zero(bits) + 1);
      bits &= bits - 1;
    }
    for (int i = total; i > 1; --i) {
      std::swap(candidates[i - 1], candidates[rng() % i]);
    }

    const int r = best_cell / order;
    const int c = best_cell % order;
    const int b = block_of(r, c);
    for (int i = 0; i < total; ++i) {
      const std::uint16_t value = candidates[i];
      const std::uint64_t bit = std::uint64_t{1} << (value - 1);
      grid[best_cell] = value;
      rows[r] |= bit;
      cols[c] |= bit;
      blocks[b] |= bit;
      if (solve(remaining - 1)) return true;
      grid[best_cell] = 0;
      rows[r] &= ~bit;
      cols[c] &= ~bit;
      blocks[b] &= ~bit;
      if (exceeded) return false;
    }
    return false;
  }
};

}  // namespace

SudokuMatrix random_sudoku(int n, std::uint64_t seed,
                           const SamplerOptions& options) {
  if (n < 1 || n > 8) {
    throw feasibility_error("sampler supports 1 <= n <= 8, got n=" +
                            std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt <= options.max_restarts; ++attempt) {
    SudokuSearch search(n, rng, options.node_budget);
    if (search.solve(n * n * n * n)) {
      return SudokuMatrix(n, std::move(search.grid));
    }
  }
  throw sampling_error("no Sudoku matrix found for n=" + std::to_string(n) +
                       " within " + std::to_string(options.max_restarts + 1) +
                       " attempts of " + std::to_string(options.node_budget) +
                       " nodes each");
}

std::vector<SPermutationMatrix> sample_disjoint_family(
    int n, std::uint64_t seed, const SamplerOptions& options) {
  if (n < 2) {
    throw feasibility_error("disjoint families require n >= 2");
  }
  return decompose_sudoku(random_sudoku(n, seed, options));
}

}  // namespace spm
