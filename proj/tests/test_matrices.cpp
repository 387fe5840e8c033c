#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "spm/disjointness.hpp"
#include "spm/formulas.hpp"
#include "spm/pi_matrix.hpp"
#include "spm/types.hpp"

using namespace spm;

namespace {

// Oracle: compare the grids cell by cell instead of through fingerprints.
bool disjoint_by_cells(const SPermutationMatrix& x,
                       const SPermutationMatrix& y) {
  for (std::size_t cell = 0; cell < x.block_one.size(); ++cell) {
    if (x.block_one[cell] == y.block_one[cell]) return false;
  }
  return true;
}

bool is_permutation_matrix(const std::vector<std::uint8_t>& dense, int order) {
  for (int r = 0; r < order; ++r) {
    int row_ones = 0;
    int col_ones = 0;
    for (int c = 0; c < order; ++c) {
      row_ones += dense[r * order + c];
      col_ones += dense[c * order + r];
    }
    if (row_ones != 1 || col_ones != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("enumeration sizes match (n!)^{2n}") {
  CHECK(enumerate_pi(1).size() == 1);
  CHECK(enumerate_pi(2).size() == 16);
  CHECK(enumerate_pi(3).size() == 46656);
  CHECK_THROWS_AS(enumerate_pi(4), feasibility_error);
}

TEST_CASE("identity permutations give the transposed-index grid") {
  const std::vector<std::vector<int>> identity2{{0, 1}, {0, 1}};
  const PiMatrix p = pi_from_permutations(identity2, identity2);
  // cell (i,j) = <j+1, i+1>
  CHECK(p.at(0, 0) == CellPair{1, 1});
  CHECK(p.at(0, 1) == CellPair{2, 1});
  CHECK(p.at(1, 0) == CellPair{1, 2});
  CHECK(p.at(1, 1) == CellPair{2, 2});
  const SPermutationMatrix a = pi_to_sperm(p);
  CHECK(is_permutation_matrix(a.to_dense(), 4));
}

TEST_CASE("bijection round trips over the whole space") {
  for (int n = 1; n <= 3; ++n) {
    for (const PiMatrix& p : enumerate_pi(n)) {
      CHECK(sperm_to_pi(pi_to_sperm(p)) == p);
    }
  }
}

TEST_CASE("images are always S-permutation matrices") {
  for (const PiMatrix& p : enumerate_pi(2)) {
    CHECK(is_permutation_matrix(pi_to_sperm(p).to_dense(), 4));
  }
  const auto pi3 = enumerate_pi(3);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const PiMatrix& p = pi3[rng() % pi3.size()];
    CHECK(is_permutation_matrix(pi_to_sperm(p).to_dense(), 9));
  }
}

TEST_CASE("grid validation rejects broken inputs") {
  // repeated first component in a row
  std::vector<CellPair> bad{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  CHECK_THROWS_AS(PiMatrix(2, bad), validation_error);
  CHECK_THROWS_AS(SPermutationMatrix(2, bad), validation_error);
  // out-of-range component
  std::vector<CellPair> oob{{1, 1}, {2, 3}, {2, 2}, {1, 2}};
  CHECK_THROWS_AS(PiMatrix(2, oob), validation_error);
  // wrong cell count
  CHECK_THROWS_AS(PiMatrix(2, std::vector<CellPair>{{1, 1}}),
                  validation_error);
}

TEST_CASE("disjointness agrees with the cellwise oracle") {
  const auto space2 = enumerate_sperm(2);
  for (const auto& x : space2) {
    CHECK_FALSE(is_disjoint(x, x));
    for (const auto& y : space2) {
      CHECK(is_disjoint(x, y) == disjoint_by_cells(x, y));
      CHECK(is_disjoint(x, y) == is_disjoint(y, x));
    }
  }
  const auto space3 = enumerate_sperm(3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20000; ++trial) {
    const auto& x = space3[rng() % space3.size()];
    const auto& y = space3[rng() % space3.size()];
    CHECK(is_disjoint(x, y) == disjoint_by_cells(x, y));
    CHECK(is_disjoint(x, y) == is_disjoint(y, x));
  }
  CHECK_THROWS_AS(is_disjoint(space2[0], space3[0]), std::invalid_argument);
}

TEST_CASE("brute force ordered disjoint count") {
  CHECK(brute_force_disjoint_count(1) == 0);
  CHECK(brute_force_disjoint_count(2) == 112);
  CHECK(brute_force_disjoint_count(2) == disjoint_ordered(2));
  // independent of the worker count
  CHECK(brute_force_disjoint_count(2, 1) == brute_force_disjoint_count(2, 3));
  CHECK_THROWS_AS(brute_force_disjoint_count(4), feasibility_error);
}

TEST_CASE("agreement histogram for n=2") {
  const auto hist = agreement_histogram(2);
  REQUIRE(hist.size() == 5);
  // frozen from an independent exhaustive scan; a pair agrees on cell (i,j)
  // iff row permutation i and column permutation j both coincide
  const std::vector<BigInt> expected{112, 64, 64, 0, 16};
  CHECK(hist == expected);
  CHECK(hist[0] == brute_force_disjoint_count(2));
  CHECK(hist[4] == 16);  // only identical pairs agree everywhere
  BigInt total = 0;
  for (const BigInt& h : hist) total += h;
  CHECK(total == 256);  // all ordered pairs
  for (int k = 0; k <= 4; ++k) {
    CHECK(q_from_histogram(hist, k) == q_count(2, k));
  }
  const auto hist_serial = agreement_histogram(2, 1);
  CHECK(hist == hist_serial);
}

TEST_CASE("disjointness graph at n=2") {
  const DisjointnessGraph g = build_disjointness_graph(2);
  REQUIRE(g.vertices.size() == 16);
  CHECK(g.row_words == 1);
  CHECK(g.edge_count == 56);
  CHECK(g.edge_count == disjoint_unordered(2));
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK_FALSE(g.edge(i, i));
    for (std::size_t j = 0; j < 16; ++j) {
      CHECK(g.edge(i, j) == g.edge(j, i));
      if (i != j) {
        CHECK(g.edge(i, j) == is_disjoint(g.vertices[i], g.vertices[j]));
      }
    }
  }
}

TEST_CASE("the n=3 graph is opt-in") {
  CHECK_THROWS_AS(build_disjointness_graph(3), feasibility_error);
}

TEST_CASE("clique counting on the n=2 graph") {
  const DisjointnessGraph g = build_disjointness_graph(2);
  CHECK(count_cliques(g, 1) == 16);                      // vertices
  CHECK(count_cliques(g, 2) == g.edge_count);            // edges
  CHECK(count_cliques(g, 4) == 12);
  CHECK(count_cliques(g, 4) * factorial(4) == 288);      // sigma_2

  const auto cliques = list_cliques(g, 4);
  REQUIRE(cliques.size() == 12);
  std::vector<std::uint32_t> previous;
  for (const auto& clique : cliques) {
    REQUIRE(clique.size() == 4);
    CHECK(std::is_sorted(clique.begin(), clique.end()));
    CHECK(std::adjacent_find(clique.begin(), clique.end()) == clique.end());
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        CHECK(is_disjoint(g.vertices[clique[i]], g.vertices[clique[j]]));
      }
    }
    if (!previous.empty()) CHECK(previous < clique);
    previous = clique;
  }

  CHECK_THROWS_AS(count_cliques(g, 0), validation_error);
  const DisjointnessGraph g1 = build_disjointness_graph(1);
  CHECK_THROWS_AS(count_cliques(g1, 1), feasibility_error);
}
