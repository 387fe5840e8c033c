// Brute-force oracles over the full S-permutation matrix space (all-pairs
// fingerprint scans), the disjointness graph with packed adjacency bit-rows,
// and exact clique counting on it.
#pragma once

#include <cstdint>
#include <vector>

#include "spm/pi_matrix.hpp"
#include "spm/types.hpp"

namespace spm {

struct OracleLimits {
  bool allow_n3_graph = false;  // the n=3 graph needs ~272 MB of adjacency
};

// Exact number of ordered disjoint pairs by exhaustive fingerprint AND over
// all (n!)^{2n} matrices. Requires n <= 3. jobs = 0 picks a default
// (SPM_JOBS env var, else hardware concurrency); the result is identical
// for any jobs value.
BigInt brute_force_disjoint_count(int n, unsigned jobs = 0);

// Entry m = number of ordered pairs agreeing on exactly m cells,
// m = 0..n^2. Requires n <= 3.
std::vector<BigInt> agreement_histogram(int n, unsigned jobs = 0);

// sum_m C(m,k) * hist[m]: the histogram-side evaluation of q(n,k).
BigInt q_from_histogram(const std::vector<BigInt>& hist, int k);

struct DisjointnessGraph {
  int n = 0;
  std::vector<SPermutationMatrix> vertices;  // fixed enumeration order
  std::size_t row_words = 0;
  std::vector<std::uint64_t> adjacency;  // packed bit-rows, row-major
  BigInt edge_count;

  bool edge(std::size_t i, std::size_t j) const {
    return (adjacency[i * row_words + j / 64] >> (j % 64)) & 1u;
  }
};

// Vertices = enumerate_sperm(n), edge iff disjoint. n = 2 by default; n = 3
// only with limits.allow_n3_graph.
DisjointnessGraph build_disjointness_graph(int n,
                                           const OracleLimits& limits = {},
                                           unsigned jobs = 0);

// Number of complete subgraphs with exactly `size` vertices (unordered).
// Supported for the n=2 graph only; larger spaces are out of reach and the
// guard is deliberate.
BigInt count_cliques(const DisjointnessGraph& g, int size);

// The cliques themselves, each ascending, list in lexicographic order.
std::vector<std::vector<std::uint32_t>> list_cliques(
    const DisjointnessGraph& g, int size);

}  // namespace spm
