// Bipartite graphs with labeled sides R and C of equal size n, carried as an
// n^2-bit biadjacency mask, plus enumeration of isomorphism-class
// representatives and the per-graph statistics the counting formulas need.
//
// Bit convention: bit (r*n + c) of `edges` is set iff <r,c> is an edge,
// rows r and columns c 0-indexed. Isomorphism relabels the two sides
// independently (rho on R, sigma on C); sides are never swapped.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "spm/types.hpp"

namespace spm {

inline constexpr int kMaxSide = 5;        // mask must fit 25 bits
inline constexpr int kGuaranteedSide = 4; // n=5 is opt-in (heavy)

struct BipartiteGraph {
  int n = 0;
  std::uint32_t edges = 0;

  BipartiteGraph() = default;
  // Throws validation_error if n is out of [1, kMaxSide] or mask has bits
  // beyond n^2.
  BipartiteGraph(int side, std::uint32_t mask);

  int edge_count() const;
  bool has_edge(int r, int c) const { return (edges >> (r * n + c)) & 1u; }
  // n-bit pattern of row r (bit c set iff edge <r,c>).
  std::uint32_t row_bits(int r) const {
    return (edges >> (r * n)) & ((1u << n) - 1u);
  }
  // n-bit pattern of column c (bit r set iff edge <r,c>).
  std::uint32_t col_bits(int c) const;

  friend auto operator<=>(const BipartiteGraph&,
                          const BipartiteGraph&) = default;
};

// psi[i] = number of vertices (both sides, 2n total) of degree exactly i,
// i = 0..n.
struct DegreeProfile {
  std::vector<int> psi;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

// Sizes of the neighborhood-equality classes, ascending. Isolated vertices
// form one class per side. Sum is 2n.
struct ClassMultiset {
  std::vector<int> deltas;

  friend bool operator==(const ClassMultiset&, const ClassMultiset&) = default;
};

struct EnumerationLimits {
  bool allow_n5 = false;  // opt-in for the 2^25-mask scan
};

// Canonical representative of g's isomorphism class: the numerically
// smallest mask over all row/column relabelings. Idempotent; two graphs are
// isomorphic iff their canonical forms are bit-identical.
BipartiteGraph canonical_form(const BipartiteGraph& g);

// Throws std::invalid_argument when the graphs have different n.
bool is_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b);

// g relabeled by rho on rows and sigma on columns (0-based images). Test and
// oracle helper; also used by property suites.
BipartiteGraph relabel(const BipartiteGraph& g, const std::vector<int>& rho,
                       const std::vector<int>& sigma);

// Exactly one canonical representative per isomorphism class of graphs with
// side n and k edges, sorted by mask. Deterministic. Requires 2 <= n <= 4,
// or n = 5 with limits.allow_n5; 0 <= k <= n^2.
std::vector<BipartiteGraph> enumerate_class_reps(
    int n, int k, const EnumerationLimits& limits = {});

// Entry k = |G_{n,k}| for k = 0..n^2.
std::vector<std::size_t> graph_count_table(
    int n, const EnumerationLimits& limits = {});

DegreeProfile degree_profile(const BipartiteGraph& g);
ClassMultiset neighborhood_classes(const BipartiteGraph& g);

// Order of g's two-sided relabeling stabilizer. Always a multiple of the
// product of class-size factorials; strictly larger when the graph has
// symmetries that move whole neighborhoods (e.g. a diagonal pair or a cycle).
std::uint64_t automorphism_count(const BipartiteGraph& g);

// Number of distinct labeled biadjacency matrices in g's class:
// (n!)^2 / automorphism_count(g) by orbit-stabilizer. This is the
// multiplicity every labeled-count formula needs.
BigInt labeled_class_size(const BipartiteGraph& g);

}  // namespace spm
