// Counting formulas over the bipartite-graph classes, all in exact
// arithmetic: the per-graph characteristic omega and its per-k sum theta,
// the labeled-class counts b/q, the ordered/unordered disjoint-pair counts
// D and d (computed along two algebraically equivalent routes that must
// agree), and the Sudoku-count relation z = sigma / (n^2)!.
//
// Note on weights: omega/theta are normalized by the neighborhood-class
// factorials prod(delta!), which only accounts for symmetries exchanging
// equal-neighborhood vertices. Counting labeled objects needs the full
// two-sided stabilizer: classes like a diagonal pair or a cycle have extra
// mixed symmetries, so b/q/D are weighted by labeled_class_size(g) =
// (n!)^2/|Aut(g)| instead. The exhaustive oracles in the matrices module
// pin this down: with prod(delta!) weights the pair counts come out wrong
// (e.g. 144 instead of 112 ordered disjoint pairs at n=2).
#pragma once

#include <cstddef>
#include <vector>

#include "spm/bipartite_graph.hpp"
#include "spm/types.hpp"

namespace spm {

// omega(g) = prod_{i=0..n-2} [(n-i)!]^{psi_i} / prod_{delta in [g]} delta!.
// Isomorphism-invariant, exact, lowest terms.
Rational omega(const BipartiteGraph& g);

// theta(n,k) = sum of omega over the class representatives of G_{n,k}.
Rational theta(int n, int k, const EnumerationLimits& limits = {});

// Number of n x n binary matrices with exactly k ones, evaluated as the sum
// of labeled class sizes over G_{n,k}. Must equal C(n^2,k); the identity
// doubles as an end-to-end check of the enumeration and stabilizer code.
BigInt b_count(int n, int k, const EnumerationLimits& limits = {});

// true iff b_count(n,k) == C(n^2,k) for every k = 0..n^2.
bool binomial_identity_check(int n, const EnumerationLimits& limits = {});

// q(n,k) = (n!)^{2n} * sum_g labeled_class_size(g) * prod_v (n-|gamma(v)|)!:
// ordered pairs carrying a designated k-subset of coinciding cells. These
// are the inclusion-exclusion terms for the disjoint-pair count.
BigInt q_count(int n, int k, const EnumerationLimits& limits = {});

// |Sigma_{n^2}| = (n!)^{2n}.
BigInt s_perm_count(int n);

// The two evaluation routes for the ordered disjoint-pair count D. The first
// weights each graph by its vertex-neighborhood factorials, the second by
// the degree-profile exponents (degrees n-1 and n contribute factor 1 and
// are skipped). disjoint_ordered computes both and requires bit-identical
// results, a nonnegative even value. Requires n >= 2.
BigInt disjoint_ordered_by_neighborhoods(int n,
                                         const EnumerationLimits& limits = {});
BigInt disjoint_ordered_by_profile(int n, const EnumerationLimits& limits = {});
BigInt disjoint_ordered(int n, const EnumerationLimits& limits = {});

// d = D/2; throws verification_error if D is odd.
BigInt disjoint_unordered(int n, const EnumerationLimits& limits = {});

// z_n = sigma / (n^2)!; throws verification_error unless the division is
// exact.
BigInt z_from_sigma(const BigInt& sigma, int n);

struct ThetaRow {
  int k = 0;
  std::size_t class_count = 0;
  Rational theta;
};

// Rows k = 0..n^2 of (k, |G_{n,k}|, theta(n,k)).
std::vector<ThetaRow> theta_table(int n, const EnumerationLimits& limits = {});

struct CountRow {
  int k = 0;
  std::size_t class_count = 0;
  Rational theta;  // reported characteristic
  BigInt q;        // coincidence count entering the alternating sum
};

struct CountReport {
  int n = 0;
  std::vector<CountRow> per_k;
  BigInt ordered_pairs;    // D = sum (-1)^k q(n,k), auditable from per_k
  BigInt unordered_pairs;  // d = D/2
  bool dual_path_ok = false;
};

CountReport count_report(int n, const EnumerationLimits& limits = {});

}  // namespace spm
