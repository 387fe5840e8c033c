#include "spm/bipartite_graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "spm/types.hpp"

namespace spm {

namespace {

// Per-side-size tables: all permutations of {0..n-1} in lex order and, for
// each, the induced map on n-bit patterns. Built once per n.
struct PermTables {
  int n = 0;
  std::vector<std::array<std::uint8_t, kMaxSide>> perms;
  // pattern_map[p][pat] = pattern with bit c moved to bit perms[p][c]
  std::vector<std::array<std::uint32_t, 32>> pattern_map;
};

const PermTables& perm_tables(int n) {
  static const std::array<PermTables, kMaxSide + 1> tables = [] {
    std::array<PermTables, kMaxSide + 1> all{};
    for (int n = 1; n <= kMaxSide; ++n) {
      PermTables t;
      t.n = n;
      std::array<std::uint8_t, kMaxSide> p{};
      for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
      do {
        t.perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.begin() + n));
      t.pattern_map.resize(t.perms.size());
      const std::uint32_t patterns = 1u << n;
      for (std::size_t pi = 0; pi < t.perms.size(); ++pi) {
        for (std::uint32_t pat = 0; pat < patterns; ++pat) {
          std::uint32_t out = 0;
          for (int c = 0; c < n; ++c) {
            if ((pat >> c) & 1u) out |= 1u << t.perms[pi][c];
          }
          t.pattern_map[pi][pat] = out;
        }
      }
      all[n] = std::move(t);
    }
    return all;
  }();
  return tables[n];
}

// Minimum mask over all relabelings: for each column permutation, the best
// row assignment places the largest row pattern at row 0 (rows carry
// increasing bit weight), i.e. sorts the permuted rows non-increasing.
std::uint32_t canonical_mask(int n, std::uint32_t mask) {
  const PermTables& t = perm_tables(n);
  std::array<std::uint32_t, kMaxSide> rows{};
  const std::uint32_t row_mask = (1u << n) - 1u;
  for (int r = 0; r < n; ++r) rows[r] = (mask >> (r * n)) & row_mask;

  std::uint32_t best = ~0u;
  for (const auto& map : t.pattern_map) {
    std::array<std::uint32_t, kMaxSide> permuted{};
    for (int r = 0; r < n; ++r) permuted[r] = map[rows[r]];
    std::sort(permuted.begin(), permuted.begin() + n,
              std::greater<std::uint32_t>());
    std::uint32_t value = 0;
    for (int r = 0; r < n; ++r) value |= permuted[r] << (r * n);
    best = std::min(best, value);
  }
  return best;
}

bool rows_non_increasing(int n, std::uint32_t mask) {
  const std::uint32_t row_mask = (1u << n) - 1u;
  std::uint32_t prev = (mask >> 0) & row_mask;
  for (int r = 1; r < n; ++r) {
    const std::uint32_t cur = (mask >> (r * n)) & row_mask;
    if (cur > prev) return false;
    prev = cur;
  }
  return true;
}

void check_enumeration_bounds(int n, int k, const EnumerationLimits& limits) {
  if (n < 2 || n > kMaxSide) {
    throw feasibility_error("side size must be in [2, " +
                            std::to_string(kMaxSide) +
                            "], got n=" + std::to_string(n));
  }
  if (n > kGuaranteedSide && !limits.allow_n5) {
    throw feasibility_error(
        "n=5 enumeration scans 2^25 masks and is opt-in (allow_n5)");
  }
  if (k < 0 || k > n * n) {
    throw feasibility_error("edge count k=" + std::to_string(k) +
                            " out of [0, n^2] for n=" + std::to_string(n));
  }
}

}  // namespace

BipartiteGraph::BipartiteGraph(int side, std::uint32_t mask)
    : n(side), edges(mask) {
  if (side < 1 || side > kMaxSide) {
    throw validation_error("side size must be in [1, " +
                           std::to_string(kMaxSide) + "], got " +
                           std::to_string(side));
  }
  const int bits = side * side;
  if (bits < 32 && (mask >> bits) != 0) {
    throw validation_error("biadjacency mask has bits beyond n^2");
  }
}

int BipartiteGraph::edge_count() const { return std::popcount(edges); }

std::uint32_t BipartiteGraph::col_bits(int c) const {
  std::uint32_t out = 0;
  for (int r = 0; r < n; ++r) {
    if (has_edge(r, c)) out |= 1u << r;
  }
  return out;
}

BipartiteGraph canonical_form(const BipartiteGraph& g) {
  return BipartiteGraph(g.n, canonical_mask(g.n, g.edges));
}

bool is_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.n != b.n) {
    throw std::invalid_argument(
        "graphs with different side sizes are incomparable");
  }
  return canonical_mask(a.n, a.edges) == canonical_mask(b.n, b.edges);
}

BipartiteGraph relabel(const BipartiteGraph& g, const std::vector<int>& rho,
                       const std::vector<int>& sigma) {
  if (static_cast<int>(rho.size()) != g.n ||
      static_cast<int>(sigma.size()) != g.n) {
    throw validation_error("relabeling permutations must have length n");
  }
  std::uint32_t out = 0;
  for (int r = 0; r < g.n; ++r) {
    for (int c = 0; c < g.n; ++c) {
      if (g.has_edge(r, c)) out |= 1u << (rho[r] * g.n + sigma[c]);
    }
  }
  return BipartiteGraph(g.n, out);
}

std::vector<BipartiteGraph> enumerate_class_reps(
    int n, int k, const EnumerationLimits& limits) {
  check_enumeration_bounds(n, k, limits);
  std::vector<BipartiteGraph> reps;
  if (k == 0) {
    reps.emplace_back(n, 0u);
    return reps;
  }
  const int bits = n * n;
  const std::uint32_t limit = 1u << bits;
  // Gosper's hack: masks with popcount k in ascending order, so the output
  // is sorted without an extra pass.
  std::uint32_t mask = (1u << k) - 1u;
  while (mask < limit) {
    if (rows_non_increasing(n, mask) && canonical_mask(n, mask) == mask) {
      reps.emplace_back(n, mask);
    }
    const std::uint32_t low = mask & (0u - mask);
    const std::uint32_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  return reps;
}

std::vector<std::size_t> graph_count_table(int n,
                                           const EnumerationLimits& limits) {
  std::vector<std::size_t> table;
  table.reserve(n * n + 1);
  for (int k = 0; k <= n * n; ++k) {
    table.push_back(enumerate_class_reps(n, k, limits).size());
  }
  return table;
}

DegreeProfile degree_profile(const BipartiteGraph& g) {
  DegreeProfile profile;
  profile.psi.assign(g.n + 1, 0);
  for (int r = 0; r < g.n; ++r) {
    ++profile.psi[std::popcount(g.row_bits(r))];
  }
  for (int c = 0; c < g.n; ++c) {
    ++profile.psi[std::popcount(g.col_bits(c))];
  }
  return profile;
}

ClassMultiset neighborhood_classes(const BipartiteGraph& g) {
  // Vertices with equal neighborhoods share their side's bit pattern;
  // isolated vertices (pattern 0) collapse into one class per side.
  ClassMultiset classes;
  std::map<std::uint32_t, int> row_classes;
  std::map<std::uint32_t, int> col_classes;
  for (int r = 0; r < g.n; ++r) ++row_classes[g.row_bits(r)];
  for (int c = 0; c < g.n; ++c) ++col_classes[g.col_bits(c)];
  for (const auto& [pattern, size] : row_classes) {
    classes.deltas.push_back(size);
  }
  for (const auto& [pattern, size] : col_classes) {
    classes.deltas.push_back(size);
  }
  std::sort(classes.deltas.begin(), classes.deltas.end());
  return classes;
}

std::uint64_t automorphism_count(const BipartiteGraph& g) {
  // (rho, sigma) fixes g iff sigma maps the row-pattern multiset onto
  // itself, and then the valid rho are exactly the permutations matching
  // equal rows: their count is the product of row-multiplicity factorials.
  const PermTables& t = perm_tables(g.n);
  std::array<std::uint32_t, kMaxSide> rows{};
  for (int r = 0; r < g.n; ++r) rows[r] = g.row_bits(r);

  std::array<std::uint32_t, kMaxSide> sorted_rows = rows;
  std::sort(sorted_rows.begin(), sorted_rows.begin() + g.n);
  std::uint64_t matchings = 1;
  for (int r = 0; r < g.n;) {
    int run = 1;
    while (r + run < g.n && sorted_rows[r + run] == sorted_rows[r]) ++run;
    for (int i = 2; i <= run; ++i) matchings *= i;
    r += run;
  }

  std::uint64_t total = 0;
  for (const auto& map : t.pattern_map) {
    std::array<std::uint32_t, kMaxSide> permuted{};
    for (int r = 0; r < g.n; ++r) permuted[r] = map[rows[r]];
    std::sort(permuted.begin(), permuted.begin() + g.n);
    if (permuted == sorted_rows) total += matchings;
  }
  return total;
}

BigInt labeled_class_size(const BipartiteGraph& g) {
  const BigInt group_order = ipow(factorial(g.n), 2);
  const std::uint64_t stabilizer = automorphism_count(g);
  if (group_order % stabilizer != 0) {
    throw verification_error("stabilizer order does not divide (n!)^2");
  }
  return group_order / stabilizer;
}

}  // namespace spm
