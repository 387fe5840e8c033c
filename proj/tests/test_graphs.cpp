#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "spm/bipartite_graph.hpp"
#include "spm/types.hpp"

using namespace spm;

namespace {

// Independent oracle: materialize the whole relabeling orbit with plain
// double loops and take set minima / membership. No shared code with the
// library's canonicalization.
std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

std::uint32_t relabel_mask(int n, std::uint32_t mask,
                           const std::vector<int>& rho,
                           const std::vector<int>& sigma) {
  std::uint32_t out = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if ((mask >> (r * n + c)) & 1u) out |= 1u << (rho[r] * n + sigma[c]);
    }
  }
  return out;
}

std::set<std::uint32_t> orbit_of(int n, std::uint32_t mask) {
  std::set<std::uint32_t> orbit;
  const auto perms = all_perms(n);
  for (const auto& rho : perms) {
    for (const auto& sigma : perms) {
      orbit.insert(relabel_mask(n, mask, rho, sigma));
    }
  }
  return orbit;
}

std::uint32_t orbit_min(int n, std::uint32_t mask) {
  return *orbit_of(n, mask).begin();
}

}  // namespace

TEST_CASE("canonical form fixed points and single edge") {
  for (int n = 2; n <= 3; ++n) {
    const BipartiteGraph empty(n, 0);
    CHECK(canonical_form(empty) == empty);
    const BipartiteGraph complete(n, (1u << (n * n)) - 1u);
    CHECK(canonical_form(complete) == complete);
  }
  // single edge at (r=1,c=1) maps to the single edge at (0,0)
  const BipartiteGraph g(2, 1u << 3);
  CHECK(canonical_form(g).edges == 1u);
}

TEST_CASE("canonical form matches the orbit-minimum oracle exhaustively") {
  for (int n = 2; n <= 3; ++n) {
    const std::uint32_t limit = 1u << (n * n);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      const BipartiteGraph g(n, mask);
      const BipartiteGraph canon = canonical_form(g);
      CHECK(canon.edges == orbit_min(n, mask));
      CHECK(canonical_form(canon) == canon);  // idempotent
    }
  }
}

TEST_CASE("canonical form is invariant under every relabeling") {
  for (int n = 2; n <= 3; ++n) {
    const auto perms = all_perms(n);
    const std::uint32_t limit = 1u << (n * n);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      const BipartiteGraph g(n, mask);
      const std::uint32_t canon = canonical_form(g).edges;
      for (const auto& rho : perms) {
        for (const auto& sigma : perms) {
          CHECK(canonical_form(relabel(g, rho, sigma)).edges == canon);
        }
      }
    }
  }
}

TEST_CASE("isomorphism agrees with orbit membership on all n=2 pairs") {
  for (std::uint32_t a = 0; a < 16; ++a) {
    const auto orbit = orbit_of(2, a);
    for (std::uint32_t b = 0; b < 16; ++b) {
      CHECK(is_isomorphic(BipartiteGraph(2, a), BipartiteGraph(2, b)) ==
            (orbit.count(b) > 0));
    }
  }
}

TEST_CASE("isomorphism basics") {
  // identical graphs, and a row swap
  const BipartiteGraph g(3, 0b000'011'101);
  CHECK(is_isomorphic(g, g));
  const auto perms = all_perms(3);
  CHECK(is_isomorphic(g, relabel(g, perms[1], perms[0])));

  // two edges in one row vs. two edges in one column: sides are
  // distinguished, so these are NOT isomorphic
  const BipartiteGraph row_pair(2, 0b0011);
  const BipartiteGraph col_pair(2, 0b0101);
  CHECK_FALSE(is_isomorphic(row_pair, col_pair));

  CHECK_THROWS_AS(is_isomorphic(BipartiteGraph(2, 0), BipartiteGraph(3, 0)),
                  std::invalid_argument);
}

TEST_CASE("class enumeration: pinned counts") {
  CHECK(enumerate_class_reps(3, 6).size() == 6);  // the six-graph family
  for (int n = 2; n <= 4; ++n) {
    CHECK(enumerate_class_reps(n, 0).size() == 1);
  }
  // n=2, k=2: same-row pair, same-column pair, diagonal pair
  const auto reps22 = enumerate_class_reps(2, 2);
  REQUIRE(reps22.size() == 3);
  CHECK(reps22[0].edges == 0b0011);
  CHECK(reps22[1].edges == 0b0101);
  CHECK(reps22[2].edges == 0b0110);
}

TEST_CASE("class enumeration agrees with orbit partition at n=2 and n=3") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k <= n * n; ++k) {
      // oracle: partition all masks of popcount k into orbits
      std::set<std::uint32_t> mins;
      const std::uint32_t limit = 1u << (n * n);
      for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (std::popcount(mask) == k) mins.insert(orbit_min(n, mask));
      }
      const auto reps = enumerate_class_reps(n, k);
      REQUIRE(reps.size() == mins.size());
      std::size_t i = 0;
      for (std::uint32_t m : mins) CHECK(reps[i++].edges == m);
    }
  }
}

TEST_CASE("representatives are self-canonical and sorted") {
  for (int k = 0; k <= 16; ++k) {
    const auto reps = enumerate_class_reps(4, k);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(canonical_form(reps[i]) == reps[i]);
      CHECK(reps[i].edge_count() == k);
      if (i > 0) CHECK(reps[i - 1].edges < reps[i].edges);
    }
  }
}

TEST_CASE("count table values and complement symmetry") {
  const auto table2 = graph_count_table(2);
  CHECK(table2 == std::vector<std::size_t>{1, 1, 3, 1, 1});
  const auto table3 = graph_count_table(3);
  CHECK(table3[0] == 1);
  CHECK(table3[6] == 6);
  for (int n = 2; n <= 3; ++n) {
    const auto table = graph_count_table(n);
    for (int k = 0; k <= n * n; ++k) {
      CHECK(table[k] == table[n * n - k]);
    }
  }
}

TEST_CASE("degree profiles match the worked six-graph family") {
  // multiset of psi across G_{3,6}: <0,0,6,0>, <0,1,4,1> x2, <0,2,2,2>,
  // <1,0,3,2> x2, and the paired class multisets
  std::map<std::vector<int>, int> psi_hist;
  std::map<std::vector<int>, int> delta_hist;
  std::map<std::vector<int>, std::set<std::vector<int>>> psi_to_deltas;
  for (const auto& g : enumerate_class_reps(3, 6)) {
    const auto profile = degree_profile(g);
    const auto classes = neighborhood_classes(g);
    ++psi_hist[profile.psi];
    ++delta_hist[classes.deltas];
    psi_to_deltas[profile.psi].insert(classes.deltas);
  }
  CHECK(psi_hist == std::map<std::vector<int>, int>{{{0, 0, 6, 0}, 1},
                                                    {{0, 1, 4, 1}, 2},
                                                    {{0, 2, 2, 2}, 1},
                                                    {{1, 0, 3, 2}, 2}});
  CHECK(delta_hist ==
        std::map<std::vector<int>, int>{{{1, 1, 1, 1, 1, 1}, 2},
                                        {{1, 1, 1, 1, 2}, 2},
                                        {{1, 2, 3}, 2}});
  CHECK(psi_to_deltas[{0, 0, 6, 0}] ==
        std::set<std::vector<int>>{{1, 1, 1, 1, 1, 1}});
  CHECK(psi_to_deltas[{0, 2, 2, 2}] ==
        std::set<std::vector<int>>{{1, 1, 1, 1, 1, 1}});
  CHECK(psi_to_deltas[{1, 0, 3, 2}] == std::set<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("degree profile and classes on degenerate graphs") {
  CHECK(degree_profile(BipartiteGraph(3, 0)).psi ==
        std::vector<int>{6, 0, 0, 0});
  CHECK(neighborhood_classes(BipartiteGraph(2, 0)).deltas ==
        std::vector<int>{2, 2});
  // complete graph: one class per side
  CHECK(neighborhood_classes(BipartiteGraph(3, (1u << 9) - 1)).deltas ==
        std::vector<int>{3, 3});
}

TEST_CASE("profile and class invariants over every representative") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k <= n * n; ++k) {
      for (const auto& g : enumerate_class_reps(n, k)) {
        const auto profile = degree_profile(g);
        const auto classes = neighborhood_classes(g);
        int vertex_sum = 0;
        int degree_sum = 0;
        for (int i = 0; i <= n; ++i) {
          vertex_sum += profile.psi[i];
          degree_sum += i * profile.psi[i];
        }
        CHECK(vertex_sum == 2 * n);
        CHECK(degree_sum == 2 * k);
        CHECK(std::accumulate(classes.deltas.begin(), classes.deltas.end(),
                              0) == 2 * n);
        CHECK(classes.deltas.size() >= 2);
        CHECK(classes.deltas.size() <= 2 * static_cast<std::size_t>(n));
        for (int delta : classes.deltas) {
          CHECK(delta >= 1);
          CHECK(delta <= n);
        }
      }
    }
  }
}

TEST_CASE("stabilizer order and labeled class size match the orbit oracle") {
  for (int n = 2; n <= 3; ++n) {
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    const std::uint64_t group = fact * fact;
    const std::uint32_t limit = 1u << (n * n);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      const BipartiteGraph g(n, mask);
      const std::uint64_t orbit = orbit_of(n, mask).size();
      CHECK(automorphism_count(g) * orbit == group);
      CHECK(labeled_class_size(g) == BigInt(orbit));
    }
  }
}

TEST_CASE("pinned stabilizer orders") {
  CHECK(automorphism_count(BipartiteGraph(2, 0)) == 4);        // empty
  CHECK(automorphism_count(BipartiteGraph(2, 0xf)) == 4);      // complete
  CHECK(automorphism_count(BipartiteGraph(2, 0b0110)) == 2);   // diagonal
  CHECK(automorphism_count(BipartiteGraph(2, 0b0001)) == 1);   // single edge
  // complement of a perfect matching: rows {110, 101, 011}; its class holds
  // exactly the 6 complements of permutation matrices
  const BipartiteGraph cycle(3, 6u | (5u << 3) | (3u << 6));
  CHECK(automorphism_count(cycle) == 6);
  CHECK(labeled_class_size(cycle) == 6);
}

TEST_CASE("bounds and validation errors") {
  CHECK_THROWS_AS(enumerate_class_reps(1, 0), feasibility_error);
  CHECK_THROWS_AS(enumerate_class_reps(6, 0), feasibility_error);
  CHECK_THROWS_AS(enumerate_class_reps(5, 0), feasibility_error);
  CHECK_THROWS_AS(enumerate_class_reps(2, 5), feasibility_error);
  CHECK_THROWS_AS(enumerate_class_reps(2, -1), feasibility_error);
  CHECK_THROWS_AS(BipartiteGraph(2, 0x10), validation_error);
  CHECK_THROWS_AS(BipartiteGraph(0, 0), validation_error);

  EnumerationLimits heavy;
  heavy.allow_n5 = true;
  CHECK(enumerate_class_reps(5, 0, heavy).size() == 1);
  CHECK(enumerate_class_reps(5, 1, heavy).size() == 1);
}
