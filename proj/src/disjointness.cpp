#include "spm/disjointness.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "spm/parallel.hpp"

namespace spm {

namespace {

void check_oracle_bounds(int n) {
  if (n < 1 || n > 3) {
    throw feasibility_error(
        "exhaustive oracles are supported for n <= 3, got n=" +
        std::to_string(n));
  }
}

// Contiguous fingerprints, `words` 64-bit words per matrix.
std::vector<std::uint64_t> flat_fingerprints(
    const std::vector<SPermutationMatrix>& matrices, std::size_t words) {
  std::vector<std::uint64_t> flat(matrices.size() * words, 0);
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    for (std::size_t w = 0; w < words; ++w) {
      flat[i * words + w] = matrices[i].fingerprint[w];
    }
  }
  return flat;
}

template <std::size_t W>
std::uint64_t disjoint_pairs_above(const std::uint64_t* flat,
                                   std::size_t count, std::size_t begin,
                                   std::size_t end) {
  std::uint64_t hits = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const std::uint64_t* a = flat + i * W;
    for (std::size_t j = i + 1; j < count; ++j) {
      const std::uint64_t* b = flat + j * W;
      std::uint64_t meet = 0;
      for (std::size_t w = 0; w < W; ++w) meet |= a[w] & b[w];
      hits += meet == 0;
    }
  }
  return hits;
}

template <std::size_t W>
void agreement_counts_above(const std::uint64_t* flat, std::size_t count,
                            std::size_t begin, std::size_t end,
                            std::uint64_t* hist) {
  for (std::size_t i = begin; i < end; ++i) {
    const std::uint64_t* a = flat + i * W;
    for (std::size_t j = i + 1; j < count; ++j) {
      const std::uint64_t* b = flat + j * W;
      int agree = 0;
      for (std::size_t w = 0; w < W; ++w) {
        agree += std::popcount(a[w] & b[w]);
      }
      hist[agree] += 2;  // ordered pairs (i,j) and (j,i)
    }
  }
}

std::size_t pick_chunk_count(std::size_t count) {
  return std::max<std::size_t>(1, std::min<std::size_t>(count, 512));
}

}  // namespace

BigInt brute_force_disjoint_count(int n, unsigned jobs) {
  check_oracle_bounds(n);
  const auto matrices = enumerate_sperm(n);
  const std::size_t count = matrices.size();
  const std::size_t words = fingerprint_words(n);
  const auto flat = flat_fingerprints(matrices, words);

  const std::size_t chunk_count = pick_chunk_count(count);
  std::vector<std::uint64_t> partial(chunk_count, 0);
  auto run = [&](auto width_tag) {
    constexpr std::size_t W = decltype(width_tag)::value;
    parallel_chunks(count, jobs, chunk_count,
                    [&](std::size_t c, std::size_t begin, std::size_t end) {
                      partial[c] =
                          disjoint_pairs_above<W>(flat.data(), count, begin,
                                                  end);
                    });
  };
  if (words == 1) {
    run(std::integral_constant<std::size_t, 1>{});
  } else {
    run(std::integral_constant<std::size_t, 2>{});
  }

  std::uint64_t unordered = 0;
  for (std::uint64_t p : partial) unordered += p;
  return BigInt(unordered) * 2;  // disjointness is symmetric and irreflexive
}

std::vector<BigInt> agreement_histogram(int n, unsigned jobs) {
  check_oracle_bounds(n);
  const auto matrices = enumerate_sperm(n);
  const std::size_t count = matrices.size();
  const std::size_t words = fingerprint_words(n);
  const auto flat = flat_fingerprints(matrices, words);
  const std::size_t bins = static_cast<std::size_t>(n) * n + 1;

  const std::size_t chunk_count = pick_chunk_count(count);
  std::vector<std::vector<std::uint64_t>> partial(
      chunk_count, std::vector<std::uint64_t>(bins, 0));
  auto run = [&](auto width_tag) {
    constexpr std::size_t W = decltype(width_tag)::value;
    parallel_chunks(count, jobs, chunk_count,
                    [&](std::size_t c, std::size_t begin, std::size_t end) {
                      agreement_counts_above<W>(flat.data(), count, begin, end,
                                                partial[c].data());
                    });
  };
  if (words == 1) {
    run(std::integral_constant<std::size_t, 1>{});
  } else {
    run(std::integral_constant<std::size_t, 2>{});
  }

  std::vector<BigInt> hist(bins, 0);
  for (const auto& chunk_hist : partial) {
    for (std::size_t m = 0; m < bins; ++m) hist[m] += chunk_hist[m];
  }
  hist[bins - 1] += count;  // the diagonal agrees on every cell
  return hist;
}

BigInt q_from_histogram(const std::vector<BigInt>& hist, int k) {
  BigInt sum = 0;
  for (std::size_t m = 0; m < hist.size(); ++m) {
    sum += binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)) *
           hist[m];
  }
  return sum;
}

DisjointnessGraph build_disjointness_graph(int n, const OracleLimits& limits,
                                           unsigned jobs) {
  check_oracle_bounds(n);
  if (n == 3 && !limits.allow_n3_graph) {
    throw feasibility_error(
        "the n=3 graph holds 46656^2 adjacency bits (~272 MB); pass "
        "allow_n3_graph to build it");
  }
  DisjointnessGraph g;
  g.n = n;
  g.vertices = enumerate_sperm(n);
  const std::size_t count = g.vertices.size();
  g.row_words = (count + 63) / 64;
  g.adjacency.assign(count * g.row_words, 0);

  const std::size_t words = fingerprint_words(n);
  const auto flat = flat_fingerprints(g.vertices, words);

  // Each worker fills complete rows, so writes never collide; every pair is
  // tested twice, which keeps the build race-free without a mirror pass.
  const std::size_t chunk_count = pick_chunk_count(count);
  std::vector<std::uint64_t> degree_partial(chunk_count, 0);
  parallel_chunks(
      count, jobs, chunk_count,
      [&](std::size_t c, std::size_t begin, std::size_t end) {
        std::uint64_t degrees = 0;
        for (std::size_t i = begin; i < end; ++i) {
          const std::uint64_t* a = flat.data() + i * words;
          std::uint64_t* row = g.adjacency.data() + i * g.row_words;
          for (std::size_t j = 0; j < count; ++j) {
            if (j == i) continue;
            const std::uint64_t* b = flat.data() + j * words;
            std::uint64_t meet = 0;
            for (std::size_t w = 0; w < words; ++w) meet |= a[w] & b[w];
            if (meet == 0) {
              row[j / 64] |= std::uint64_t{1} << (j % 64);
              ++degrees;
            }
          }
        }
        degree_partial[c] = degrees;
      });

  std::uint64_t degree_sum = 0;
  for (std::uint64_t p : degree_partial) degree_sum += p;
  g.edge_count = BigInt(degree_sum) / 2;
  return g;
}

namespace {

void check_clique_args(const DisjointnessGraph& g, int size) {
  if (g.n != 2) {
    throw feasibility_error(
        "clique counting is supported on the n=2 graph only");
  }
  if (size < 1) {
    throw validation_error("clique size must be positive");
  }
}

int popcount_row(const std::uint64_t* row, std::size_t words) {
  int bits = 0;
  for (std::size_t w = 0; w < words; ++w) bits += std::popcount(row[w]);
  return bits;
}

// Extends the current clique with vertices from `cand` in ascending order;
// counts (and optionally records) completions of exactly `size` vertices.
struct CliqueSearch {
  const DisjointnessGraph& g;
  int size;
  std::vector<std::vector<std::uint32_t>>* sink = nullptr;
  std::uint64_t hits = 0;
  std::vector<std::uint32_t> path;
  std::vector<std::vector<std::uint64_t>> stack;

  CliqueSearch(const DisjointnessGraph& graph, int clique_size,
               std::vector<std::vector<std::uint32_t>>* record)
      : g(graph), size(clique_size), sink(record) {
    stack.assign(size + 1, std::vector<std::uint64_t>(g.row_words, 0));
  }

  void run() {
    auto& all = stack[0];
    const std::size_t count = g.vertices.size();
    for (std::size_t v = 0; v < count; ++v) {
      all[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    extend(0);
  }

  void extend(int depth) {
    if (depth == size) {
      ++hits;
      if (sink != nullptr) sink->push_back(path);
      return;
    }
    auto& cand = stack[depth];
    if (popcount_row(cand.data(), g.row_words) < size - depth) return;
    std::vector<std::uint64_t> rest = cand;
    for (std::size_t w = 0; w < g.row_words; ++w) {
      while (rest[w] != 0) {
        const int bit = std::countr_zero(rest[w]);
        rest[w] &= rest[w] - 1;
        const std::uint32_t v = static_cast<std::uint32_t>(w * 64 + bit);
        const std::uint64_t* adj = g.adjacency.data() + v * g.row_words;
        // rest now holds exactly the candidates above v (earlier words are
        // already drained), so the child set stays duplicate-free.
        auto& child = stack[depth + 1];
        for (std::size_t x = 0; x < g.row_words; ++x) {
          child[x] = rest[x] & adj[x];
        }
        path.push_back(v);
        extend(depth + 1);
        path.pop_back();
      }
    }
  }
};

}  // namespace

BigInt count_cliques(const DisjointnessGraph& g, int size) {
  check_clique_args(g, size);
  CliqueSearch search(g, size, nullptr);
  search.run();
  return BigInt(search.hits);
}

std::vector<std::vector<std::uint32_t>> list_cliques(
    const DisjointnessGraph& g, int size) {
  check_clique_args(g, size);
  std::vector<std::vector<std::uint32_t>> cliques;
  CliqueSearch search(g, size, &cliques);
  search.run();
  return cliques;
}

}  // namespace spm
