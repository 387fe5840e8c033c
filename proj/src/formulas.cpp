#include "spm/formulas.hpp"

#include <bit>
#include <string>

#include "spm/types.hpp"

namespace spm {

namespace {

void check_n_at_least(int n, int minimum) {
  if (n < minimum) {
    throw feasibility_error("side size n=" + std::to_string(n) +
                            " below supported minimum " +
                            std::to_string(minimum));
  }
}

// prod over all 2n vertices of (n - degree)!: the number of ways to extend
// a fixed agreement pattern to a full matrix pair, per labeled matrix.
BigInt neighborhood_factorial_product(const BipartiteGraph& g) {
  BigInt product = 1;
  for (int r = 0; r < g.n; ++r) {
    product *= factorial(g.n - std::popcount(g.row_bits(r)));
  }
  for (int c = 0; c < g.n; ++c) {
    product *= factorial(g.n - std::popcount(g.col_bits(c)));
  }
  return product;
}

// Same product evaluated through the degree profile; degrees n-1 and n
// contribute factor 1 and are skipped. Kept as a second route so the two
// evaluations can cross-check each other.
BigInt profile_factorial_product(const BipartiteGraph& g) {
  const DegreeProfile profile = degree_profile(g);
  BigInt product = 1;
  for (int i = 0; i + 2 <= g.n; ++i) {
    product *= ipow(factorial(g.n - i), static_cast<unsigned>(profile.psi[i]));
  }
  return product;
}

BigInt class_factorial_product(const BipartiteGraph& g) {
  BigInt product = 1;
  for (int delta : neighborhood_classes(g).deltas) product *= factorial(delta);
  return product;
}

// sum over classes of (#labeled matrices in the class) * weight(g).
template <typename Weight>
BigInt labeled_weighted_sum(int n, int k, const EnumerationLimits& limits,
                            Weight&& weight) {
  BigInt sum = 0;
  for (const BipartiteGraph& g : enumerate_class_reps(n, k, limits)) {
    sum += labeled_class_size(g) * weight(g);
  }
  return sum;
}

// D = (n!)^{4n} + sum_{k>=1} (-1)^k q(n,k), with q's per-class numerator
// supplied by the caller.
template <typename Numerator>
BigInt disjoint_via(int n, const EnumerationLimits& limits,
                    Numerator&& numerator) {
  check_n_at_least(n, 2);
  BigInt total = ipow(factorial(n), 4 * n);
  const BigInt space = ipow(factorial(n), 2 * n);
  for (int k = 1; k <= n * n; ++k) {
    const BigInt q = space * labeled_weighted_sum(n, k, limits, numerator);
    total += (k % 2 == 0) ? q : -q;
  }
  return total;
}

}  // namespace

Rational omega(const BipartiteGraph& g) {
  return Rational(profile_factorial_product(g)) /
         Rational(class_factorial_product(g));
}

Rational theta(int n, int k, const EnumerationLimits& limits) {
  Rational sum = 0;
  for (const BipartiteGraph& g : enumerate_class_reps(n, k, limits)) {
    sum += omega(g);
  }
  return sum;
}

BigInt b_count(int n, int k, const EnumerationLimits& limits) {
  return labeled_weighted_sum(n, k, limits,
                              [](const BipartiteGraph&) { return BigInt(1); });
}

bool binomial_identity_check(int n, const EnumerationLimits& limits) {
  for (int k = 0; k <= n * n; ++k) {
    if (b_count(n, k, limits) != binomial(n * n, k)) return false;
  }
  return true;
}

BigInt q_count(int n, int k, const EnumerationLimits& limits) {
  return ipow(factorial(n), 2 * n) *
         labeled_weighted_sum(n, k, limits, neighborhood_factorial_product);
}

BigInt s_perm_count(int n) {
  check_n_at_least(n, 1);
  return ipow(factorial(n), 2 * n);
}

BigInt disjoint_ordered_by_neighborhoods(int n,
                                         const EnumerationLimits& limits) {
  return disjoint_via(n, limits, neighborhood_factorial_product);
}

BigInt disjoint_ordered_by_profile(int n, const EnumerationLimits& limits) {
  return disjoint_via(n, limits, profile_factorial_product);
}

BigInt disjoint_ordered(int n, const EnumerationLimits& limits) {
  const BigInt via_neighborhoods = disjoint_ordered_by_neighborhoods(n, limits);
  const BigInt via_profile = disjoint_ordered_by_profile(n, limits);
  if (via_neighborhoods != via_profile) {
    throw verification_error(
        "disjoint-pair evaluation routes disagree: neighborhoods=" +
        via_neighborhoods.str() + " profile=" + via_profile.str());
  }
  if (via_profile < 0 || via_profile % 2 != 0) {
    throw verification_error("ordered disjoint-pair count must be even and "
                             "nonnegative, got " +
                             via_profile.str());
  }
  return via_profile;
}

BigInt disjoint_unordered(int n, const EnumerationLimits& limits) {
  const BigInt ordered = disjoint_ordered(n, limits);
  if (ordered % 2 != 0) {
    throw verification_error("ordered count is odd: " + ordered.str());
  }
  return ordered / 2;
}

BigInt z_from_sigma(const BigInt& sigma, int n) {
  check_n_at_least(n, 1);
  const BigInt cell_perms = factorial(static_cast<unsigned>(n) * n);
  if (sigma % cell_perms != 0) {
    throw verification_error("sigma=" + sigma.str() +
                             " is not divisible by (n^2)! = " +
                             cell_perms.str());
  }
  return sigma / cell_perms;
}

std::vector<ThetaRow> theta_table(int n, const EnumerationLimits& limits) {
  std::vector<ThetaRow> rows;
  rows.reserve(n * n + 1);
  for (int k = 0; k <= n * n; ++k) {
    const auto reps = enumerate_class_reps(n, k, limits);
    Rational sum = 0;
    for (const BipartiteGraph& g : reps) sum += omega(g);
    rows.push_back(ThetaRow{k, reps.size(), sum});
  }
  return rows;
}

CountReport count_report(int n, const EnumerationLimits& limits) {
  CountReport report;
  report.n = n;
  for (int k = 0; k <= n * n; ++k) {
    const auto reps = enumerate_class_reps(n, k, limits);
    Rational theta_sum = 0;
    for (const BipartiteGraph& g : reps) theta_sum += omega(g);
    report.per_k.push_back(
        CountRow{k, reps.size(), theta_sum, q_count(n, k, limits)});
  }
  report.ordered_pairs = disjoint_ordered(n, limits);
  report.unordered_pairs = report.ordered_pairs / 2;
  report.dual_path_ok = true;  // disjoint_ordered throws on mismatch
  return report;
}

}  // namespace spm
