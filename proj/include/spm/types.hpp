// Shared exact-arithmetic types and error taxonomy.
#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spm {

// All counts are exact; values reach ~10^22 at n=4, far past 64 bits.
using BigInt = boost::multiprecision::cpp_int;
// Always stored in lowest terms with positive denominator (canonical form of
// cpp_rational).
using Rational = boost::multiprecision::cpp_rational;

// Input outside the supported/opted-in range (n or k bounds, heavy modes).
struct feasibility_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed value: broken invariants, unparseable files, bad labelings.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency check failed (dual-path mismatch, odd pair count,
// non-divisible sigma). Always indicates a bug or inconsistent input data.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Randomized search gave up within its configured budget.
struct sampling_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// m! as a BigInt; memoized, thread-safe.
const BigInt& factorial(unsigned m);

// Exact binomial coefficient C(m, r); 0 when r > m.
BigInt binomial(unsigned m, unsigned r);

// base^exp over BigInt.
BigInt ipow(const BigInt& base, unsigned exp);

// Rational as "p/q" with q >= 1, both in decimal. Fixed wire format for
// reports and JSON.
std::string rational_to_string(const Rational& value);

}  // namespace spm
