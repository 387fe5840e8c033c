#include "spm/types.hpp"

#include <mutex>
#include <vector>

namespace spm {

const BigInt& factorial(unsigned m) {
  static std::mutex mu;
  static std::vector<BigInt> table{1};  // table[i] = i!
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= m) {
    table.push_back(table.back() * static_cast<unsigned>(table.size()));
  }
  return table[m];
}

BigInt binomial(unsigned m, unsigned r) {
  if (r > m) return 0;
  if (r > m - r) r = m - r;
  BigInt result = 1;
  for (unsigned i = 1; i <= r; ++i) {
    result *= m - r + i;
    result /= i;  // exact at every step: result is C(m-r+i, i)
  }
  return result;
}

BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  BigInt acc = base;
  while (exp != 0) {
    if (exp & 1u) result *= acc;
    exp >>= 1u;
    if (exp != 0) acc *= acc;
  }
  return result;
}

std::string rational_to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace spm
