#ifndef HOFA_COMBINATORICS_HPP
#define HOFA_COMBINATORICS_HPP

#include <cstdint>
#include <stdexcept>

#include "hofa/rational.hpp"

namespace hofa {

// Exact for all arguments appearing at desk scale (n well below 62).
inline std::uint64_t binomial_u64(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

inline BigInt binomial_big(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

inline BigInt factorial_big(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace hofa

#endif
