#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace cdkit {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline long long ipow(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Returns (p, k) with n = p^k for prime p, or (0, 0) if n is not a prime power.
inline std::pair<long long, int> prime_power(long long n) {
  auto f = factorize(n);
  if (f.size() == 1) return {f[0].first, f[0].second};
  return {0, 0};
}

// Multiplicative order of t modulo m; 0 if gcd(t, m) != 1.
inline int multiplicative_order(long long t, long long m) {
  if (m == 1) return 1;
  t %= m;
  if (t < 0) t += m;
  if (std::gcd(t, m) != 1) return 0;
  long long x = t % m;
  int k = 1;
  while (x != 1) {
    x = x * t % m;
    ++k;
  }
  return k;
}

inline long long mod_pow(long long b, long long e, long long m) {
  if (m == 1) return 0;
  long long r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace cdkit
