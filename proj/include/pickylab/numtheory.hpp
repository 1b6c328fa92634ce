#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace pickylab {

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Exponent of p in n; n > 0.
unsigned valuation(std::uint64_t n, std::uint64_t p);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::uint64_t euler_phi(std::uint64_t n);

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b)
{
  return a / std::gcd(a, b) * b;
}

/// Arithmetic in Z/mZ for m < 2^63.
namespace modular {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return a >= b ? a - b : a + m - b;
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; a must be a unit.
std::uint64_t inverse(std::int64_t a, std::uint64_t m);

/// Reduce a signed integer into [0, m).
inline std::uint64_t reduce(std::int64_t a, std::uint64_t m)
{
  std::int64_t r = a % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

/// Smallest generator of the multiplicative group of the prime field F_q.
std::uint64_t primitive_root(std::uint64_t q);

} // namespace modular

} // namespace pickylab
