#include "pickylab/numtheory.hpp"

#include "pickylab/errors.hpp"

#include <tuple>

namespace pickylab {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
  std::vector<std::pair<std::uint64_t, unsigned>> result;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.emplace_back(p, e);
  }
  if (n > 1)
    result.emplace_back(n, 1u);
  return result;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> primes;
  for (auto const &[p, e] : factorize(n))
    primes.push_back(p);
  return primes;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

unsigned valuation(std::uint64_t n, std::uint64_t p)
{
  if (n == 0 || p < 2)
    throw InvalidArgument("valuation: need n > 0 and p >= 2");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
  std::uint64_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

std::uint64_t euler_phi(std::uint64_t n)
{
  std::uint64_t phi = n;
  for (auto const &[p, e] : factorize(n))
    phi = phi / p * (p - 1);
  return phi;
}

namespace modular {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1u)
      r = mul(r, base, m);
    base = mul(base, base, m);
    exp >>= 1u;
  }
  return r;
}

std::uint64_t inverse(std::int64_t a, std::uint64_t m)
{
  std::int64_t r0 = static_cast<std::int64_t>(m);
  std::int64_t r1 = static_cast<std::int64_t>(reduce(a, m));
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 != 1)
    throw InvalidArgument("modular inverse: not a unit");
  return reduce(t0, m);
}

std::uint64_t primitive_root(std::uint64_t q)
{
  auto const primes = prime_divisors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto p : primes) {
      if (pow(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok)
      return g;
  }
  return 1; // q == 2
}

} // namespace modular

} // namespace pickylab
