#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pickylab/exactnum.hpp"
#include "pickylab/permgroup.hpp"

namespace testsupport {

using pickylab::Cyclotomic;
using pickylab::Perm;

inline std::complex<double> evaluate(Cyclotomic const &c)
{
  constexpr double tau = 6.283185307179586476925286766559;
  std::complex<double> z = 0;
  for (auto const &t : c.terms())
    z += t.coeff.get_d() * std::polar(1.0, tau * t.exponent / c.conductor());
  return z;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-7)
{
  return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

/// Random element of Q(zeta_n) with small rational coefficients.
inline Cyclotomic random_cyclotomic(std::mt19937_64 &rng, std::uint32_t n, int terms = 4)
{
  std::uniform_int_distribution<std::int64_t> exp(0, n - 1);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<std::pair<std::int64_t, pickylab::Rational>> sum;
  for (int i = 0; i < terms; ++i) {
    pickylab::Rational q(num(rng), den(rng));
    q.canonicalize();
    sum.emplace_back(exp(rng), q);
  }
  return Cyclotomic::from_exponents(n, sum);
}

inline Perm random_perm(std::mt19937_64 &rng, std::size_t degree)
{
  std::vector<pickylab::Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<pickylab::Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(images);
}

/// Every element of <gens> by breadth-first closure under right multiplication.
inline std::set<Perm> brute_closure(std::size_t degree, std::vector<Perm> const &gens)
{
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const &x : frontier) {
      for (auto const &g : gens) {
        Perm y = x * g;
        if (seen.insert(y).second)
          next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

} // namespace testsupport
