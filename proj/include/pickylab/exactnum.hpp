#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pickylab {

using Integer = mpz_class;
using Rational = mpq_class;

/**
 * Exact element of the cyclotomic field Q(zeta_n).
 *
 * Elements are stored as a sparse, exponent-sorted list of rational
 * coefficients on a fixed basis of Q(zeta_n) made of roots of unity, and
 * always in the smallest field containing them (the conductor). Equality is
 * therefore syntactic.
 *
 * Basis. Q(zeta_n) is the tensor product of Q(zeta_{q^m}) over the prime
 * powers q^m exactly dividing n, and zeta_n^k factors as a product of
 * zeta_{q^m}^{c_q} with c_q = k * (n/q^m)^{-1} mod q^m. A root zeta_n^k is a
 * basis element iff every component c_q is admissible:
 *  - q = 2: c_q < 2^{m-1};
 *  - q odd: the leading base-q digit of c_q (the q^{m-1} digit) is nonzero.
 * This is a tower of relative power bases, so it is an integral basis: an
 * element is an algebraic integer iff all its coefficients are integers.
 * For q^m with m >= 2 the basis of Q(zeta_{n/q}) is the subset of exponents
 * divisible by q, which makes conductor reduction a support test.
 */
class Cyclotomic
{
public:
  struct Term
  {
    std::uint32_t exponent;
    Rational coeff;

    bool operator==(Term const &other) const = default;
  };

  Cyclotomic() = default;
  Cyclotomic(Rational const &q);
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

  /// zeta_n^k for any integer k.
  static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k);

  /// Sum of c * zeta_n^k over the given (k, c) pairs; exponents are arbitrary
  /// residues, not necessarily basis exponents.
  static Cyclotomic from_exponents(std::uint32_t n,
                                   std::vector<std::pair<std::int64_t, Rational>> const &sum);

  std::uint32_t conductor() const { return conductor_; }
  std::vector<Term> const &terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  /// All basis coefficients integral.
  bool has_integral_coefficients() const;
  /// The rational value; pre: is_rational().
  Rational to_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic &operator+=(Cyclotomic const &other);
  Cyclotomic &operator-=(Cyclotomic const &other);
  Cyclotomic &operator*=(Cyclotomic const &other);

  friend Cyclotomic operator+(Cyclotomic a, Cyclotomic const &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, Cyclotomic const &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, Cyclotomic const &b) { return a *= b; }

  bool operator==(Cyclotomic const &other) const;
  /// A total order: by conductor, then term list.
  std::strong_ordering operator<=>(Cyclotomic const &other) const;

  /// Complex conjugate, i.e. the Galois automorphism zeta -> zeta^{-1}.
  Cyclotomic conj() const;

  /// Canonical string "c_<n>(k1:q1,k2:q2,...)"; zero is "c_1()".
  std::string str() const;

  /// Representation in Q(zeta_m) for a multiple m of the conductor, as
  /// dense coefficients over exponents 0..m-1 (redundant roots allowed).
  std::vector<Rational> dense_in(std::uint32_t m) const;

private:
  friend Cyclotomic galois_apply(Cyclotomic const &alpha, std::int64_t k);

  static Cyclotomic from_dense(std::uint32_t n, std::vector<Rational> &dense);
  void reduce_conductor();

  std::uint32_t conductor_ = 1;
  std::vector<Term> terms_;
};

/// sigma_k(alpha): zeta -> zeta^k. Throws InvalidArgument unless
/// gcd(k, conductor) = 1.
Cyclotomic galois_apply(Cyclotomic const &alpha, std::int64_t k);

/// Stabilizer in (Z/mZ)^* of a cyclotomic number; identifies the field Q(alpha).
struct FieldFingerprint
{
  std::uint32_t modulus = 1;
  std::vector<std::uint32_t> stabilizer; // sorted

  auto operator<=>(FieldFingerprint const &other) const = default;
};

/// Requires conductor(alpha) | m.
FieldFingerprint field_fingerprint(Cyclotomic const &alpha, std::uint32_t m);

/// Represents prime^exponent.
struct PPart
{
  std::uint64_t prime = 2;
  Rational exponent;

  bool operator==(PPart const &other) const = default;
};

PPart int_p_part(Integer const &n, std::uint64_t p);

/// |N_{Q(alpha)/Q}(alpha)|_p^{1/[Q(alpha):Q]} for a nonzero algebraic
/// integer alpha; integrality is decided by the minimal polynomial.
PPart algebraic_p_part(Cyclotomic const &alpha, std::uint64_t p);

/// Minimal polynomial of alpha over Q as coefficients c_0..c_d (monic).
std::vector<Rational> minimal_polynomial(Cyclotomic const &alpha);

/// Distinct Galois conjugates of alpha, one per coset of its stabilizer.
std::vector<Cyclotomic> galois_conjugates(Cyclotomic const &alpha);

/// Exponent of p in a nonzero integer.
unsigned valuation(Integer const &n, std::uint64_t p);

/// The p-part of a nonzero integer as an integer.
Integer p_part_value(Integer const &n, std::uint64_t p);

} // namespace pickylab
