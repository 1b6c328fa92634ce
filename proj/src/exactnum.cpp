#include "pickylab/exactnum.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "pickylab/errors.hpp"
#include "pickylab/numtheory.hpp"

namespace pickylab {

namespace {

/// Expansion of every root zeta_n^k in the canonical basis of Q(zeta_n).
/// Each expansion is a list of basis exponents with a common sign.
struct BasisTable
{
  struct PrimePower
  {
    std::uint32_t prime;
    std::uint32_t power;    // prime^m
    std::uint32_t cofactor; // n / prime^m
    std::uint32_t cofactor_inverse; // cofactor^{-1} mod prime^m
  };

  std::uint32_t n;
  std::vector<PrimePower> factors;
  std::vector<std::vector<std::uint32_t>> expansion;
  std::vector<std::int8_t> sign;

  explicit BasisTable(std::uint32_t modulus) : n(modulus)
  {
    for (auto const &[p, e] : factorize(n)) {
      PrimePower pp;
      pp.prime = static_cast<std::uint32_t>(p);
      pp.power = static_cast<std::uint32_t>(ipow(p, e));
      pp.cofactor = n / pp.power;
      pp.cofactor_inverse = pp.power == 1
        ? 0u
        : static_cast<std::uint32_t>(modular::inverse(pp.cofactor, pp.power));
      factors.push_back(pp);
    }

    expansion.resize(n);
    sign.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      std::vector<std::uint32_t> current{k};
      int s = 1;
      for (auto const &pp : factors) {
        std::uint32_t const digit = pp.power / pp.prime;
        std::vector<std::uint32_t> next;
        bool replaced = false;
        for (auto e : current) {
          auto c = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(e % pp.power) * pp.cofactor_inverse % pp.power);
          if (pp.prime == 2) {
            if (c < digit) {
              next.push_back(e);
            } else {
              std::uint64_t shift = static_cast<std::uint64_t>(digit) * pp.cofactor;
              next.push_back(static_cast<std::uint32_t>((e + n - shift % n) % n));
              replaced = true;
            }
          } else {
            if (c / digit != 0) {
              next.push_back(e);
            } else {
              for (std::uint32_t d = 1; d < pp.prime; ++d) {
                std::uint64_t shift = static_cast<std::uint64_t>(d) * digit * pp.cofactor;
                next.push_back(static_cast<std::uint32_t>((e + shift) % n));
              }
              replaced = true;
            }
          }
        }
        // all roots in one expansion share their components, so a prime
        // either replaces every root in the list or none of them
        if (replaced)
          s = -s;
        current = std::move(next);
      }
      std::sort(current.begin(), current.end());
      expansion[k] = std::move(current);
      sign[k] = static_cast<std::int8_t>(s);
    }
  }
};

BasisTable const &basis_table(std::uint32_t n)
{
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<BasisTable>> tables;

  std::lock_guard<std::mutex> lock(mutex);
  auto it = tables.find(n);
  if (it == tables.end())
    it = tables.emplace(n, std::make_unique<BasisTable>(n)).first;
  return *it->second;
}

std::uint32_t lcm_u32(std::uint32_t a, std::uint32_t b)
{
  auto l = lcm_u64(a, b);
  if (l > (1u << 24))
    throw ResourceError("cyclotomic conductor exceeds 2^24");
  return static_cast<std::uint32_t>(l);
}

std::vector<std::uint32_t> units(std::uint32_t m)
{
  std::vector<std::uint32_t> result;
  if (m == 1) {
    result.push_back(1);
    return result;
  }
  for (std::uint32_t k = 1; k < m; ++k) {
    if (std::gcd(k, m) == 1)
      result.push_back(k);
  }
  return result;
}

/// Residues k in (Z/cZ)^* (c the conductor) with sigma_k(alpha) = alpha.
std::vector<std::uint32_t> stabilizer_at_conductor(Cyclotomic const &alpha)
{
  std::vector<std::uint32_t> stab;
  for (auto k : units(alpha.conductor())) {
    if (galois_apply(alpha, k) == alpha)
      stab.push_back(k);
  }
  return stab;
}

} // namespace

Cyclotomic::Cyclotomic(Rational const &q)
{
  Rational c(q);
  c.canonicalize();
  if (sgn(c) != 0)
    terms_.push_back(Term{0u, std::move(c)});
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t k)
{
  if (n == 0)
    throw InvalidArgument("root_of_unity: order must be positive");
  return from_exponents(n, {{k, Rational(1)}});
}

Cyclotomic Cyclotomic::from_exponents(std::uint32_t n,
                                      std::vector<std::pair<std::int64_t, Rational>> const &sum)
{
  if (n == 0)
    throw InvalidArgument("from_exponents: order must be positive");
  std::vector<Rational> dense(n);
  for (auto const &[k, c] : sum)
    dense[modular::reduce(k, n)] += c;
  return from_dense(n, dense);
}

Cyclotomic Cyclotomic::from_dense(std::uint32_t n, std::vector<Rational> &dense)
{
  auto const &table = basis_table(n);
  std::vector<Rational> basis(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    if (sgn(dense[k]) == 0)
      continue;
    if (table.sign[k] > 0) {
      for (auto b : table.expansion[k])
        basis[b] += dense[k];
    } else {
      for (auto b : table.expansion[k])
        basis[b] -= dense[k];
    }
  }

  Cyclotomic result;
  result.conductor_ = n;
  for (std::uint32_t k = 0; k < n; ++k) {
    if (sgn(basis[k]) != 0) {
      basis[k].canonicalize();
      result.terms_.push_back(Term{k, std::move(basis[k])});
    }
  }
  result.reduce_conductor();
  return result;
}

void Cyclotomic::reduce_conductor()
{
  if (terms_.empty()) {
    conductor_ = 1;
    return;
  }

  bool changed = true;
  while (changed && conductor_ > 1) {
    changed = false;
    for (auto const &[p64, e] : factorize(conductor_)) {
      auto const p = static_cast<std::uint32_t>(p64);
      if (p == 2 || e >= 2) {
        bool divisible = std::all_of(terms_.begin(), terms_.end(),
                                     [p](Term const &t) { return t.exponent % p == 0; });
        if (!divisible)
          continue;
        for (auto &t : terms_)
          t.exponent /= p;
        conductor_ /= p;
        changed = true;
        break;
      }

      // p exactly divides the conductor and is odd: the subfield
      // Q(zeta_{n/p}) is spanned by the fibres sum_{c=1}^{p-1} zeta_p^c * b
      // with constant coefficient along each fibre.
      std::uint32_t const rest = conductor_ / p;
      std::uint32_t const inv_p =
        rest == 1 ? 0u : static_cast<std::uint32_t>(modular::inverse(p, rest));

      std::map<std::uint32_t, std::vector<Rational const *>> fibres;
      for (auto const &t : terms_) {
        std::uint32_t fibre = rest == 1
          ? 0u
          : static_cast<std::uint32_t>(static_cast<std::uint64_t>(t.exponent) * inv_p % rest);
        fibres[fibre].push_back(&t.coeff);
      }

      bool constant = std::all_of(fibres.begin(), fibres.end(), [p](auto const &f) {
        auto const &cs = f.second;
        if (cs.size() != p - 1)
          return false;
        return std::all_of(cs.begin(), cs.end(),
                           [&cs](Rational const *c) { return *c == *cs.front(); });
      });
      if (!constant)
        continue;

      std::vector<Term> reduced;
      reduced.reserve(fibres.size());
      for (auto const &[fibre, cs] : fibres)
        reduced.push_back(Term{fibre, -*cs.front()});
      terms_ = std::move(reduced);
      conductor_ = rest;
      changed = true;
      break;
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](Term const &a, Term const &b) { return a.exponent < b.exponent; });
}

bool Cyclotomic::has_integral_coefficients() const
{
  return std::all_of(terms_.begin(), terms_.end(),
                     [](Term const &t) { return t.coeff.get_den() == 1; });
}

Rational Cyclotomic::to_rational() const
{
  if (!is_rational())
    throw InvalidArgument("to_rational: value is irrational");
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic r(*this);
  for (auto &t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

Cyclotomic &Cyclotomic::operator+=(Cyclotomic const &other)
{
  if (other.is_zero())
    return *this;
  if (is_zero())
    return *this = other;

  if (conductor_ == other.conductor_) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->exponent < a->exponent) {
        merged.push_back(*b++);
      } else {
        Rational s = a->coeff + b->coeff;
        if (sgn(s) != 0)
          merged.push_back(Term{a->exponent, std::move(s)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    reduce_conductor();
    return *this;
  }

  std::uint32_t const n = lcm_u32(conductor_, other.conductor_);
  std::vector<Rational> dense(n);
  for (auto const &t : terms_)
    dense[t.exponent * (n / conductor_)] += t.coeff;
  for (auto const &t : other.terms_)
    dense[t.exponent * (n / other.conductor_)] += t.coeff;
  return *this = from_dense(n, dense);
}

Cyclotomic &Cyclotomic::operator-=(Cyclotomic const &other)
{
  return *this += -other;
}

Cyclotomic &Cyclotomic::operator*=(Cyclotomic const &other)
{
  if (is_zero() || other.is_zero())
    return *this = Cyclotomic();

  if (other.is_rational()) {
    Rational const &s = other.terms_.front().coeff;
    for (auto &t : terms_)
      t.coeff *= s;
    return *this;
  }
  if (is_rational()) {
    Rational const s = terms_.front().coeff;
    *this = other;
    for (auto &t : terms_)
      t.coeff *= s;
    return *this;
  }

  std::uint32_t const n = lcm_u32(conductor_, other.conductor_);
  std::uint64_t const fa = n / conductor_;
  std::uint64_t const fb = n / other.conductor_;
  std::vector<Rational> dense(n);
  for (auto const &a : terms_) {
    for (auto const &b : other.terms_)
      dense[(a.exponent * fa + b.exponent * fb) % n] += a.coeff * b.coeff;
  }
  return *this = from_dense(n, dense);
}

bool Cyclotomic::operator==(Cyclotomic const &other) const
{
  return conductor_ == other.conductor_ && terms_ == other.terms_;
}

std::strong_ordering Cyclotomic::operator<=>(Cyclotomic const &other) const
{
  if (auto c = conductor_ <=> other.conductor_; c != 0)
    return c;
  std::size_t const n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].exponent <=> other.terms_[i].exponent; c != 0)
      return c;
    int const c = cmp(terms_[i].coeff, other.terms_[i].coeff);
    if (c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> other.terms_.size();
}

Cyclotomic Cyclotomic::conj() const
{
  return galois_apply(*this, -1);
}

std::string Cyclotomic::str() const
{
  std::string s = "c_" + std::to_string(conductor_) + "(";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0)
      s += ',';
    s += std::to_string(terms_[i].exponent);
    s += ':';
    s += terms_[i].coeff.get_str();
  }
  s += ')';
  return s;
}

std::vector<Rational> Cyclotomic::dense_in(std::uint32_t m) const
{
  if (m == 0 || m % conductor_ != 0)
    throw InvalidArgument("dense_in: modulus must be a multiple of the conductor");
  std::vector<Rational> dense(m);
  for (auto const &t : terms_)
    dense[t.exponent * (m / conductor_)] += t.coeff;
  return dense;
}

Cyclotomic galois_apply(Cyclotomic const &alpha, std::int64_t k)
{
  std::uint32_t const n = alpha.conductor_;
  std::uint64_t const kr = modular::reduce(k, n);
  if (n > 1 && std::gcd<std::uint64_t>(kr, n) != 1)
    throw InvalidArgument("galois_apply: k must be coprime to the conductor");
  if (n == 1)
    return alpha;

  std::vector<Rational> dense(n);
  for (auto const &t : alpha.terms_)
    dense[static_cast<std::uint64_t>(t.exponent) * kr % n] += t.coeff;
  return Cyclotomic::from_dense(n, dense);
}

FieldFingerprint field_fingerprint(Cyclotomic const &alpha, std::uint32_t m)
{
  if (m == 0 || m % alpha.conductor() != 0)
    throw InvalidArgument("field_fingerprint: conductor must divide the modulus");

  auto const stab_c = stabilizer_at_conductor(alpha);
  std::uint32_t const c = alpha.conductor();

  FieldFingerprint fp;
  fp.modulus = m;
  for (auto k : units(m)) {
    std::uint32_t r = c == 1 ? 1u : k % c;
    if (std::binary_search(stab_c.begin(), stab_c.end(), r))
      fp.stabilizer.push_back(k);
  }
  return fp;
}

std::vector<Cyclotomic> galois_conjugates(Cyclotomic const &alpha)
{
  std::uint32_t const c = alpha.conductor();
  auto const stab = stabilizer_at_conductor(alpha);

  std::vector<Cyclotomic> conjugates;
  std::vector<bool> seen(c + 1, false);
  for (auto k : units(c)) {
    if (seen[k])
      continue;
    conjugates.push_back(galois_apply(alpha, k));
    for (auto h : stab)
      seen[c == 1 ? 1u : static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) * h % c)] = true;
  }
  return conjugates;
}

std::vector<Rational> minimal_polynomial(Cyclotomic const &alpha)
{
  // coefficients of the product of (X - beta), lowest degree first
  std::vector<Cyclotomic> poly{Cyclotomic(1)};
  for (auto const &beta : galois_conjugates(alpha)) {
    std::vector<Cyclotomic> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * beta;
    }
    poly = std::move(next);
  }

  std::vector<Rational> result;
  result.reserve(poly.size());
  for (auto const &c : poly) {
    if (!c.is_rational())
      throw EngineError("minimal_polynomial: non-rational coefficient " + c.str());
    result.push_back(c.to_rational());
  }
  return result;
}

unsigned valuation(Integer const &n, std::uint64_t p)
{
  if (sgn(n) == 0)
    throw InvalidArgument("valuation of zero");
  Integer m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    m /= static_cast<unsigned long>(p);
    ++v;
  }
  return v;
}

Integer p_part_value(Integer const &n, std::uint64_t p)
{
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, valuation(n, p));
  return r;
}

PPart int_p_part(Integer const &n, std::uint64_t p)
{
  if (sgn(n) <= 0)
    throw InvalidArgument("int_p_part: n must be positive");
  return PPart{p, Rational(valuation(n, p))};
}

PPart algebraic_p_part(Cyclotomic const &alpha, std::uint64_t p)
{
  if (alpha.is_zero())
    throw InvalidArgument("algebraic_p_part: the p-part of zero is undefined");

  auto const poly = minimal_polynomial(alpha);
  for (auto const &c : poly) {
    if (c.get_den() != 1)
      throw InvalidArgument("algebraic_p_part: " + alpha.str() + " is not an algebraic integer");
  }
  auto const degree = static_cast<unsigned long>(poly.size() - 1);
  Integer const norm = abs(poly.front().get_num());
  Rational exponent(Integer(valuation(norm, p)), Integer(degree));
  exponent.canonicalize();
  return PPart{p, exponent};
}

} // namespace pickylab
