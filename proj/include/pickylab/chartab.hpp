#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "json.hpp"

#include "pickylab/exactnum.hpp"
#include "pickylab/limits.hpp"
#include "pickylab/permgroup.hpp"

namespace pickylab {

/// Irreducible complex characters of a permutation group, rows indexed by
/// characters and columns by the classes of ConjugacyClasses. Row 0 is the
/// principal character.
class CharacterTable
{
public:
  /// Takes the values as computed; derives degrees, power maps and inverse
  /// classes. Does not verify (see verify_orthogonality).
  CharacterTable(std::shared_ptr<ConjugacyClasses const> classes,
                 std::vector<std::vector<Cyclotomic>> values);

  PermGroup const &group() const { return classes_->group(); }
  ConjugacyClasses const &classes() const { return *classes_; }
  std::shared_ptr<ConjugacyClasses const> const &class_data() const { return classes_; }

  /// k(G)
  std::size_t size() const { return values_.size(); }
  Cyclotomic const &value(std::size_t chi, std::size_t cls) const { return values_[chi][cls]; }
  std::vector<Cyclotomic> const &row(std::size_t chi) const { return values_[chi]; }
  std::uint64_t degree(std::size_t chi) const { return degrees_[chi]; }
  std::vector<std::uint64_t> const &degrees() const { return degrees_; }

  /// lcm of element orders
  std::uint64_t exponent() const { return exponent_; }
  /// [g] -> [g^r] for a prime r dividing |G|.
  std::vector<std::size_t> const &power_map(std::uint64_t r) const;
  /// [g] -> [g^-1], read off the power map at exponent order(g) - 1.
  std::size_t inverse_class(std::size_t cls) const { return inverse_[cls]; }

  /// Throws InvalidArgument when x is not in the group.
  std::size_t class_of(Perm const &x) const { return classes_->class_of(x); }
  Cyclotomic const &value_at(std::size_t chi, Perm const &x) const { return values_[chi][class_of(x)]; }

private:
  std::shared_ptr<ConjugacyClasses const> classes_;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<std::uint64_t> degrees_;
  std::uint64_t exponent_ = 1;
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps_;
  std::vector<std::size_t> inverse_;
};

/// Row and column orthogonality, sum of squared degrees, degrees dividing
/// |G|, principal row first. Throws EngineError on the first violation.
void verify_orthogonality(CharacterTable const &t);

/// Eigenvectors of the class multiplication matrices over a prime field,
/// lifted to exact values. Rows sorted by degree, then by value strings,
/// with the principal character first. Throws ResourceError past the limits.
CharacterTable character_table(PermGroup const &g, Limits const &limits = {});
CharacterTable character_table(std::shared_ptr<ConjugacyClasses const> classes,
                               Limits const &limits = {});

/// The prime used by character_table: smallest q = 1 mod exponent with q > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent);

using CharacterSet = std::vector<std::size_t>; // sorted row indices

CharacterSet irr_all(CharacterTable const &t);
/// Degree prime to p.
CharacterSet irr_pprime(CharacterTable const &t, std::uint64_t p);
/// chi(x) != 0.
CharacterSet irr_nonvanishing_at(CharacterTable const &t, Perm const &x);
/// chi(s) != 0 for some s in S; with exclude_identity the identity is left out of S.
CharacterSet irr_nonvanishing_on(CharacterTable const &t, PermGroup const &s,
                                 bool exclude_identity = false);

std::vector<std::uint64_t> cd(CharacterTable const &t);
/// Distinct p-parts of the degrees.
std::vector<std::uint64_t> cd_p(CharacterTable const &t, std::uint64_t p);

/// Fingerprint of chi(x) at modulus order(x).
FieldFingerprint field_of_value(CharacterTable const &t, std::size_t chi, Perm const &x);

nlohmann::json table_to_json(CharacterTable const &t);

} // namespace pickylab
