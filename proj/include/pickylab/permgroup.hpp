#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pickylab/exactnum.hpp"
#include "pickylab/limits.hpp"

namespace pickylab {

using Point = std::uint16_t;

/// A permutation of {0, ..., degree-1}. Products act left to right:
/// i^(g*h) = (i^g)^h. Text forms are 1-based disjoint cycles.
class Perm
{
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws InvalidArgument unless images is a bijection.
  explicit Perm(std::vector<Point> images);

  /// Parses "(1,2,3)(4,5)" or "(1 2 3)(4 5)"; "()" is the identity.
  static Perm parse(std::string_view text, std::size_t degree);
  /// Largest point mentioned in a cycle string (0 for the identity).
  static std::size_t max_point(std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::vector<Point> const &images() const { return images_; }

  Perm operator*(Perm const &other) const;
  Perm inverse() const;
  Perm pow(std::int64_t e) const;
  /// g^-1 * this * g
  Perm conjugate_by(Perm const &g) const;

  bool is_identity() const;
  std::uint64_t order() const;
  /// Cycle lengths, descending, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  std::optional<Point> smallest_moved_point() const;

  std::string str() const;

  /// Lexicographic on image sequences.
  auto operator<=>(Perm const &other) const = default;

private:
  std::vector<Point> images_;
};

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept;
};

bool is_p_element(Perm const &g, std::uint64_t p);

/// p-part g_p of g (the power of g of p-power order with g = g_p g_p').
Perm p_part(Perm const &g, std::uint64_t p);

/**
 * Permutation group given by generators, with a stabilizer chain computed by
 * deterministic Schreier-Sims (each new base point is the smallest point
 * moved by the generator that forced it). Immutable after construction.
 *
 * Elements are indexed by rank: g = u_{k-1} ... u_1 u_0 with u_i the
 * t_i-th transversal element of level i, and rank = t_0 + |O_0|(t_1 + ...).
 */
class PermGroup
{
public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> generators);
  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  std::vector<Perm> const &generators() const { return generators_; }
  std::vector<Perm> strong_generators() const;
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;

  Integer const &order() const { return order_; }
  /// Throws ResourceError when the order does not fit in 63 bits.
  std::uint64_t order_u64() const;
  bool is_trivial() const { return levels_.empty(); }

  bool contains(Perm const &g) const;
  std::optional<std::uint64_t> try_rank(Perm const &g) const;
  /// Throws InvalidArgument for non-members.
  std::uint64_t rank(Perm const &g) const;
  Perm unrank(std::uint64_t r) const;

  /// Visits every element in rank order.
  void for_each_element(std::function<void(Perm const &)> const &visit) const;
  std::vector<Perm> elements() const;

  /// The group generated by this group and g (cheap when g is a member).
  PermGroup closure(Perm const &g) const;

  bool is_subgroup_of(PermGroup const &other) const;
  bool is_abelian() const;
  /// this is normalized by g.
  bool is_normalized_by(Perm const &g) const;
  bool is_normal_in(PermGroup const &other) const;

  /// Equal orders and mutual generator membership.
  friend bool operator==(PermGroup const &a, PermGroup const &b);

private:
  struct Level
  {
    Point base;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_index; // by point, -1 outside the orbit
    std::vector<Perm> transversal;         // base^transversal[i] = orbit[i]
    std::vector<Perm> transversal_inverse;
    std::vector<std::size_t> checked;      // Schreier generators done per orbit point
  };

  void add_generator(Perm const &g);
  void add_to_level(std::size_t level, Perm const &g);
  void schreier_sims(std::size_t start);
  /// Sifts g through levels [from, end); returns residue and the level where
  /// it dropped out (levels_.size() when it went all the way through).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
  void update_order();

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
  Integer order_ = 1;
};

/// Orbits of the conjugation action, with a class map by rank.
struct ConjugacyClass
{
  Perm representative; // lexicographically least element of the class
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
};

class ConjugacyClasses
{
public:
  /// Classes sorted by (element order, size, representative).
  explicit ConjugacyClasses(PermGroup group, Limits const &limits = {});

  PermGroup const &group() const { return group_; }
  std::vector<ConjugacyClass> const &classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  ConjugacyClass const &operator[](std::size_t i) const { return classes_[i]; }

  std::size_t class_of_rank(std::uint64_t r) const { return class_of_rank_[r]; }
  /// Throws InvalidArgument for non-members.
  std::size_t class_of(Perm const &g) const;
  /// Ranks of the members of class c.
  std::vector<std::uint64_t> members(std::size_t c) const;
  /// Class of g^e for the representative g of class c.
  std::size_t power_class(std::size_t c, std::int64_t e) const;

private:
  PermGroup group_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_of_rank_;
};

std::vector<ConjugacyClass> conjugacy_classes(PermGroup const &g, Limits const &limits = {});

PermGroup centralizer(PermGroup const &g, Perm const &x, Limits const &limits = {});

/// Throws InvalidArgument unless h <= g.
PermGroup normalizer(PermGroup const &g, PermGroup const &h, Limits const &limits = {});

/// Subgroup of g consisting of the elements satisfying a predicate that is
/// closed under products (brute force over the elements of g).
PermGroup subgroup_where(PermGroup const &g, std::function<bool(Perm const &)> const &pred,
                         Limits const &limits = {});

/// <h^k>, the normal closure of h in k.
PermGroup normal_closure(PermGroup const &k, PermGroup const &h);

PermGroup derived_subgroup(PermGroup const &g);

struct DerivedSeries
{
  std::vector<PermGroup> terms; // G = terms[0] > terms[1] > ...
  bool solvable = false;
  /// dl(G) when solvable; otherwise the index of the stable perfect term.
  std::size_t length = 0;
};

DerivedSeries derived_series(PermGroup const &g);
std::size_t derived_length(PermGroup const &g); // throws InvalidArgument if not solvable

/// Sylow p-subgroup, grown one p-element of the normalizer at a time.
PermGroup sylow_subgroup(PermGroup const &g, std::uint64_t p, Limits const &limits = {});

/// All Sylow p-subgroups as conjugates P^{g_i} of one of them.
struct SylowSystem
{
  std::uint64_t prime = 0;
  PermGroup sylow;
  PermGroup normalizer;
  /// Right coset representatives of N_G(P); conjugators[0] is the identity.
  std::vector<Perm> conjugators;
  /// Sorted ranks (in G) of the elements of P^{conjugators[i]}.
  std::vector<std::vector<std::uint64_t>> members;

  std::size_t count() const { return conjugators.size(); }
};

SylowSystem sylow_system(PermGroup const &g, std::uint64_t p, Limits const &limits = {});

/// Number of Sylow p-subgroups containing the p-element x.
std::uint64_t sylow_count_containing(SylowSystem const &sys, Perm const &x);
std::uint64_t sylow_count_containing(PermGroup const &g, std::uint64_t p, Perm const &x,
                                     Limits const &limits = {});

/// Elements of p-power order (identity included), in rank order.
std::vector<Perm> p_elements(PermGroup const &g, std::uint64_t p, Limits const &limits = {});

bool is_ti_sylow(SylowSystem const &sys, PermGroup const &g);
bool is_ti_sylow(PermGroup const &g, std::uint64_t p, Limits const &limits = {});

} // namespace pickylab
