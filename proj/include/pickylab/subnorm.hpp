#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "pickylab/limits.hpp"
#include "pickylab/permgroup.hpp"

namespace pickylab {

/// H subnormal in K, decided by the descending series
/// K >= <H^K> >= <H^<H^K>> >= ... which reaches H iff H is subnormal.
/// Throws InvalidArgument unless H <= K.
bool is_subnormal(PermGroup const &h, PermGroup const &k);

/// S_G(<x>) = { g in G : <x> subnormal in <x, g> }, in rank order.
std::vector<Perm> subnormalizer_set(PermGroup const &g, Perm const &x, Limits const &limits = {});

/// Sub_G(x) = <S_G(<x>)>.
PermGroup subnormalizer_subgroup(PermGroup const &g, Perm const &x, Limits const &limits = {});

/// Index i with x in P^{conjugators[i]}; throws InvalidArgument if none.
std::size_t sylow_containing(SylowSystem const &sys, Perm const &x);

/// N_G(P^c) for the i-th conjugate.
PermGroup conjugate_normalizer(SylowSystem const &sys, std::size_t i);

struct PickyReport
{
  Perm element;
  std::uint64_t prime = 0;
  std::uint64_t sylow_count = 0;
  bool is_picky = false;
  PermGroup sub_group;  // Sub_G(x)
  PermGroup normalizer; // N_G(P) for a Sylow P containing x
};

/// Also checks N_G(P) <= Sub_G(x), with equality iff x is picky; a violation
/// throws EngineError.
PickyReport picky_report(PermGroup const &g, std::uint64_t p, Perm const &x, Limits const &limits = {});
PickyReport picky_report(PermGroup const &g, SylowSystem const &sys, Perm const &x,
                         Limits const &limits = {});

nlohmann::json picky_to_json(PickyReport const &r);

struct CoveringAnalysis
{
  bool all_sylows_needed = false;
  bool picky_exists = false;
  std::vector<Perm> picky_representatives; // class representatives of picky elements
  bool consistent() const { return all_sylows_needed == picky_exists; }
};

/// all_sylows_needed: every Sylow subgroup has an element in no other one;
/// picky_exists: some p-element class representative lies in one Sylow only.
CoveringAnalysis covering_analysis(SylowSystem const &sys, ConjugacyClasses const &cc);
CoveringAnalysis covering_analysis(PermGroup const &g, std::uint64_t p, Limits const &limits = {});

/// Longest strictly increasing chain of subgroups from n up to g, through
/// minimal overgroups <H, g>. Throws ResourceError past limits.max_chain_order.
std::size_t chain_length(PermGroup const &g, PermGroup const &n, Limits const &limits = {});

} // namespace pickylab
