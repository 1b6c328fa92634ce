#include "pickylab/subnorm.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pickylab/errors.hpp"

namespace pickylab {

bool is_subnormal(PermGroup const &h, PermGroup const &k)
{
  if (!h.is_subgroup_of(k))
    throw InvalidArgument("is_subnormal: not a subgroup");
  PermGroup current = k;
  for (;;) {
    if (current.order() == h.order())
      return true;
    PermGroup next = normal_closure(current, h);
    if (next.order() == current.order())
      return false;
    current = std::move(next);
  }
}

std::vector<Perm> subnormalizer_set(PermGroup const &g, Perm const &x, Limits const &limits)
{
  if (!g.contains(x))
    throw InvalidArgument("subnormalizer: " + x.str() + " is not in the group");
  if (g.order() > Integer(std::to_string(limits.max_subnormalizer_order)))
    throw ResourceError("subnormalizer: |G| = " + g.order().get_str() + " exceeds the bound " +
                        std::to_string(limits.max_subnormalizer_order));

  std::uint64_t const n = g.order_u64();
  PermGroup const cyclic(g.degree(), {x});
  std::vector<Perm> const powers = cyclic.elements();

  // <x, g> only depends on the double coset <x> g <x>
  std::vector<std::int8_t> state(n, -1);
  for (std::uint64_t r = 0; r < n; ++r) {
    if (state[r] >= 0)
      continue;
    Perm const e = g.unrank(r);
    PermGroup const joined = cyclic.closure(e);
    std::int8_t const verdict = is_subnormal(cyclic, joined) ? 1 : 0;
    for (auto const &a : powers) {
      Perm const ae = a * e;
      for (auto const &b : powers)
        state[g.rank(ae * b)] = verdict;
    }
  }

  std::vector<Perm> result;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (state[r] == 1)
      result.push_back(g.unrank(r));
  }
  return result;
}

PermGroup subnormalizer_subgroup(PermGroup const &g, Perm const &x, Limits const &limits)
{
  PermGroup sub = PermGroup::trivial(g.degree());
  for (auto const &e : subnormalizer_set(g, x, limits)) {
    if (!sub.contains(e))
      sub = sub.closure(e);
  }
  return sub;
}

std::size_t sylow_containing(SylowSystem const &sys, Perm const &x)
{
  for (std::size_t i = 0; i < sys.count(); ++i) {
    if (sys.sylow.contains(x.conjugate_by(sys.conjugators[i].inverse())))
      return i;
  }
  throw InvalidArgument(x.str() + " lies in no Sylow " + std::to_string(sys.prime) + "-subgroup");
}

PermGroup conjugate_normalizer(SylowSystem const &sys, std::size_t i)
{
  std::vector<Perm> gens;
  for (auto const &h : sys.normalizer.generators())
    gens.push_back(h.conjugate_by(sys.conjugators[i]));
  return PermGroup(sys.normalizer.degree(), gens);
}

PickyReport picky_report(PermGroup const &g, SylowSystem const &sys, Perm const &x, Limits const &limits)
{
  if (!g.contains(x))
    throw InvalidArgument("picky_report: " + x.str() + " is not in the group");
  if (!is_p_element(x, sys.prime))
    throw InvalidArgument("picky_report: " + x.str() + " is not a " + std::to_string(sys.prime) +
                          "-element");
  PickyReport r;
  r.element = x;
  r.prime = sys.prime;
  r.sylow_count = sylow_count_containing(sys, x);
  r.is_picky = r.sylow_count == 1;
  r.normalizer = conjugate_normalizer(sys, sylow_containing(sys, x));
  r.sub_group = subnormalizer_subgroup(g, x, limits);

  if (!r.normalizer.is_subgroup_of(r.sub_group))
    throw EngineError("normalizer of a Sylow subgroup containing " + x.str() +
                      " is not inside its subnormalizer");
  if (r.is_picky != (r.normalizer.order() == r.sub_group.order()))
    throw EngineError("picky status of " + x.str() + " disagrees with Sub_G(x) = N_G(P)");
  return r;
}

PickyReport picky_report(PermGroup const &g, std::uint64_t p, Perm const &x, Limits const &limits)
{
  if (!g.contains(x))
    throw InvalidArgument("picky_report: " + x.str() + " is not in the group");
  if (!is_p_element(x, p))
    throw InvalidArgument("picky_report: " + x.str() + " is not a " + std::to_string(p) + "-element");
  return picky_report(g, sylow_system(g, p, limits), x, limits);
}

nlohmann::json picky_to_json(PickyReport const &r)
{
  return {{"element", r.element.str()},
          {"prime", r.prime},
          {"sylow_count", r.sylow_count},
          {"is_picky", r.is_picky},
          {"sub_order", r.sub_group.order().get_str()},
          {"normalizer_order", r.normalizer.order().get_str()}};
}

CoveringAnalysis covering_analysis(SylowSystem const &sys, ConjugacyClasses const &cc)
{
  CoveringAnalysis result;
  std::map<std::uint64_t, std::size_t> containing;
  for (auto const &m : sys.members) {
    for (auto r : m)
      ++containing[r];
  }
  result.all_sylows_needed = std::all_of(sys.members.begin(), sys.members.end(), [&](auto const &m) {
    return std::any_of(m.begin(), m.end(), [&](std::uint64_t r) { return containing[r] == 1; });
  });

  for (auto const &c : cc.classes()) {
    if (!is_p_element(c.representative, sys.prime))
      continue;
    if (sylow_count_containing(sys, c.representative) == 1)
      result.picky_representatives.push_back(c.representative);
  }
  result.picky_exists = !result.picky_representatives.empty();
  return result;
}

CoveringAnalysis covering_analysis(PermGroup const &g, std::uint64_t p, Limits const &limits)
{
  return covering_analysis(sylow_system(g, p, limits), ConjugacyClasses(g, limits));
}

std::size_t chain_length(PermGroup const &g, PermGroup const &n, Limits const &limits)
{
  if (!n.is_subgroup_of(g))
    throw InvalidArgument("chain_length: not a subgroup");
  if (g.order() > Integer(std::to_string(limits.max_chain_order)))
    throw ResourceError("chain_length: |G| = " + g.order().get_str() + " exceeds the bound " +
                        std::to_string(limits.max_chain_order));

  std::uint64_t const size = g.order_u64();
  using Key = std::vector<std::uint64_t>;
  auto key_of = [&](PermGroup const &h) {
    Key k;
    h.for_each_element([&](Perm const &e) { k.push_back(g.rank(e)); });
    std::sort(k.begin(), k.end());
    return k;
  };

  std::map<Key, std::size_t> memo;
  std::function<std::size_t(PermGroup const &, Key const &)> longest = [&](PermGroup const &h,
                                                                          Key const &hk) -> std::size_t {
    if (hk.size() == size)
      return 0;
    if (auto it = memo.find(hk); it != memo.end())
      return it->second;

    // overgroups <H, e>, one per double coset H e H
    std::vector<bool> seen(size, false);
    for (auto r : hk)
      seen[r] = true;
    std::vector<Perm> const members = h.elements();
    std::vector<std::pair<Key, PermGroup>> overgroups;
    for (std::uint64_t r = 0; r < size; ++r) {
      if (seen[r])
        continue;
      Perm const e = g.unrank(r);
      for (auto const &a : members) {
        Perm const ae = a * e;
        for (auto const &b : members)
          seen[g.rank(ae * b)] = true;
      }
      PermGroup m = h.closure(e);
      Key mk = key_of(m);
      if (std::none_of(overgroups.begin(), overgroups.end(), [&](auto const &o) { return o.first == mk; }))
        overgroups.emplace_back(std::move(mk), std::move(m));
    }

    std::size_t best = 0;
    for (auto const &[mk, m] : overgroups) {
      bool minimal = std::none_of(overgroups.begin(), overgroups.end(), [&](auto const &o) {
        return o.first.size() < mk.size() && std::includes(mk.begin(), mk.end(), o.first.begin(), o.first.end());
      });
      if (minimal)
        best = std::max(best, 1 + longest(m, mk));
    }
    memo.emplace(hk, best);
    return best;
  };
  return longest(n, key_of(n));
}

} // namespace pickylab
