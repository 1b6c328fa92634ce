#include "doctest.h"
#include "support.hpp"

#include "pickylab/errors.hpp"
#include "pickylab/groups.hpp"
#include "pickylab/numtheory.hpp"
#include "pickylab/subnorm.hpp"

using namespace pickylab;

namespace {

Perm P(std::string const &s, std::size_t n) { return Perm::parse(s, n); }

/// Intersection of all Sylow p-subgroups, as a membership test.
bool in_op(PermGroup const &k, std::uint64_t p, Perm const &x)
{
  auto sys = sylow_system(k, p);
  for (auto const &c : sys.conjugators) {
    if (!sys.sylow.contains(x.conjugate_by(c.inverse())))
      return false;
  }
  return true;
}

/// Every subgroup generated by at most two elements.
std::vector<PermGroup> two_generated_subgroups(PermGroup const &g)
{
  auto elements = g.elements();
  std::map<std::vector<std::uint64_t>, PermGroup> found;
  for (auto const &a : elements) {
    for (auto const &b : elements) {
      PermGroup h(g.degree(), {a, b});
      std::vector<std::uint64_t> key;
      h.for_each_element([&](Perm const &e) { key.push_back(g.rank(e)); });
      std::sort(key.begin(), key.end());
      found.emplace(key, h);
    }
  }
  std::vector<PermGroup> result;
  for (auto &[k, h] : found)
    result.push_back(h);
  return result;
}

std::size_t lattice_chain(PermGroup const &g, PermGroup const &n)
{
  auto subs = two_generated_subgroups(g);
  std::sort(subs.begin(), subs.end(), [](auto const &a, auto const &b) { return a.order() > b.order(); });
  // longest[i]: longest chain from subs[i] up to g
  std::vector<long> longest(subs.size(), -1);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order() == g.order()) {
      longest[i] = 0;
      continue;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (longest[j] >= 0 && subs[j].order() > subs[i].order() && subs[i].is_subgroup_of(subs[j]))
        longest[i] = std::max(longest[i], longest[j] + 1);
    }
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i] == n)
      return static_cast<std::size_t>(longest[i]);
  }
  return 0;
}

} // namespace

TEST_CASE("subnormality fixtures")
{
  auto a4 = named_group("A:4");
  CHECK(is_subnormal(PermGroup(4, {P("(1,2)(3,4)", 4)}), a4));
  CHECK_FALSE(is_subnormal(PermGroup(3, {P("(1,2)", 3)}), named_group("S:3")));
  CHECK(is_subnormal(a4, named_group("S:4")));
  CHECK_THROWS_AS(is_subnormal(named_group("S:4"), a4), InvalidArgument);
}

TEST_CASE("subnormality of p-subgroups matches O_p membership")
{
  std::mt19937_64 rng(3);
  for (std::string name : {"S:4", "A:4", "D:12", "S:3", "wr:S:2~C:2", "A:5"}) {
    auto g = named_group(name);
    auto elements = g.elements();
    for (int round = 0; round < 30; ++round) {
      auto x = elements[rng() % elements.size()];
      auto y = elements[rng() % elements.size()];
      PermGroup k(g.degree(), {x, y});
      for (auto p : prime_divisors(g.order_u64())) {
        auto xp = p_part(x, p);
        CHECK(is_subnormal(PermGroup(g.degree(), {xp}), k) == in_op(k, p, xp));
      }
    }
  }
}

TEST_CASE("subnormalizers in S4")
{
  auto s4 = named_group("S:4");
  auto c = P("(1,2,3,4)", 4);
  CHECK(subnormalizer_subgroup(s4, c).order() == 8);
  CHECK(subnormalizer_subgroup(s4, P("(1,2)(3,4)", 4)).order() == 24);
  auto set = subnormalizer_set(s4, P("(1,2)(3,4)", 4));
  CHECK(std::find(set.begin(), set.end(), P("(1,2,3)", 4)) != set.end());
  CHECK(subnormalizer_subgroup(s4, Perm(4)).order() == 24);
  CHECK(subnormalizer_subgroup(named_group("C:6"), P("(1,2,3,4,5,6)", 6)).order() == 6);
}

TEST_CASE("pruned subnormalizer sets equal the element-wise definition")
{
  for (std::string name : {"S:4", "A:4", "D:12", "A:5"}) {
    auto g = named_group(name);
    ConjugacyClasses cc(g);
    for (auto const &cls : cc.classes()) {
      auto const &x = cls.representative;
      PermGroup cyclic(g.degree(), {x});
      std::vector<Perm> brute;
      g.for_each_element([&](Perm const &e) {
        if (is_subnormal(cyclic, cyclic.closure(e)))
          brute.push_back(e);
      });
      CHECK(subnormalizer_set(g, x) == brute);

      // centralizer inside S_G(x)
      auto cent = centralizer(g, x);
      for (auto const &e : cent.elements())
        CHECK(std::binary_search(brute.begin(), brute.end(), e,
                                 [&](Perm const &a, Perm const &b) { return g.rank(a) < g.rank(b); }));
    }
  }
}

TEST_CASE("subnormalizers are conjugation equivariant")
{
  std::mt19937_64 rng(17);
  auto g = named_group("S:5");
  auto elements = g.elements();
  for (int round = 0; round < 6; ++round) {
    auto x = elements[rng() % elements.size()];
    auto h = elements[rng() % elements.size()];
    auto sub = subnormalizer_subgroup(g, x);
    std::vector<Perm> gens;
    for (auto const &s : sub.generators())
      gens.push_back(s.conjugate_by(h));
    CHECK(PermGroup(g.degree(), gens) == subnormalizer_subgroup(g, x.conjugate_by(h)));
  }
}

TEST_CASE("picky reports")
{
  auto s4 = named_group("S:4");
  auto r = picky_report(s4, 2, P("(1,2,3,4)", 4));
  CHECK(r.is_picky);
  CHECK(r.sylow_count == 1);
  CHECK(r.sub_group.order() == 8);
  CHECK(r.sub_group == r.normalizer);
  auto r2 = picky_report(s4, 2, P("(1,2)(3,4)", 4));
  CHECK_FALSE(r2.is_picky);
  CHECK(r2.sylow_count == 3);
  CHECK_THROWS_AS(picky_report(s4, 2, P("(1,2,3)", 4)), InvalidArgument);
  CHECK(picky_to_json(r)["sub_order"] == "8");
}

TEST_CASE("subnormalizer containment and picky equality across groups")
{
  for (std::string name : {"S:3", "S:4", "A:4", "D:8", "D:10", "Q:8", "A:5", "wr:S:2~C:2", "C:6"}) {
    auto g = named_group(name);
    ConjugacyClasses cc(g);
    for (auto p : prime_divisors(g.order_u64())) {
      auto sys = sylow_system(g, p);
      for (auto const &c : cc.classes()) {
        if (!is_p_element(c.representative, p))
          continue;
        // picky_report throws on any violation
        auto r = picky_report(g, sys, c.representative);
        CHECK(r.normalizer.is_subgroup_of(r.sub_group));
        CHECK(r.is_picky == (r.normalizer == r.sub_group));
      }
      auto cov = covering_analysis(sys, cc);
      CHECK(cov.consistent());
    }
  }
}

TEST_CASE("covering analysis fixtures")
{
  auto cov = covering_analysis(named_group("S:4"), 2);
  CHECK(cov.all_sylows_needed);
  CHECK(cov.picky_exists);
  CHECK(covering_analysis(named_group("S:4"), 3).picky_exists);
  CHECK(covering_analysis(named_group("A:4"), 2).picky_exists);
}

TEST_CASE("chain lengths")
{
  auto s4 = named_group("S:4");
  auto sys = sylow_system(s4, 2);
  CHECK(chain_length(s4, sys.normalizer) == 1);
  CHECK(chain_length(s4, s4) == 0);
  CHECK(chain_length(s4, PermGroup::trivial(4)) == 4); // 1 < C2 < V4 < D8 < S4
  for (std::string name : {"S:4", "A:5", "A:4", "D:12"}) {
    auto g = named_group(name);
    for (auto p : prime_divisors(g.order_u64())) {
      auto s = sylow_system(g, p);
      CHECK(chain_length(g, s.normalizer) == lattice_chain(g, s.normalizer));
      CHECK(chain_length(g, s.sylow) == lattice_chain(g, s.sylow));
    }
  }
}

TEST_CASE("subnormalizer of a 4-cycle in S8 is S4 wr C2")
{
  // the 8-cycle in S16 scaled down: x moves the first block only
  auto s8 = named_group("S:8");
  auto x = Perm::parse("(1,2,3,4)", 8);
  auto sub = subnormalizer_subgroup(s8, x);
  CHECK(sub.order() == 1152);
  CHECK(sub == named_group("wr:S:4~C:2"));
  CHECK_FALSE(subnormalizer_set(s8, x).size() == 1152);
}
