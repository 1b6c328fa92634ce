#include <map>

#include "doctest.h"
#include "support.hpp"

#include "pickylab/errors.hpp"
#include "pickylab/permgroup.hpp"

using namespace pickylab;

namespace {

PermGroup make(std::size_t n, std::vector<std::string> const &gens)
{
  std::vector<Perm> perms;
  for (auto const &g : gens)
    perms.push_back(Perm::parse(g, n));
  return PermGroup(n, perms);
}

PermGroup sym(std::size_t n)
{
  if (n == 1)
    return PermGroup::trivial(1);
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i)
    cycle += std::to_string(i) + (i < n ? "," : ")");
  return make(n, {"(1,2)", cycle});
}

} // namespace

TEST_CASE("permutation parsing and printing")
{
  auto p = Perm::parse("(1,3,2)(4 5)", 6);
  CHECK(p.str() == "(1,3,2)(4,5)");
  CHECK(p.order() == 6);
  CHECK(p.cycle_type() == std::vector<std::size_t>{3, 2, 1});
  CHECK(Perm::parse("()", 3).is_identity());
  CHECK(Perm::parse("", 3).str() == "()");
  CHECK(Perm::max_point("(2,9)") == 9);
  CHECK_THROWS_AS(Perm::parse("(1,2", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1,2)(2,3)", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(0,1)", 3), ParseError);
}

TEST_CASE("products act on the right")
{
  auto a = Perm::parse("(1,2)", 3);
  auto b = Perm::parse("(2,3)", 3);
  // 1 -> 2 -> 3
  CHECK((a * b)[0] == 2);
  CHECK((a * b).str() == "(1,3,2)");
  CHECK(a.conjugate_by(b) == b.inverse() * a * b);
  CHECK(a.conjugate_by(b).str() == "(1,3)");
}

TEST_CASE("powers and p-parts (random)")
{
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    auto g = testsupport::random_perm(rng, 1 + rng() % 12);
    auto o = static_cast<std::int64_t>(g.order());
    Perm slow(g.degree());
    for (std::int64_t e = 0; e < 5; ++e) {
      CHECK(g.pow(e) == slow);
      CHECK(g.pow(-e) == slow.inverse());
      slow = slow * g;
    }
    CHECK(g.pow(o).is_identity());
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      auto gp = p_part(g, p);
      CHECK(is_p_element(gp, p));
      auto rest = g * gp.inverse();
      CHECK(rest * gp == gp * rest);
      CHECK(rest.order() % p != 0);
    }
  }
}

TEST_CASE("orders of familiar groups")
{
  CHECK(sym(1).order() == 1);
  CHECK(sym(3).order() == 6);
  CHECK(sym(6).order() == 720);
  CHECK(sym(10).order() == 3628800);
  CHECK(make(4, {"(1,2,3,4)", "(1,3)"}).order() == 8);
  CHECK(make(8, {"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"}).order() == 8);
  CHECK(PermGroup::trivial(5).is_trivial());
}

TEST_CASE("stabilizer chain agrees with brute-force closure (random)")
{
  std::mt19937_64 rng(99);
  for (int round = 0; round < 60; ++round) {
    std::size_t n = 2 + rng() % 6;
    std::vector<Perm> gens;
    std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      auto g = testsupport::random_perm(rng, n);
      // bias toward proper subgroups
      if (rng() % 2)
        g = g.pow(2);
      gens.push_back(g);
    }
    PermGroup G(n, gens);
    auto all = testsupport::brute_closure(n, gens);
    REQUIRE(G.order() == static_cast<unsigned long>(all.size()));

    std::set<Perm> enumerated;
    std::uint64_t r = 0;
    G.for_each_element([&](Perm const &e) {
      CHECK(G.rank(e) == r);
      CHECK(G.unrank(r) == e);
      enumerated.insert(e);
      ++r;
    });
    CHECK(enumerated == all);

    auto outsider = testsupport::random_perm(rng, n);
    CHECK(G.contains(outsider) == (all.count(outsider) > 0));
  }
}

TEST_CASE("conjugacy classes of S4")
{
  ConjugacyClasses cc(sym(4));
  std::multiset<std::uint64_t> sizes;
  for (auto const &c : cc.classes())
    sizes.insert(c.size);
  CHECK(sizes == std::multiset<std::uint64_t>{1, 3, 6, 8, 6});
  CHECK(cc[0].representative.is_identity());
  CHECK(cc.power_class(cc.class_of(Perm::parse("(1,2,3,4)", 4)), 2) ==
        cc.class_of(Perm::parse("(1,2)(3,4)", 4)));
}

TEST_CASE("class sizes agree with brute-force conjugation (random)")
{
  std::mt19937_64 rng(5);
  for (int round = 0; round < 25; ++round) {
    std::size_t n = 3 + rng() % 4;
    PermGroup G(n, {testsupport::random_perm(rng, n), testsupport::random_perm(rng, n)});
    ConjugacyClasses cc(G);
    auto elements = G.elements();
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < cc.size(); ++c) {
      std::set<Perm> orbit;
      for (auto const &x : elements)
        orbit.insert(cc[c].representative.conjugate_by(x));
      CHECK(orbit.size() == cc[c].size);
      CHECK(*orbit.begin() == cc[c].representative);
      total += cc[c].size;
      CHECK(centralizer(G, cc[c].representative).order() * cc[c].size == G.order());
    }
    CHECK(total == G.order_u64());
  }
}

TEST_CASE("normal closures and derived series")
{
  auto s4 = sym(4);
  auto d = derived_series(s4);
  CHECK(d.solvable);
  CHECK(d.length == 3);
  CHECK(d.terms[1].order() == 12);
  CHECK(d.terms[2].order() == 4);
  CHECK(derived_length(sym(3)) == 2);
  auto s5 = derived_series(sym(5));
  CHECK_FALSE(s5.solvable);
  CHECK(s5.terms.back().order() == 60);
  CHECK_THROWS_AS(derived_length(sym(5)), InvalidArgument);

  auto v = make(4, {"(1,2)(3,4)"});
  CHECK(normal_closure(s4, v).order() == 4);
  CHECK(normal_closure(s4, make(4, {"(1,2)"})).order() == 24);
}

TEST_CASE("normalizers and subgroup predicates")
{
  auto s4 = sym(4);
  auto c4 = make(4, {"(1,2,3,4)"});
  CHECK(normalizer(s4, c4).order() == 8);
  CHECK(c4.is_normal_in(normalizer(s4, c4)));
  CHECK_THROWS_AS(normalizer(c4, s4), InvalidArgument);
  CHECK(make(4, {"(1,2)(3,4)", "(1,3)(2,4)"}).is_normal_in(s4));
  CHECK(make(4, {"(1,2)", "(1,2)(3,4)"}) == make(4, {"(3,4)", "(1,2)"}));
}

TEST_CASE("Sylow subgroups and counts")
{
  struct Case
  {
    std::size_t n;
    std::uint64_t p, order, count;
  };
  for (auto const &[n, p, order, count] : std::vector<Case>{
         {3, 2, 2, 3}, {3, 3, 3, 1}, {4, 2, 8, 3}, {4, 3, 3, 4}, {5, 5, 5, 6}, {5, 2, 8, 15}, {6, 3, 9, 10}}) {
    auto G = sym(n);
    auto sys = sylow_system(G, p);
    CHECK(sys.sylow.order() == order);
    CHECK(sys.count() == count);
    CHECK(sys.count() % p == 1);
    for (std::size_t i = 0; i < sys.count(); ++i)
      CHECK(sys.members[i].size() == order);
  }
}

TEST_CASE("Sylow counts containing an element match brute force")
{
  auto G = sym(4);
  auto sys = sylow_system(G, 2);
  for (auto const &x : p_elements(G, 2)) {
    auto const r = G.rank(x);
    std::uint64_t brute = 0;
    for (auto const &m : sys.members)
      brute += std::binary_search(m.begin(), m.end(), r);
    CHECK(sylow_count_containing(sys, x) == brute);
  }
  CHECK(sylow_count_containing(G, 2, Perm::parse("(1,2,3,4)", 4)) == 1);
  CHECK(sylow_count_containing(G, 2, Perm::parse("(1,2)(3,4)", 4)) == 3);
  CHECK_THROWS_AS(sylow_count_containing(G, 2, Perm::parse("(1,2,3)", 4)), InvalidArgument);
}

TEST_CASE("TI Sylow subgroups")
{
  CHECK(is_ti_sylow(sym(3), 2));
  CHECK(is_ti_sylow(sym(3), 3));
  CHECK_FALSE(is_ti_sylow(sym(4), 2));
  CHECK(is_ti_sylow(sym(4), 3));
  CHECK(is_ti_sylow(sym(5), 5));
  CHECK_FALSE(is_ti_sylow(sym(5), 2));
  CHECK(is_ti_sylow(sym(4), 5)); // trivial Sylow
}
