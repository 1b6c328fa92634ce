#include <map>
#include <set>

#include "doctest.h"

#include "pickylab/chartab.hpp"
#include "pickylab/errors.hpp"
#include "pickylab/groups.hpp"
#include "pickylab/symfast.hpp"

using namespace pickylab;

namespace {

std::vector<std::size_t> type(std::initializer_list<std::size_t> parts, std::size_t ones)
{
  std::vector<std::size_t> t(parts);
  t.insert(t.end(), ones, 1);
  return t;
}

std::int64_t brute_fixed_points(std::vector<std::size_t> const &mu)
{
  return std::count(mu.begin(), mu.end(), 1u);
}


Partition conjugate_partition(Partition const &l)
{
  Partition c;
  for (unsigned j = 0; !l.empty() && j < l[0]; ++j)
    c.push_back(static_cast<unsigned>(std::count_if(l.begin(), l.end(), [&](unsigned x) { return x > j; })));
  return c;
}

std::uint64_t hook_degree(Partition const &l)
{
  auto c = conjugate_partition(l);
  unsigned n = 0;
  for (auto x : l)
    n += x;
  // n! / prod(hooks), exact in 128 bits for n <= 16
  unsigned __int128 num = 1, den = 1;
  for (unsigned i = 2; i <= n; ++i)
    num *= i;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (unsigned j = 0; j < l[i]; ++j)
      den *= (l[i] - j) + (c[j] - i) - 1;
  }
  return static_cast<std::uint64_t>(num / den);
}

// chi_l at a k-cycle times identity, via the beta-set of l
std::int64_t value_by_one_hook(Partition const &l, unsigned k)
{
  std::size_t const len = l.size();
  std::vector<long> beta;
  for (std::size_t i = 0; i < len; ++i)
    beta.push_back(static_cast<long>(l[i] + (len - 1 - i)));
  std::int64_t total = 0;
  for (auto b : beta) {
    long const nb = b - static_cast<long>(k);
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end())
      continue;
    int const crossed = static_cast<int>(std::count_if(beta.begin(), beta.end(), [&](long c) { return nb < c && c < b; }));
    std::vector<long> moved;
    for (auto c : beta)
      moved.push_back(c == b ? nb : c);
    std::sort(moved.rbegin(), moved.rend());
    Partition rest;
    for (std::size_t i = 0; i < len; ++i) {
      long const part = moved[i] - static_cast<long>(len - 1 - i);
      if (part > 0)
        rest.push_back(static_cast<unsigned>(part));
    }
    auto const f = static_cast<std::int64_t>(hook_degree(rest));
    total += crossed % 2 ? -f : f;
  }
  return total;
}

} // namespace

TEST_CASE("partition counts")
{
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(8).size() == 22);
  CHECK(partitions(16).size() == 231);
  CHECK(partitions(5).front() == Partition{5});
  CHECK(partitions(5).back() == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("Murnaghan-Nakayama fixtures")
{
  CHECK(mn_value({16}, type({8}, 8)) == 1);
  CHECK(mn_value(Partition(16, 1), type({8}, 8)) == -1);
  CHECK(mn_value({15, 1}, type({8}, 8)) == 7);
  CHECK(mn_value({7, 1}, {8}) == -1);
  CHECK_THROWS_AS(mn_value({3}, {2}), InvalidArgument);
  CHECK_THROWS_AS(mn_value({1, 2}, {3}), InvalidArgument);

  // standard character: fixed points minus one
  for (auto const &mu : partitions(7)) {
    std::vector<std::size_t> m(mu.begin(), mu.end());
    CHECK(mn_value({6, 1}, m) == brute_fixed_points(m) - 1);
  }
}

TEST_CASE("degrees")
{
  CHECK(degree({16}) == 1);
  CHECK(degree({15, 1}) == 15);
  CHECK(degree({2, 1}) == 2);
  for (unsigned n = 1; n <= 16; ++n) {
    Integer sum = 0, fact = 1;
    for (unsigned i = 2; i <= n; ++i)
      fact *= i;
    for (auto const &lambda : partitions(n)) {
      Integer d = degree(lambda);
      sum += d * d;
      if (n <= 12)
        CHECK(mn_value(lambda, std::vector<std::size_t>(n, 1)) == d.get_si());
    }
    CHECK(sum == fact);
  }
}

TEST_CASE("column orthogonality of the symmetric tables")
{
  for (unsigned n = 1; n <= 9; ++n) {
    auto parts = partitions(n);
    for (auto const &a : parts) {
      for (auto const &b : parts) {
        std::vector<std::size_t> ma(a.begin(), a.end()), mb(b.begin(), b.end());
        std::int64_t s = 0;
        for (auto const &l : parts)
          s += mn_value(l, ma) * mn_value(l, mb);
        if (a != b)
          CHECK(s == 0);
        else
          CHECK(s > 0);
      }
    }
  }
}

TEST_CASE("wreath labels and degrees")
{
  auto labels = wreath_labels(8);
  CHECK(labels.size() == 275);
  Integer sum = 0;
  for (auto const &l : labels)
    sum += wreath_degree(l) * wreath_degree(l);
  Integer f8 = 40320;
  CHECK(sum == 2 * f8 * f8);

  WreathLabel pair{{8}, Partition(8, 1), 0};
  CHECK(wreath_value_at_base(pair, {8}, type({}, 8)) == 0);
  WreathLabel diag{{8}, {}, 0};
  CHECK(wreath_value_at_base(diag, {8}, type({}, 8)) == 1);
  CHECK(wreath_degree(diag) == 1);
  WreathLabel mixed{{8}, {7, 1}, 0};
  CHECK(wreath_value_at_base(mixed, {8}, type({}, 8)) == 6);

  auto x = Perm::parse("(1,2,3,4,5,6,7,8)", 16);
  CHECK(wreath_value_at_base(mixed, x) == 6);
  CHECK_THROWS_AS(wreath_value_at_base(mixed, Perm::parse("(1,9)", 16)), InvalidArgument);
}

TEST_CASE("wreath values agree with the generic table of S_3 wr C_2")
{
  auto g = named_group("wr:S:3~C:2");
  auto t = character_table(g);
  auto labels = wreath_labels(3);
  REQUIRE(labels.size() == t.size());
  // every base class column of the generic table is matched by the symfast labels as a multiset
  for (std::size_t j = 0; j < t.size(); ++j) {
    auto const &rep = t.classes()[j].representative;
    bool in_base = true;
    for (std::size_t i = 0; i < 6; ++i)
      in_base = in_base && ((i < 3) == (rep[i] < 3));
    if (!in_base)
      continue;
    std::multiset<std::pair<std::int64_t, std::int64_t>> generic, fast;
    for (std::size_t i = 0; i < t.size(); ++i)
      generic.insert({static_cast<std::int64_t>(t.degree(i)), t.value(i, j).to_rational().get_num().get_si()});
    for (auto const &l : labels)
      fast.insert({wreath_degree(l).get_si(), wreath_value_at_base(l, rep)});
    CHECK(generic == fast);
  }
}

TEST_CASE("S16 at an 8-cycle against the wreath product")
{
  auto r = table1_report(8);
  CHECK(r.equal());
  CHECK(r.nonvanishing() == 152);

  // oracle: one 8-hook removed by hand, degrees from the hook formula
  std::map<std::pair<std::int64_t, std::uint64_t>, std::uint64_t> brute;
  for (auto const &l : partitions(16)) {
    auto v = value_by_one_hook(l, 8);
    if (v == 0)
      continue;
    auto d = hook_degree(l);
    brute[{std::abs(v), d & (~d + 1)}]++;
  }
  std::map<std::pair<std::int64_t, std::uint64_t>, std::uint64_t> got;
  for (auto const &row : r.symmetric)
    got[{row.value, row.two_part}] += row.multiplicity;
  CHECK(got == brute);

  CHECK(got[{1, 1}] == 4);
  CHECK(got[{7, 1}] == 4);
  CHECK(got[{64, 128}] == 16);
  CHECK(table1_to_json(r)["verdict"] == "equal");
  CHECK(table1_csv(r).rfind("value,2-part,multiplicity\n1,1,4\n", 0) == 0);
}

TEST_CASE("odd multiplicities need self-conjugate partitions")
{
  // lambda -> lambda' keeps the degree and |chi(x)|, so every row with an odd
  // multiplicity contains a self-conjugate partition
  std::size_t self_conjugate = 0;
  for (auto const &l : partitions(16))
    self_conjugate += conjugate_partition(l) == l;
  CHECK(self_conjugate == 5);

  auto r = table1_report(8);
  std::size_t odd_rows = 0;
  for (auto const &row : r.symmetric)
    odd_rows += row.multiplicity % 2;
  CHECK(odd_rows <= self_conjugate);
}
