#include "doctest.h"
#include "support.hpp"

#include "pickylab/blocks.hpp"
#include "pickylab/groups.hpp"
#include "pickylab/numtheory.hpp"

using namespace pickylab;

namespace {

/// Blocks from element-wise sums over p-regular elements.
std::vector<std::set<std::size_t>> brute_blocks(CharacterTable const &t, std::uint64_t p)
{
  std::size_t const k = t.size();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  std::vector<Perm> regular;
  t.group().for_each_element([&](Perm const &g) {
    if (g.order() % p != 0)
      regular.push_back(g);
  });
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      Cyclotomic s;
      for (auto const &g : regular)
        s += t.value_at(i, g) * t.value_at(l, g.inverse());
      adj[i][l] = !s.is_zero();
    }
  }
  std::vector<std::set<std::size_t>> comps;
  std::vector<bool> done(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (done[i])
      continue;
    std::set<std::size_t> comp{i};
    std::vector<std::size_t> stack{i};
    done[i] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < k; ++w) {
        if (adj[v][w] && !done[w]) {
          done[w] = true;
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

} // namespace

TEST_CASE("S3 block fixtures")
{
  auto t = character_table(named_group("S:3"));
  auto b2 = block_partition(t, 2);
  REQUIRE(b2.blocks.size() == 2);
  CHECK(b2.principal().characters == std::vector<std::size_t>{0, 1});
  CHECK(b2.principal().defect == 1);
  CHECK(b2.principal().heights == std::vector<unsigned>{0, 0});
  CHECK(b2.blocks[1].characters == std::vector<std::size_t>{2});
  CHECK(b2.blocks[1].defect == 0);

  auto b3 = block_partition(t, 3);
  REQUIRE(b3.blocks.size() == 1);
  CHECK(b3.principal().defect == 1);
  CHECK(b3.principal().heights == std::vector<unsigned>{0, 0, 0});
  CHECK(height_set(principal_block(b3)) == std::vector<unsigned>{0});

  auto b5 = block_partition(t, 5);
  CHECK(b5.blocks.size() == 3);
  for (auto const &b : b5.blocks)
    CHECK(b.defect == 0);
}

TEST_CASE("S4 principal 2-block")
{
  auto t = character_table(named_group("S:4"));
  auto bp = block_partition(t, 2);
  // S4 has a single 2-block
  CHECK(bp.blocks.size() == 1);
  CHECK(bp.principal().defect == 3);
  CHECK(bp.principal().height_set() == std::vector<unsigned>{0, 1});
}

TEST_CASE("block invariants and element-wise oracle")
{
  for (std::string name : {"S:4", "A:4", "A:5", "D:8", "D:12", "Q:8", "C:6", "S:5", "wr:S:2~C:2"}) {
    auto g = named_group(name);
    auto t = character_table(g);
    for (auto p : prime_divisors(g.order_u64())) {
      CAPTURE(name);
      CAPTURE(p);
      auto bp = block_partition(t, p);
      std::vector<std::set<std::size_t>> got;
      for (auto const &b : bp.blocks)
        got.emplace_back(b.characters.begin(), b.characters.end());
      CHECK(got == brute_blocks(t, p));

      std::size_t covered = 0;
      for (auto const &b : bp.blocks) {
        covered += b.characters.size();
        CHECK(b.height_set().front() == 0);
        if (b.defect == 0) {
          CHECK(b.characters.size() == 1);
          CHECK(ipow(p, valuation(t.degree(b.characters[0]), p)) == ipow(p, bp.a));
        }
        for (std::size_t i = 0; i < b.characters.size(); ++i)
          CHECK(valuation(t.degree(b.characters[i]), p) == bp.a - b.defect + b.heights[i]);
      }
      CHECK(covered == t.size());
      CHECK(bp.principal().defect == bp.a);
      CHECK(bp.block_of[0] == 0);
    }
    auto trivial = block_partition(t, 101);
    CHECK(trivial.blocks.size() == t.size());
  }
}
