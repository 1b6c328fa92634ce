#include "pickylab/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "pickylab/errors.hpp"
#include "pickylab/numtheory.hpp"

namespace pickylab {

std::vector<unsigned> Block::height_set() const
{
  std::vector<unsigned> h = heights;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return h;
}

namespace {

struct DisjointSets
{
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace

BlockPartition block_partition(CharacterTable const &t, std::uint64_t p)
{
  if (!is_prime(p))
    throw InvalidArgument("block_partition: " + std::to_string(p) + " is not prime");

  auto const &cls = t.classes().classes();
  std::size_t const k = t.size();

  BlockPartition bp;
  bp.prime = p;
  bp.a = valuation(t.group().order_u64(), p);

  std::vector<std::size_t> regular;
  for (std::size_t j = 0; j < cls.size(); ++j) {
    if (cls[j].element_order % p != 0)
      regular.push_back(j);
  }

  // psi(g^-1) two ways: inverse class from the power map, and complex conjugation
  std::vector<std::vector<Cyclotomic>> at_inverse(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (auto j : regular) {
      Cyclotomic const &via_power = t.value(i, t.inverse_class(j));
      if (via_power != t.value(i, j).conj())
        throw EngineError("value at the inverse class differs from the complex conjugate");
      at_inverse[i].push_back(via_power);
    }
  }

  DisjointSets sets(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = i + 1; l < k; ++l) {
      if (sets.find(i) == sets.find(l))
        continue;
      Cyclotomic s;
      for (std::size_t r = 0; r < regular.size(); ++r) {
        std::size_t const j = regular[r];
        s += Cyclotomic(Rational(static_cast<long>(cls[j].size))) * t.value(i, j) * at_inverse[l][r];
      }
      if (!s.is_zero())
        sets.unite(i, l);
    }
  }

  bp.block_of.assign(k, 0);
  std::vector<std::size_t> index_of_root(k, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t const root = sets.find(i);
    if (index_of_root[root] == static_cast<std::size_t>(-1)) {
      index_of_root[root] = bp.blocks.size();
      bp.blocks.emplace_back();
    }
    bp.block_of[i] = index_of_root[root];
    bp.blocks[index_of_root[root]].characters.push_back(i);
  }

  for (auto &b : bp.blocks) {
    unsigned min_nu = bp.a;
    for (auto i : b.characters)
      min_nu = std::min(min_nu, valuation(t.degree(i), p));
    b.defect = bp.a - min_nu;
    for (auto i : b.characters)
      b.heights.push_back(valuation(t.degree(i), p) - min_nu);
    if (std::find(b.heights.begin(), b.heights.end(), 0u) == b.heights.end())
      throw EngineError("block without a character of height zero");
  }
  bp.blocks.front().principal = true;
  if (bp.blocks.front().defect != bp.a)
    throw EngineError("principal block defect differs from nu_p(|G|)");
  return bp;
}

Block const &principal_block(BlockPartition const &bp)
{
  return bp.principal();
}

std::vector<unsigned> height_set(Block const &b)
{
  return b.height_set();
}

nlohmann::json blocks_to_json(CharacterTable const &t, BlockPartition const &bp)
{
  nlohmann::json blocks = nlohmann::json::array();
  for (auto const &b : bp.blocks) {
    std::vector<std::uint64_t> degrees;
    for (auto i : b.characters)
      degrees.push_back(t.degree(i));
    blocks.push_back({{"characters", b.characters},
                      {"degrees", degrees},
                      {"defect", b.defect},
                      {"heights", b.heights},
                      {"principal", b.principal}});
  }
  return {{"format", 1},
          {"prime", bp.prime},
          {"a", bp.a},
          {"order", t.group().order().get_str()},
          {"blocks", std::move(blocks)}};
}

} // namespace pickylab
