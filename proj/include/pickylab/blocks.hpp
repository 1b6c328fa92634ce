#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "pickylab/chartab.hpp"

namespace pickylab {

struct Block
{
  std::vector<std::size_t> characters; // sorted row indices
  std::vector<unsigned> heights;       // aligned with characters
  unsigned defect = 0;
  bool principal = false;

  /// ht(B): distinct heights, sorted.
  std::vector<unsigned> height_set() const;
};

struct BlockPartition
{
  std::uint64_t prime = 0;
  unsigned a = 0; // nu_p(|G|)
  std::vector<Block> blocks; // ordered by smallest member; blocks[0] is principal
  std::vector<std::size_t> block_of; // by character

  Block const &principal() const { return blocks.front(); }
};

/// Connected components of the graph on Irr(G) with chi ~ psi when the sum
/// over p-regular classes of |C| chi(g) psi(g^-1) is nonzero.
BlockPartition block_partition(CharacterTable const &t, std::uint64_t p);

Block const &principal_block(BlockPartition const &bp);
std::vector<unsigned> height_set(Block const &b);

nlohmann::json blocks_to_json(CharacterTable const &t, BlockPartition const &bp);

} // namespace pickylab
