#pragma once

#include <cstdint>

namespace pickylab {

/// Scale bounds. Operations that would exceed one throw ResourceError.
struct Limits
{
  /// Largest group whose elements may be enumerated (class maps, filters).
  std::uint64_t max_enumeration = 2'000'000;
  /// Largest group handed to the generic character table algorithm.
  std::uint64_t max_table_order = 100'000;
  std::uint64_t max_table_classes = 400;
  /// Element-wise subnormalizer computation.
  std::uint64_t max_subnormalizer_order = 50'000;
  /// Overgroup enumeration for subgroup chain lengths.
  std::uint64_t max_chain_order = 10'000;
};

} // namespace pickylab
