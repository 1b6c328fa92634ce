#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pickylab/permgroup.hpp"

namespace pickylab {

/// Named constructors:
///   S:n, A:n, C:n     symmetric, alternating, cyclic on n points
///   D:2n              dihedral of order 2n on n points (D:4 is the Klein group, D:2 is C2)
///   Q:8               quaternion group, regular on 8 points
///   wr:X~C:2          X wr C2 on 2 deg(X) points (X is any named group)
/// Throws ParseError for anything else.
PermGroup named_group(std::string_view name);

bool is_named_group(std::string_view name);

/// One permutation per line in cycle notation; blank lines and '#' comments
/// are ignored. The degree is the largest point mentioned (at least 1).
PermGroup parse_generator_text(std::string_view text);

PermGroup read_generator_file(std::filesystem::path const &path);

/// A named constructor, or else a generator file path (relative paths are
/// resolved against base_dir).
PermGroup resolve_group(std::string_view source, std::filesystem::path const &base_dir = {});

} // namespace pickylab
