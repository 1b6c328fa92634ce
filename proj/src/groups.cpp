#include "pickylab/groups.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pickylab/errors.hpp"

namespace pickylab {

namespace {

std::size_t parse_count(std::string_view text, std::string_view whole)
{
  std::size_t v = 0;
  auto const *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty())
    throw ParseError("unknown group label '" + std::string(whole) + "'");
  return v;
}

Perm cycle_on(std::size_t degree, std::size_t first, std::size_t length)
{
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < length; ++i)
    images[first + i] = static_cast<Point>(first + (i + 1) % length);
  return Perm(images);
}

void require_degree(std::size_t n, std::string_view whole)
{
  if (n == 0 || n > 1000)
    throw ParseError("degree out of range in '" + std::string(whole) + "' (need 1..1000)");
}

PermGroup symmetric(std::size_t n)
{
  if (n < 2)
    return PermGroup::trivial(n);
  return PermGroup(n, {cycle_on(n, 0, 2), cycle_on(n, 0, n)});
}

PermGroup alternating(std::size_t n)
{
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> images(n);
    for (std::size_t j = 0; j < n; ++j)
      images[j] = static_cast<Point>(j);
    images[0] = 1;
    images[1] = static_cast<Point>(i);
    images[i] = 0;
    gens.emplace_back(images);
  }
  return PermGroup(n, gens);
}

PermGroup dihedral(std::size_t order, std::string_view whole)
{
  if (order == 0 || order % 2 != 0)
    throw ParseError("dihedral group order must be even in '" + std::string(whole) + "'");
  std::size_t const n = order / 2;
  if (n == 1)
    return PermGroup(2, {cycle_on(2, 0, 2)});
  if (n == 2)
    return PermGroup(4, {Perm::parse("(1,2)(3,4)", 4), Perm::parse("(1,3)(2,4)", 4)});
  require_degree(n, whole);
  // reflection fixing point 1: i -> 2 - i mod n
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_on(n, 0, n), Perm(images)});
}

PermGroup wreath_with_c2(PermGroup const &base)
{
  std::size_t const n = base.degree();
  std::vector<Perm> gens;
  for (auto const &g : base.generators()) {
    std::vector<Point> images(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
      images[i] = static_cast<Point>(i < n ? g[i] : i);
    gens.emplace_back(images);
  }
  std::vector<Point> swap(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = static_cast<Point>(n + i);
    swap[n + i] = static_cast<Point>(i);
  }
  gens.emplace_back(swap);
  return PermGroup(2 * n, gens);
}

} // namespace

PermGroup named_group(std::string_view name)
{
  if (name.starts_with("wr:")) {
    auto const tilde = name.rfind('~');
    if (tilde == std::string_view::npos || name.substr(tilde + 1) != "C:2")
      throw ParseError("unknown group label '" + std::string(name) + "' (expected wr:X~C:2)");
    auto base = named_group(name.substr(3, tilde - 3));
    require_degree(2 * base.degree(), name);
    return wreath_with_c2(base);
  }
  if (name == "Q:8") {
    return PermGroup(8, {Perm::parse("(1,2,4,7)(3,6,8,5)", 8), Perm::parse("(1,3,4,8)(2,5,7,6)", 8)});
  }
  if (name.size() < 3 || name[1] != ':')
    throw ParseError("unknown group label '" + std::string(name) + "'");
  std::size_t const n = parse_count(name.substr(2), name);
  switch (name[0]) {
  case 'S':
    require_degree(n, name);
    return symmetric(n);
  case 'A':
    require_degree(n, name);
    return alternating(n);
  case 'C':
    require_degree(n, name);
    return n == 1 ? PermGroup::trivial(1) : PermGroup(n, {cycle_on(n, 0, n)});
  case 'D':
    return dihedral(n, name);
  default:
    throw ParseError("unknown group label '" + std::string(name) + "'");
  }
}

bool is_named_group(std::string_view name)
{
  try {
    named_group(name);
    return true;
  } catch (ParseError const &) {
    return false;
  }
}

PermGroup parse_generator_text(std::string_view text)
{
  std::vector<std::string> lines;
  std::size_t degree = 1;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      degree = std::max(degree, Perm::max_point(line));
    } catch (ParseError const &e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    lines.push_back(line);
  }
  std::vector<Perm> gens;
  for (auto const &l : lines)
    gens.push_back(Perm::parse(l, degree));
  return PermGroup(degree, gens);
}

PermGroup read_generator_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read generator file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_generator_text(buffer.str());
  } catch (ParseError const &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

PermGroup resolve_group(std::string_view source, std::filesystem::path const &base_dir)
{
  std::filesystem::path path(source);
  if (path.is_relative() && !base_dir.empty())
    path = base_dir / path;
  try {
    return named_group(source);
  } catch (ParseError const &e) {
    if (!std::filesystem::is_regular_file(path))
      throw ParseError(std::string(e.what()) + "; no generator file of that name either");
  }
  return read_generator_file(path);
}

} // namespace pickylab
