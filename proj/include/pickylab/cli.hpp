#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pickylab/conjectures.hpp"

namespace pickylab {

struct CatalogEntry
{
  std::string label;
  std::string source;                // named constructor or generator file
  std::vector<std::uint64_t> primes; // empty: every prime dividing |G|
};

struct Catalog
{
  std::filesystem::path base_dir; // generator files resolve against this
  std::vector<CatalogEntry> entries;
};

/// {"format": 1, "entries": [{"label", "source", "primes"?}]}. Throws
/// ParseError naming the offending field; duplicate labels are rejected.
Catalog load_catalog(std::filesystem::path const &path);
Catalog parse_catalog(nlohmann::json const &j, std::filesystem::path const &base_dir = {});

PermGroup resolve_entry(Catalog const &c, CatalogEntry const &e);

/// Reports of check all for one entry: every prime (explicit or dividing
/// |G|), with skips whose hypothesis is unmet left out.
std::vector<CheckReport> check_entry(Catalog const &c, CatalogEntry const &e, Limits const &limits = {});

/// batch output: reports of every entry in catalog order; jobs > 1 fans the
/// entries out over threads without changing the result.
nlohmann::json run_batch(Catalog const &c, unsigned jobs = 1, bool timings = false, Limits const &limits = {},
                         std::optional<std::filesystem::path> cache_dir = std::nullopt);

/// 0 all holds, 1 some fails, 3 some skipped and none failed.
int exit_code_for(std::vector<CheckReport> const &reports);
int exit_code_for(nlohmann::json const &report_array);

/// The pickylab command line. Exit 2 on usage, parse, scale and engine errors.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);
int run(int argc, char const *const *argv);

} // namespace pickylab
