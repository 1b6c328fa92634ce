#include "pickylab/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "pickylab/blocks.hpp"
#include "pickylab/chartab.hpp"
#include "pickylab/errors.hpp"
#include "pickylab/groups.hpp"
#include "pickylab/numtheory.hpp"
#include "pickylab/subnorm.hpp"
#include "pickylab/symfast.hpp"

namespace pickylab {

using nlohmann::json;
namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// catalog

Catalog parse_catalog(json const &j, fs::path const &base_dir)
{
  if (!j.is_object())
    throw ParseError("catalog: top level must be an object");
  if (!j.contains("format") || j["format"] != 1)
    throw ParseError("catalog: field 'format' must be 1");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw ParseError("catalog: field 'entries' must be an array");

  Catalog c;
  c.base_dir = base_dir;
  std::set<std::string> labels;
  auto const &entries = j["entries"];
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto const &e = entries[i];
    std::string const where = "catalog: entries[" + std::to_string(i) + "]";
    if (!e.is_object())
      throw ParseError(where + ": must be an object");
    for (auto const &[key, _] : e.items()) {
      if (key != "label" && key != "source" && key != "primes")
        throw ParseError(where + ": unknown field '" + key + "'");
    }
    for (char const *field : {"label", "source"}) {
      if (!e.contains(field) || !e[field].is_string() || e[field].get<std::string>().empty())
        throw ParseError(where + ": field '" + field + "' must be a nonempty string");
    }
    CatalogEntry entry;
    entry.label = e["label"];
    entry.source = e["source"];
    if (e.contains("primes")) {
      if (!e["primes"].is_array())
        throw ParseError(where + ": field 'primes' must be an array");
      for (auto const &p : e["primes"]) {
        if (!p.is_number_unsigned() || !is_prime(p.get<std::uint64_t>()))
          throw ParseError(where + ": field 'primes' must hold primes, got " + p.dump());
        entry.primes.push_back(p);
      }
    }
    if (!labels.insert(entry.label).second)
      throw ParseError(where + ": duplicate label '" + entry.label + "'");
    c.entries.push_back(std::move(entry));
  }
  return c;
}

Catalog load_catalog(fs::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("catalog: cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (json::parse_error const &e) {
    throw ParseError("catalog: " + path.string() + ": " + e.what());
  }
  return parse_catalog(j, path.parent_path());
}

PermGroup resolve_entry(Catalog const &c, CatalogEntry const &e)
{
  return resolve_group(e.source, c.base_dir);
}

// ---------------------------------------------------------------------------
// checks and batches

namespace {

void attach_reverification(CheckReport &r, PermGroup const &g, Limits const &limits)
{
  if (r.status == Status::fails && !is_theorem_check(r.check_name))
    r.witnesses["reverified"] = reverify(r, g, limits);
}

bool hypothesis_unmet(CheckReport const &r)
{
  return r.status == Status::skipped && r.witnesses.contains("reason");
}

std::vector<std::uint64_t> primes_for(CatalogEntry const &e, PermGroup const &g)
{
  return e.primes.empty() ? prime_divisors(g.order_u64()) : e.primes;
}

std::uint64_t fnv1a(std::string const &s)
{
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_key(CatalogEntry const &e, PermGroup const &g, std::uint64_t p)
{
  std::string text = e.label + "\n" + std::to_string(g.degree());
  for (auto const &x : g.generators())
    text += "\n" + x.str();
  text += "\np=" + std::to_string(p) + "\ncheck=all\nvariant=all";
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a(text);
  return hex.str();
}

} // namespace

std::vector<CheckReport> check_entry(Catalog const &c, CatalogEntry const &e, Limits const &limits)
{
  auto g = resolve_entry(c, e);
  GroupAnalysis a(e.label, g, limits);
  std::vector<CheckReport> out;
  for (auto p : primes_for(e, g)) {
    for (auto &r : run_all(a, p)) {
      if (hypothesis_unmet(r))
        continue;
      attach_reverification(r, g, limits);
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

// Reports of one entry, through the cache when one is configured. A cache
// hit is accepted only if the stored group order matches a recomputation.
json entry_reports(Catalog const &c, CatalogEntry const &e, bool timings, Limits const &limits,
                   std::optional<fs::path> const &cache_dir)
{
  auto g = resolve_entry(c, e);
  json out = json::array();
  std::optional<GroupAnalysis> a;
  for (auto p : primes_for(e, g)) {
    fs::path file;
    if (cache_dir && !timings) {
      file = *cache_dir / (cache_key(e, g, p) + ".json");
      std::ifstream in(file);
      if (in) {
        try {
          auto cached = json::parse(in);
          if (cached.at("order") == g.order().get_str()) {
            for (auto const &r : cached.at("reports"))
              out.push_back(r);
            continue;
          }
        } catch (json::exception const &) {
          // unreadable entry: recompute and overwrite
        }
      }
    }
    if (!a)
      a.emplace(e.label, g, limits);
    json reports = json::array();
    for (auto &r : run_all(*a, p)) {
      if (hypothesis_unmet(r))
        continue;
      attach_reverification(r, g, limits);
      reports.push_back(report_to_json(r, timings));
    }
    if (!file.empty()) {
      fs::create_directories(*cache_dir);
      std::ofstream(file) << json{{"order", g.order().get_str()}, {"reports", reports}}.dump() << '\n';
    }
    for (auto &r : reports)
      out.push_back(std::move(r));
  }
  return out;
}

} // namespace

json run_batch(Catalog const &c, unsigned jobs, bool timings, Limits const &limits,
               std::optional<fs::path> cache_dir)
{
  std::size_t const n = c.entries.size();
  std::vector<json> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = entry_reports(c, c.entries[i], timings, limits, cache_dir);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  for (auto const &e : errors) {
    if (e)
      std::rethrow_exception(e);
  }
  json reports = json::array();
  for (auto &r : results) {
    for (auto &x : r)
      reports.push_back(std::move(x));
  }
  return {{"format", 1}, {"reports", reports}};
}

int exit_code_for(std::vector<CheckReport> const &reports)
{
  bool skipped = false;
  for (auto const &r : reports) {
    if (r.status == Status::fails)
      return 1;
    skipped = skipped || r.status == Status::skipped;
  }
  return skipped ? 3 : 0;
}

int exit_code_for(json const &report_array)
{
  bool skipped = false;
  for (auto const &r : report_array) {
    if (r["status"] == "fails")
      return 1;
    skipped = skipped || r["status"] == "skipped";
  }
  return skipped ? 3 : 0;
}

// ---------------------------------------------------------------------------
// command line

namespace {

json group_summary(PermGroup const &g)
{
  json gens = json::array();
  for (auto const &x : g.generators())
    gens.push_back(x.str());
  return {{"order", g.order().get_str()}, {"generators", gens}};
}

PermGroup load_group(std::string const &source)
{
  return resolve_group(source, fs::current_path());
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Character tables, blocks, Sylow and subnormalizer computations for permutation groups"};
  app.name("pickylab");
  app.require_subcommand(1);

  std::string out_path;
  bool pretty = false, timings = false;
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");
  app.add_flag("--pretty", pretty, "Indented JSON");
  app.add_flag("--timings", timings, "Include runtime_ms in check reports");

  std::string group, perm, check_name, variant = "plain", catalog_path;
  std::uint64_t prime = 0;
  unsigned jobs = 1;
  bool csv = false;

  auto *table = app.add_subcommand("table", "Character table of a group");
  table->add_option("group", group, "Named group or generator file")->required();

  auto *blocks = app.add_subcommand("blocks", "p-blocks with defects and heights");
  blocks->add_option("group", group)->required();
  blocks->add_option("-p", prime, "Prime")->required();

  auto *sylow = app.add_subcommand("sylow", "Sylow subgroup, its normalizer and the number of conjugates");
  sylow->add_option("group", group)->required();
  sylow->add_option("-p", prime)->required();

  auto *picky = app.add_subcommand("picky", "Picky report for every class of p-elements");
  picky->add_option("group", group)->required();
  picky->add_option("-p", prime)->required();

  auto *subn = app.add_subcommand("subnormalizer", "Subnormalizer set and subgroup of an element");
  subn->add_option("group", group)->required();
  subn->add_option("-x", perm, "Element in cycle notation")->required();

  auto *check = app.add_subcommand("check", "Run one check, or all of them");
  check->add_option("name", check_name, "Check name or 'all'")->required();
  check->add_option("group", group)->required();
  check->add_option("-p", prime, "Prime (check all defaults to every prime dividing |G|)");
  check->add_option("--variant", variant, "plain, strong or ppart")->check(CLI::IsMember({"plain", "strong", "ppart"}));

  auto *batch = app.add_subcommand("batch", "check all over a catalog");
  batch->add_option("catalog", catalog_path, "Catalog JSON file")->required();
  batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto *t1 = app.add_subcommand("table1", "S16 at an 8-cycle against S8 wr C2");
  t1->add_flag("--csv", csv, "CSV rows instead of JSON");

  for (auto *sub : app.get_subcommands([](CLI::App *) { return true; }))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](std::string const &text) {
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(out_path);
    if (!f)
      throw InvalidArgument("cannot write " + out_path);
    f << text;
  };
  auto emit_json = [&](json const &j) { emit(j.dump(pretty ? 2 : -1) + "\n"); };

  try {
    if (*table) {
      auto t = character_table(load_group(group));
      verify_orthogonality(t);
      emit_json(table_to_json(t));
      return 0;
    }
    if (*blocks) {
      auto t = character_table(load_group(group));
      emit_json(blocks_to_json(t, block_partition(t, prime)));
      return 0;
    }
    if (*sylow) {
      auto g = load_group(group);
      auto sys = sylow_system(g, prime);
      emit_json({{"format", 1},
                 {"group", group},
                 {"prime", prime},
                 {"sylow", group_summary(sys.sylow)},
                 {"normalizer", group_summary(sys.normalizer)},
                 {"count", sys.count()},
                 {"normal", sys.count() == 1},
                 {"ti", is_ti_sylow(sys, g)}});
      return 0;
    }
    if (*picky) {
      auto g = load_group(group);
      auto sys = sylow_system(g, prime);
      ConjugacyClasses cc(g);
      json elements = json::array();
      for (auto const &c : cc.classes()) {
        if (c.element_order > 1 && is_p_element(c.representative, prime))
          elements.push_back(picky_to_json(picky_report(g, sys, c.representative)));
      }
      emit_json({{"format", 1}, {"group", group}, {"prime", prime}, {"sylow_count", sys.count()},
                 {"elements", elements}});
      return 0;
    }
    if (*subn) {
      auto g = load_group(group);
      auto x = Perm::parse(perm, g.degree());
      if (!g.contains(x))
        throw InvalidArgument(perm + " is not an element of " + group);
      auto set = subnormalizer_set(g, x);
      auto sub = subnormalizer_subgroup(g, x);
      emit_json({{"format", 1},
                 {"group", group},
                 {"element", x.str()},
                 {"set_size", set.size()},
                 {"set_is_subgroup", set.size() == sub.order_u64()},
                 {"subgroup", group_summary(sub)}});
      return 0;
    }
    if (*check) {
      Catalog c;
      c.base_dir = fs::current_path();
      CatalogEntry e{group, group, {}};
      if (prime != 0)
        e.primes = {prime};
      std::vector<CheckReport> reports;
      if (check_name == "all") {
        reports = check_entry(c, e);
      } else {
        if (prime == 0)
          throw InvalidArgument("check " + check_name + " needs -p");
        auto g = resolve_entry(c, e);
        GroupAnalysis a(group, g);
        auto r = run_check(a, check_name, prime, parse_variant(variant));
        if (r.status == Status::fails && !is_theorem_check(r.check_name))
          r.witnesses["reverified"] = reverify(r, g);
        reports.push_back(std::move(r));
      }
      json arr = json::array();
      for (auto const &r : reports)
        arr.push_back(report_to_json(r, timings));
      emit_json(arr);
      return exit_code_for(reports);
    }
    if (*batch) {
      std::optional<fs::path> cache;
      if (char const *dir = std::getenv("PICKYLAB_CACHE"); dir && *dir)
        cache = fs::path(dir);
      auto result = run_batch(load_catalog(catalog_path), jobs, timings, {}, cache);
      emit_json(result);
      return exit_code_for(result["reports"]);
    }
    if (*t1) {
      auto r = table1_report(8);
      if (csv)
        emit(table1_csv(r));
      else
        emit_json(table1_to_json(r));
      return r.equal() ? 0 : 1;
    }
  } catch (ParseError const &e) {
    err << "error: parse: " << e.what() << '\n';
    return 2;
  } catch (InvalidArgument const &e) {
    err << "error: invalid argument: " << e.what() << '\n';
    return 2;
  } catch (ResourceError const &e) {
    err << "error: scale bound exceeded: " << e.what() << '\n';
    return 2;
  } catch (EngineError const &e) {
    err << "error: engine invariant violated: " << e.what() << '\n';
    return 2;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int run(int argc, char const *const *argv)
{
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

} // namespace pickylab
