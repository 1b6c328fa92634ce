#include "pickylab/conjectures.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include "pickylab/errors.hpp"
#include "pickylab/numtheory.hpp"
#include "pickylab/subnorm.hpp"

namespace pickylab {

using nlohmann::json;

std::string status_name(Status s)
{
  switch (s) {
  case Status::holds:
    return "holds";
  case Status::fails:
    return "fails";
  case Status::skipped:
    return "skipped";
  }
  return "skipped";
}

std::string variant_name(Variant v)
{
  switch (v) {
  case Variant::plain:
    return "plain";
  case Variant::strong:
    return "strong";
  case Variant::ppart:
    return "ppart";
  }
  return "plain";
}

Variant parse_variant(std::string const &name)
{
  if (name == "plain")
    return Variant::plain;
  if (name == "strong")
    return Variant::strong;
  if (name == "ppart")
    return Variant::ppart;
  throw InvalidArgument("unknown variant '" + name + "' (expected plain, strong or ppart)");
}

json report_to_json(CheckReport const &r, bool timings)
{
  json j;
  j["check"] = r.check_name;
  j["group"] = r.group_label;
  j["prime"] = r.prime;
  j["status"] = status_name(r.status);
  if (!r.variant.empty())
    j["variant"] = r.variant;
  j["witnesses"] = r.witnesses;
  if (timings)
    j["runtime_ms"] = r.runtime_ms;
  return j;
}

// ---------------------------------------------------------------------------

GroupAnalysis::GroupAnalysis(std::string label, PermGroup group, Limits limits)
  : label_(std::move(label)), group_(std::move(group)), limits_(limits)
{
}

std::shared_ptr<ConjugacyClasses const> const &GroupAnalysis::classes()
{
  if (!classes_)
    classes_ = std::make_shared<ConjugacyClasses const>(group_, limits_);
  return classes_;
}

CharacterTable const &GroupAnalysis::table()
{
  if (!table_) {
    auto cc = classes();
    table_ = std::make_unique<CharacterTable>(character_table(cc, limits_));
  }
  return *table_;
}

SylowSystem const &GroupAnalysis::sylow(std::uint64_t p)
{
  auto it = sylow_.find(p);
  if (it == sylow_.end())
    it = sylow_.emplace(p, sylow_system(group_, p, limits_)).first;
  return it->second;
}

BlockPartition const &GroupAnalysis::blocks(std::uint64_t p)
{
  auto it = blocks_.find(p);
  if (it == blocks_.end())
    it = blocks_.emplace(p, block_partition(table(), p)).first;
  return it->second;
}

CharacterTable const &GroupAnalysis::table_of(PermGroup const &h)
{
  if (h == group_)
    return table();
  std::vector<std::string> gens;
  for (auto const &g : h.generators())
    gens.push_back(g.str());
  std::sort(gens.begin(), gens.end());
  std::string key = h.order().get_str();
  for (auto const &g : gens)
    key += ";" + g;
  auto it = subtables_.find(key);
  if (it == subtables_.end())
    it = subtables_.emplace(key, std::make_unique<CharacterTable>(character_table(h, limits_))).first;
  return *it->second;
}

PermGroup const &GroupAnalysis::subnormalizer(Perm const &x)
{
  auto const r = group_.rank(x);
  auto it = subnormalizers_.find(r);
  if (it == subnormalizers_.end())
    it = subnormalizers_.emplace(r, subnormalizer_subgroup(group_, x, limits_)).first;
  return it->second;
}

std::vector<Perm> GroupAnalysis::p_element_classes(std::uint64_t p)
{
  std::vector<Perm> out;
  for (auto const &c : classes()->classes()) {
    if (c.element_order > 1 && is_p_element(c.representative, p))
      out.push_back(c.representative);
  }
  return out;
}

std::vector<Perm> GroupAnalysis::picky_classes(std::uint64_t p)
{
  auto const &sys = sylow(p);
  std::vector<Perm> out;
  for (auto const &x : p_element_classes(p)) {
    if (sylow_count_containing(sys, x) == 1)
      out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t degree_p_part(std::uint64_t d, std::uint64_t p)
{
  return ipow(p, valuation(d, p));
}

unsigned log_p(std::uint64_t n, std::uint64_t p)
{
  return valuation(n, p);
}

std::string fingerprint_key(FieldFingerprint const &f)
{
  std::string s = std::to_string(f.modulus) + ":";
  for (std::size_t i = 0; i < f.stabilizer.size(); ++i)
    s += (i ? "," : "") + std::to_string(f.stabilizer[i]);
  return s;
}

json signature_json(Signature const &s)
{
  json j = json::array();
  for (auto const &[d, k] : s)
    j.push_back(json::array({d, k}));
  return j;
}

CheckReport start(GroupAnalysis const &a, std::string name, std::uint64_t p)
{
  CheckReport r;
  r.check_name = std::move(name);
  r.group_label = a.label();
  r.prime = p;
  return r;
}

std::uint64_t order_of(PermGroup const &g)
{
  return g.order_u64();
}

bool sylow_is_trivial(GroupAnalysis &a, std::uint64_t p)
{
  return a.group().order_u64() % p != 0;
}

} // namespace

Signature signature(CharacterTable const &t, Perm const &x, std::uint64_t p, Variant v)
{
  Signature s;
  auto const m = static_cast<std::uint32_t>(x.order());
  auto const cls = t.class_of(x);
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    auto const &val = t.value(chi, cls);
    if (val.is_zero())
      continue;
    std::string key;
    switch (v) {
    case Variant::plain:
      key = fingerprint_key(field_fingerprint(val, m));
      break;
    case Variant::strong:
      key = std::max(val.str(), (-val).str());
      break;
    case Variant::ppart:
      key = algebraic_p_part(val, p).exponent.get_str();
      break;
    }
    s.emplace_back(degree_p_part(t.degree(chi), p), std::move(key));
  }
  std::sort(s.begin(), s.end());
  return s;
}

CheckReport check_ito_michler(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "ito_michler", p);
  auto const &sys = a.sylow(p);
  bool const normal = sys.count() == 1;
  bool const abelian = sys.sylow.is_abelian();
  auto const cdp = cd_p(a.table(), p);
  bool const trivial_cdp = cdp == std::vector<std::uint64_t>{1};
  r.witnesses = {{"sylow_order", order_of(sys.sylow)},
                 {"sylow_normal", normal},
                 {"sylow_abelian", abelian},
                 {"cd_p", cdp}};
  r.status = (normal && abelian) == trivial_cdp ? Status::holds : Status::fails;
  return r;
}

CheckReport check_normality_via_qblocks(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "normality_via_qblocks", p);
  bool const normal = a.sylow(p).count() == 1;
  bool degrees_prime_to_p = true;
  json witness = nullptr;
  auto const &t = a.table();
  for (auto q : prime_divisors(a.group().order_u64())) {
    if (q == p)
      continue;
    for (auto chi : a.blocks(q).principal().characters) {
      if (t.degree(chi) % p == 0) {
        degrees_prime_to_p = false;
        witness = {{"q", q}, {"character", chi}, {"degree", t.degree(chi)}};
        break;
      }
    }
    if (!degrees_prime_to_p)
      break;
  }
  r.witnesses = {{"sylow_normal", normal},
                 {"principal_block_degrees_prime_to_p", degrees_prime_to_p},
                 {"divisible_degree", witness}};
  r.status = normal == degrees_prime_to_p ? Status::holds : Status::fails;
  return r;
}

CheckReport check_mckay(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "mckay", p);
  auto const &sys = a.sylow(p);
  auto const g_count = irr_pprime(a.table(), p).size();
  auto const n_count = irr_pprime(a.table_of(sys.normalizer), p).size();
  r.witnesses = {{"normalizer_order", order_of(sys.normalizer)},
                 {"irr_pprime_group", g_count},
                 {"irr_pprime_normalizer", n_count}};
  r.status = g_count == n_count ? Status::holds : Status::fails;
  return r;
}

CheckReport check_degree_conjectures(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "degree_conjectures", p);
  auto const &sys = a.sylow(p);
  auto const cd_sylow = cd(a.table_of(sys.sylow));
  auto const cdp = cd_p(a.table(), p);
  unsigned const b = log_p(cd_sylow.back(), p);
  unsigned const f = log_p(cdp.back(), p);
  bool const count_bound = cd_sylow.size() <= cdp.size() + 1;
  bool const exponent_bound = b <= 2 * f;
  r.witnesses = {{"dl_sylow", derived_length(sys.sylow)},
                 {"b", b},
                 {"f", f},
                 {"cd_sylow", cd_sylow},
                 {"cd_p", cdp},
                 {"cd_sylow_size_bound", count_bound},
                 {"b_le_2f", exponent_bound}};
  r.status = count_bound && exponent_bound ? Status::holds : Status::fails;
  return r;
}

CheckReport check_chain_conjecture(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "chain_conjecture", p);
  auto const &sys = a.sylow(p);
  auto const &t = a.table();
  std::size_t n = 0;
  for (auto d : t.degrees())
    n += d % p == 0;
  auto const len = chain_length(a.group(), sys.normalizer, a.limits());
  r.witnesses = {{"normalizer_order", order_of(sys.normalizer)},
                 {"chain_length", len},
                 {"p_divisible_degrees", n}};
  r.status = len <= n ? Status::holds : Status::fails;
  return r;
}

CheckReport check_height_conjectures(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "height_conjectures", p);
  if (sylow_is_trivial(a, p)) {
    r.witnesses = {{"reason", "p does not divide the group order"}};
    return r;
  }
  auto const &sys = a.sylow(p);
  auto const &b0 = a.blocks(p).principal();
  auto const ht = b0.height_set();
  auto const cd_sylow = cd(a.table_of(sys.sylow));

  bool const count_bound = cd_sylow.size() <= ht.size() + 1;
  std::optional<std::uint64_t> least_degree; // inf(cd(D) \ {1})
  for (auto d : cd_sylow) {
    if (d > 1) {
      least_degree = d;
      break;
    }
  }
  std::optional<std::uint64_t> least_height_power; // p^inf(ht(B) \ {0})
  for (auto h : ht) {
    if (h > 0) {
      least_height_power = ipow(p, h);
      break;
    }
  }
  bool const eaton_moreto = least_degree == least_height_power;
  auto opt = [](std::optional<std::uint64_t> v) { return v ? json(*v) : json("infinity"); };
  r.witnesses = {{"principal_block_size", b0.characters.size()},
                 {"heights", ht},
                 {"cd_sylow", cd_sylow},
                 {"dl_sylow", derived_length(sys.sylow)},
                 {"max_height", ht.back()},
                 {"cd_sylow_size_bound", count_bound},
                 {"least_nonlinear_degree", opt(least_degree)},
                 {"least_positive_height_power", opt(least_height_power)},
                 {"eaton_moreto", eaton_moreto}};
  // the statements need a defect group, which is only known for the principal block
  json others = json::array();
  for (std::size_t i = 1; i < a.blocks(p).blocks.size(); ++i)
    others.push_back({{"block", i}, {"defect", a.blocks(p).blocks[i].defect}, {"status", "not checkable without D"}});
  r.witnesses["non_principal_blocks"] = others;
  r.status = count_bound && eaton_moreto ? Status::holds : Status::fails;
  return r;
}

CheckReport check_vanishing_proposition(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "vanishing_proposition", p);
  auto const &bp = a.blocks(p);
  auto const &t = a.table();
  auto const picky = a.picky_classes(p);
  json elements = json::array();
  std::size_t tested = 0;
  r.status = Status::holds;
  for (auto const &x : picky) {
    elements.push_back(x.str());
    for (auto const &b : bp.blocks) {
      if (b.defect >= bp.a)
        continue;
      for (auto chi : b.characters) {
        ++tested;
        auto const &v = t.value_at(chi, x);
        if (!v.is_zero() && r.status == Status::holds) {
          r.status = Status::fails;
          r.witnesses["counterexample"] = {
            {"element", x.str()}, {"character", chi}, {"defect", b.defect}, {"value", v.str()}};
        }
      }
    }
  }
  r.witnesses["picky_elements"] = elements;
  r.witnesses["pairs_tested"] = tested;
  return r;
}

CheckReport check_alperin_c(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "alperin_c", p);
  if (sylow_is_trivial(a, p)) {
    r.witnesses = {{"reason", "p does not divide the group order"}};
    return r;
  }
  auto const &sys = a.sylow(p);
  if (!is_ti_sylow(sys, a.group())) {
    r.witnesses = {{"reason", "Sylow subgroup is not TI"}};
    return r;
  }
  auto const &t = a.table();
  auto const literal = irr_nonvanishing_on(t, sys.sylow).size();
  auto const nontrivial = irr_nonvanishing_on(t, sys.sylow, true).size();
  auto const k_n = a.table_of(sys.normalizer).size();
  r.witnesses = {{"irr_nonvanishing_on_sylow", literal},
                 {"irr_nonvanishing_on_sylow_minus_identity", nontrivial},
                 {"k_normalizer", k_n}};
  r.status = nontrivial == k_n ? Status::holds : Status::fails;
  return r;
}

CheckReport check_picky_conjecture(GroupAnalysis &a, std::uint64_t p, Variant v)
{
  auto r = start(a, "picky_conjecture", p);
  r.variant = variant_name(v);
  auto const picky = a.picky_classes(p);
  if (picky.empty()) {
    r.witnesses = {{"reason", "no picky elements"}};
    return r;
  }
  auto const &sys = a.sylow(p);
  auto const &t = a.table();
  r.status = Status::holds;
  json elements = json::array();
  for (auto const &x : picky) {
    auto const n = conjugate_normalizer(sys, sylow_containing(sys, x));
    auto const &tn = a.table_of(n);
    auto const sg = signature(t, x, p, v);
    auto const sn = signature(tn, x, p, v);
    std::vector<std::uint64_t> dg, dn;
    for (auto const &e : sg)
      dg.push_back(e.first);
    for (auto const &e : sn)
      dn.push_back(e.first);
    json e = {{"element", x.str()},
              {"normalizer_order", order_of(n)},
              {"characters", sg.size()},
              {"holds", sg == sn},
              {"degrees_match", dg == dn}};
    if (sg != sn) {
      e["group_signature"] = signature_json(sg);
      e["normalizer_signature"] = signature_json(sn);
      r.status = Status::fails;
    }
    elements.push_back(e);
  }
  r.witnesses["elements"] = elements;
  return r;
}

CheckReport check_subnormalizer_conjecture(GroupAnalysis &a, std::uint64_t p, Variant v)
{
  auto r = start(a, "subnormalizer_conjecture", p);
  r.variant = variant_name(v);
  auto const xs = a.p_element_classes(p);
  if (xs.empty()) {
    r.witnesses = {{"reason", "no nontrivial p-elements"}};
    return r;
  }
  auto const &sys = a.sylow(p);
  auto const &t = a.table();
  bool failed = false, skipped = false;
  json elements = json::array();
  for (auto const &x : xs) {
    json e = {{"element", x.str()}};
    try {
      auto const &sub = a.subnormalizer(x);
      if (sylow_count_containing(sys, x) == 1) {
        auto const n = conjugate_normalizer(sys, sylow_containing(sys, x));
        if (!(n == sub))
          throw EngineError("Sub_G(x) differs from N_G(P) at the picky element " + x.str());
      }
      auto const sg = signature(t, x, p, v);
      auto const ss = signature(a.table_of(sub), x, p, v);
      e["sub_order"] = order_of(sub);
      e["characters"] = sg.size();
      e["holds"] = sg == ss;
      if (sg != ss) {
        e["group_signature"] = signature_json(sg);
        e["sub_signature"] = signature_json(ss);
        failed = true;
      }
    } catch (ResourceError const &err) {
      e["skipped"] = err.what();
      skipped = true;
    }
    elements.push_back(e);
  }
  r.witnesses["elements"] = elements;
  r.status = failed ? Status::fails : skipped ? Status::skipped : Status::holds;
  return r;
}

CheckReport check_fusion_lemma(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "fusion_lemma", p);
  auto const cc = a.classes();
  r.status = Status::holds;
  json elements = json::array();
  for (auto const &x : a.p_element_classes(p)) {
    auto const &sub = a.subnormalizer(x);
    auto const gx = cc->class_of(x);
    std::uint64_t fused = 0;
    if (!(sub == a.group())) {
      ConjugacyClasses local(sub, a.limits());
      auto const lx = local.class_of(x);
      sub.for_each_element([&](Perm const &y) {
        if (cc->class_of(y) != gx)
          return;
        ++fused;
        if (local.class_of(y) != lx && r.status == Status::holds) {
          r.status = Status::fails;
          r.witnesses["counterexample"] = {{"element", x.str()}, {"conjugate", y.str()}};
        }
      });
    } else {
      fused = (*cc)[gx].size;
    }
    elements.push_back({{"element", x.str()}, {"sub_order", order_of(sub)}, {"conjugates_in_sub", fused}});
  }
  r.witnesses["elements"] = elements;
  return r;
}

CheckReport check_kb_principal(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "kb_principal", p);
  auto const k = a.blocks(p).principal().characters.size();
  auto const order = order_of(a.sylow(p).sylow);
  r.witnesses = {{"principal_block_size", k}, {"sylow_order", order}};
  r.status = k <= order ? Status::holds : Status::fails;
  return r;
}

CheckReport check_covering_lemma(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "covering_lemma", p);
  auto const c = covering_analysis(a.sylow(p), *a.classes());
  r.witnesses = {{"all_sylows_needed", c.all_sylows_needed}, {"picky_exists", c.picky_exists}};
  r.status = c.consistent() ? Status::holds : Status::fails;
  return r;
}

CheckReport check_subnormalizer_lemma(GroupAnalysis &a, std::uint64_t p)
{
  auto r = start(a, "subnormalizer_lemma", p);
  auto const &sys = a.sylow(p);
  r.status = Status::holds;
  json elements = json::array();
  for (auto const &x : a.p_element_classes(p)) {
    auto const count = sylow_count_containing(sys, x);
    auto const n = conjugate_normalizer(sys, sylow_containing(sys, x));
    auto const &sub = a.subnormalizer(x);
    bool const contained = n.is_subgroup_of(sub);
    bool const equal = n.order() == sub.order();
    bool const ok = contained && equal == (count == 1);
    elements.push_back({{"element", x.str()},
                        {"sylow_count", count},
                        {"normalizer_order", order_of(n)},
                        {"sub_order", order_of(sub)},
                        {"holds", ok}});
    if (!ok)
      r.status = Status::fails;
  }
  r.witnesses["elements"] = elements;
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::string> const &check_names()
{
  static std::vector<std::string> const names{
    "ito_michler",       "normality_via_qblocks", "mckay",        "degree_conjectures",
    "chain_conjecture",  "height_conjectures",    "vanishing_proposition",
    "alperin_c",         "picky_conjecture",      "subnormalizer_conjecture",
    "fusion_lemma",      "kb_principal",          "covering_lemma", "subnormalizer_lemma"};
  return names;
}

bool is_theorem_check(std::string const &name)
{
  return name == "ito_michler" || name == "normality_via_qblocks" || name == "vanishing_proposition" ||
         name == "alperin_c" || name == "fusion_lemma" || name == "covering_lemma" ||
         name == "subnormalizer_lemma";
}

CheckReport run_check(GroupAnalysis &a, std::string const &name, std::uint64_t p, Variant v)
{
  using Fn = std::function<CheckReport()>;
  std::map<std::string, Fn> const table{
    {"ito_michler", [&] { return check_ito_michler(a, p); }},
    {"normality_via_qblocks", [&] { return check_normality_via_qblocks(a, p); }},
    {"mckay", [&] { return check_mckay(a, p); }},
    {"degree_conjectures", [&] { return check_degree_conjectures(a, p); }},
    {"chain_conjecture", [&] { return check_chain_conjecture(a, p); }},
    {"height_conjectures", [&] { return check_height_conjectures(a, p); }},
    {"vanishing_proposition", [&] { return check_vanishing_proposition(a, p); }},
    {"alperin_c", [&] { return check_alperin_c(a, p); }},
    {"picky_conjecture", [&] { return check_picky_conjecture(a, p, v); }},
    {"subnormalizer_conjecture", [&] { return check_subnormalizer_conjecture(a, p, v); }},
    {"fusion_lemma", [&] { return check_fusion_lemma(a, p); }},
    {"kb_principal", [&] { return check_kb_principal(a, p); }},
    {"covering_lemma", [&] { return check_covering_lemma(a, p); }},
    {"subnormalizer_lemma", [&] { return check_subnormalizer_lemma(a, p); }},
  };
  auto it = table.find(name);
  if (it == table.end())
    throw InvalidArgument("unknown check '" + name + "'");
  if (!is_prime(p))
    throw InvalidArgument("p = " + std::to_string(p) + " is not a prime");

  auto const t0 = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = it->second();
  } catch (ResourceError const &err) {
    r = start(a, name, p);
    if (name == "picky_conjecture" || name == "subnormalizer_conjecture")
      r.variant = variant_name(v);
    r.status = Status::skipped;
    r.witnesses = {{"resource_limit", err.what()}};
  }
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckReport> run_all(GroupAnalysis &a, std::uint64_t p)
{
  std::vector<CheckReport> out;
  for (auto const &name : check_names()) {
    if (name == "picky_conjecture") {
      for (auto v : {Variant::plain, Variant::strong, Variant::ppart})
        out.push_back(run_check(a, name, p, v));
    } else {
      out.push_back(run_check(a, name, p));
    }
    if (is_theorem_check(name) && out.back().status == Status::fails)
      throw EngineError("theorem check " + name + " fails for " + a.label() + " at p = " + std::to_string(p) +
                        ": " + out.back().witnesses.dump());
  }
  auto const violations = consistency_violations(out);
  if (!violations.empty())
    throw EngineError("inconsistent reports for " + a.label() + ": " + violations.front());
  return out;
}

std::vector<std::string> consistency_violations(std::vector<CheckReport> const &reports)
{
  auto find = [&](std::string const &name, std::string const &variant) -> CheckReport const * {
    for (auto const &r : reports) {
      if (r.check_name == name && r.variant == variant)
        return &r;
    }
    return nullptr;
  };
  std::vector<std::string> out;
  auto const *strong = find("picky_conjecture", "strong");
  auto const *ppart = find("picky_conjecture", "ppart");
  auto const *plain = find("picky_conjecture", "plain");
  auto const *mckay = find("mckay", "");

  if (strong && ppart && strong->status == Status::holds && ppart->status != Status::holds)
    out.push_back("strong picky holds but the p-part variant does not");
  if (ppart && plain && ppart->status == Status::holds) {
    for (auto const &e : plain->witnesses.value("elements", json::array())) {
      if (!e.value("degrees_match", false))
        out.push_back("p-part picky holds but the degree multisets differ at " + e.value("element", ""));
    }
  }
  if (mckay && mckay->status == Status::fails) {
    for (auto const *r : {plain, strong, ppart}) {
      if (!r)
        continue;
      for (auto const &e : r->witnesses.value("elements", json::array())) {
        if (e.value("holds", false))
          out.push_back("picky " + r->variant + " holds at " + e.value("element", "") + " but McKay fails");
      }
    }
  }
  return out;
}

bool reverify(CheckReport const &r, PermGroup const &g, Limits const &limits)
{
  if (r.status != Status::fails)
    return false;
  GroupAnalysis fresh(r.group_label, PermGroup(g.degree(), g.generators()), limits);
  auto const v = r.variant.empty() ? Variant::plain : parse_variant(r.variant);
  auto const again = run_check(fresh, r.check_name, r.prime, v);
  auto strip = [](json w) {
    w.erase("reverified");
    return w;
  };
  return again.status == Status::fails && strip(again.witnesses) == strip(r.witnesses);
}

} // namespace pickylab
