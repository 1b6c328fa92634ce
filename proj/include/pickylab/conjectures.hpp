#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "pickylab/blocks.hpp"
#include "pickylab/chartab.hpp"
#include "pickylab/limits.hpp"
#include "pickylab/permgroup.hpp"

namespace pickylab {

enum class Status
{
  holds,
  fails,
  skipped
};

std::string status_name(Status s);

enum class Variant
{
  plain,
  strong,
  ppart
};

std::string variant_name(Variant v);
/// Throws InvalidArgument for anything but plain, strong, ppart.
Variant parse_variant(std::string const &name);

/// A skipped report carries witnesses["reason"] when the hypothesis of the
/// statement is not met, witnesses["resource_limit"] when a scale bound hit.
struct CheckReport
{
  std::string check_name;
  std::string group_label;
  std::uint64_t prime = 0;
  Status status = Status::skipped;
  nlohmann::json witnesses = nlohmann::json::object();
  std::string variant; // empty unless the check takes one
  std::int64_t runtime_ms = 0;
};

nlohmann::json report_to_json(CheckReport const &r, bool timings = false);

/// Lazily computed data for one group, shared by the checks. Not thread safe;
/// use one instance per thread.
class GroupAnalysis
{
public:
  GroupAnalysis(std::string label, PermGroup group, Limits limits = {});

  std::string const &label() const { return label_; }
  PermGroup const &group() const { return group_; }
  Limits const &limits() const { return limits_; }

  std::shared_ptr<ConjugacyClasses const> const &classes();
  CharacterTable const &table();
  SylowSystem const &sylow(std::uint64_t p);
  BlockPartition const &blocks(std::uint64_t p);
  /// Table of a subgroup of G (cached by generators).
  CharacterTable const &table_of(PermGroup const &h);
  PermGroup const &subnormalizer(Perm const &x);
  /// Class representatives of p-elements other than the identity.
  std::vector<Perm> p_element_classes(std::uint64_t p);
  /// The ones lying in a single Sylow p-subgroup.
  std::vector<Perm> picky_classes(std::uint64_t p);

private:
  std::string label_;
  PermGroup group_;
  Limits limits_;
  std::shared_ptr<ConjugacyClasses const> classes_;
  std::unique_ptr<CharacterTable> table_;
  std::map<std::uint64_t, SylowSystem> sylow_;
  std::map<std::uint64_t, BlockPartition> blocks_;
  std::map<std::string, std::unique_ptr<CharacterTable>> subtables_;
  std::map<std::uint64_t, PermGroup> subnormalizers_;
};

/// (p-part of chi(1), key of chi(x)) for the characters of t not vanishing
/// at x, sorted. The key is the field fingerprint (plain), the larger of the
/// canonical strings of chi(x) and -chi(x) (strong), or the exponent of the
/// algebraic p-part of chi(x) (ppart).
using Signature = std::vector<std::pair<std::uint64_t, std::string>>;
Signature signature(CharacterTable const &t, Perm const &x, std::uint64_t p, Variant v);

CheckReport check_ito_michler(GroupAnalysis &a, std::uint64_t p);
CheckReport check_normality_via_qblocks(GroupAnalysis &a, std::uint64_t p);
CheckReport check_mckay(GroupAnalysis &a, std::uint64_t p);
CheckReport check_degree_conjectures(GroupAnalysis &a, std::uint64_t p);
CheckReport check_chain_conjecture(GroupAnalysis &a, std::uint64_t p);
CheckReport check_height_conjectures(GroupAnalysis &a, std::uint64_t p);
CheckReport check_vanishing_proposition(GroupAnalysis &a, std::uint64_t p);
CheckReport check_alperin_c(GroupAnalysis &a, std::uint64_t p);
CheckReport check_picky_conjecture(GroupAnalysis &a, std::uint64_t p, Variant v = Variant::plain);
CheckReport check_subnormalizer_conjecture(GroupAnalysis &a, std::uint64_t p, Variant v = Variant::plain);
CheckReport check_fusion_lemma(GroupAnalysis &a, std::uint64_t p);
CheckReport check_kb_principal(GroupAnalysis &a, std::uint64_t p);
/// All Sylows are needed to cover the p-elements iff a picky element exists.
CheckReport check_covering_lemma(GroupAnalysis &a, std::uint64_t p);
/// N_G(P) <= Sub_G(x) for x in P, with equality iff x is picky.
CheckReport check_subnormalizer_lemma(GroupAnalysis &a, std::uint64_t p);

/// Check names accepted by run_check, in the order check all runs them.
/// Variant checks are listed once; run_all expands them.
std::vector<std::string> const &check_names();
bool is_theorem_check(std::string const &name);

/// Throws InvalidArgument for an unknown name.
CheckReport run_check(GroupAnalysis &a, std::string const &name, std::uint64_t p,
                      Variant v = Variant::plain);

/// Every check at p, with all picky variants. Checks whose hypothesis is not
/// met (skipped) are kept. Throws EngineError when a theorem check fails or
/// the cross-check invariants between reports are violated.
std::vector<CheckReport> run_all(GroupAnalysis &a, std::uint64_t p);

/// Descriptions of violated relations between reports of one group and prime:
/// strong => ppart => equal degree multisets, picky => McKay.
std::vector<std::string> consistency_violations(std::vector<CheckReport> const &reports);

/// Recomputes a failing conjecture report from a fresh analysis of the group
/// and returns true when the new report fails with the same witnesses.
bool reverify(CheckReport const &r, PermGroup const &g, Limits const &limits = {});

} // namespace pickylab
