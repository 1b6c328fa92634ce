#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "pickylab/exactnum.hpp"
#include "pickylab/permgroup.hpp"

namespace pickylab {

/// Weakly decreasing positive parts.
using Partition = std::vector<unsigned>;

/// All partitions of n, in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions(unsigned n);

std::string partition_str(Partition const &lambda);

/// Murnaghan-Nakayama: chi_lambda at cycle type mu (any order; fixed points
/// included as parts 1). Throws InvalidArgument when |lambda| != |mu|.
std::int64_t mn_value(Partition const &lambda, std::vector<std::size_t> const &mu);

/// Hook length formula.
Integer degree(Partition const &lambda);

/// Irreducible characters of S_n wr C_2: an unordered pair {alpha, beta}
/// of distinct partitions, or a partition alpha with one of two extensions.
struct WreathLabel
{
  Partition alpha;
  Partition beta; // empty for diagonal labels
  int extension = 0;

  bool diagonal() const { return beta.empty(); }
  std::string str() const;
};

/// C(p(n), 2) pair labels, then 2 p(n) diagonal labels.
std::vector<WreathLabel> wreath_labels(unsigned n);

Integer wreath_degree(WreathLabel const &label);

/// Value at (g1, g2) in the base group, given the cycle types of g1 and g2.
std::int64_t wreath_value_at_base(WreathLabel const &label, std::vector<std::size_t> const &g1,
                                  std::vector<std::size_t> const &g2);

/// Same, for a permutation of {1..2n} fixing both blocks {1..n}, {n+1..2n};
/// throws InvalidArgument for elements outside the base group.
std::int64_t wreath_value_at_base(WreathLabel const &label, Perm const &g);

struct ValueRow
{
  std::int64_t value = 0; // absolute value
  std::uint64_t two_part = 1;
  std::uint64_t multiplicity = 0;

  auto operator<=>(ValueRow const &other) const = default;
};

struct Table1Report
{
  unsigned m = 8; // S_{2m} at an m-cycle against S_m wr C_2
  std::vector<ValueRow> symmetric;
  std::vector<ValueRow> wreath;
  /// Signed values, for the comparison up to sign of individual characters.
  std::vector<std::pair<std::int64_t, std::uint64_t>> symmetric_signed;
  std::vector<std::pair<std::int64_t, std::uint64_t>> wreath_signed;

  bool equal() const { return symmetric == wreath; }
  std::uint64_t nonvanishing() const;
};

/// Nonzero |chi(x)| with the 2-part of chi(1), for x an m-cycle of S_{2m}
/// and for x = (c_m, 1) in the base of S_m wr C_2. Rows sorted by
/// (2-part, value).
Table1Report table1_report(unsigned m = 8);

nlohmann::json table1_to_json(Table1Report const &r);
std::string table1_csv(Table1Report const &r);

} // namespace pickylab
