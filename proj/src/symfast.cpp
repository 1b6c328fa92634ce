#include "pickylab/symfast.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "pickylab/errors.hpp"
#include "pickylab/numtheory.hpp"

namespace pickylab {

std::vector<Partition> partitions(unsigned n)
{
  std::vector<Partition> result;
  Partition current;
  std::function<void(unsigned, unsigned)> build = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      result.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  build(n, n);
  return result;
}

std::string partition_str(Partition const &lambda)
{
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(lambda[i]);
  }
  return s + ")";
}

namespace {

unsigned size_of(Partition const &lambda)
{
  return std::accumulate(lambda.begin(), lambda.end(), 0u);
}

void validate(Partition const &lambda)
{
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0 || (i > 0 && lambda[i] > lambda[i - 1]))
      throw InvalidArgument("not a partition: " + partition_str(lambda));
  }
}

/// Border-strip removal on beta-sets, memoized on (shape, parts consumed).
class MurnaghanNakayama
{
public:
  explicit MurnaghanNakayama(std::vector<std::size_t> mu) : mu_(std::move(mu))
  {
    std::sort(mu_.rbegin(), mu_.rend());
    while (!mu_.empty() && mu_.back() == 0)
      mu_.pop_back();
    first_unit_ = static_cast<std::size_t>(std::find(mu_.begin(), mu_.end(), 1u) - mu_.begin());
  }

  std::int64_t value(Partition const &lambda) { return eval(lambda, 0); }

private:
  std::int64_t eval(Partition const &lambda, std::size_t next)
  {
    if (next >= first_unit_)
      return degree(lambda).get_si(); // only fixed points remain
    auto key = std::make_pair(lambda, next);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;

    auto const r = static_cast<unsigned>(mu_[next]);
    std::size_t const len = lambda.size();
    std::vector<unsigned> beta(len); // strictly decreasing
    for (std::size_t i = 0; i < len; ++i)
      beta[i] = lambda[i] + static_cast<unsigned>(len - 1 - i);

    std::int64_t total = 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (beta[i] < r)
        continue;
      unsigned const target = beta[i] - r;
      if (std::find(beta.begin(), beta.end(), target) != beta.end())
        continue;
      // beads strictly between target and beta[i] give the leg length
      int between = 0;
      for (auto b : beta)
        between += b > target && b < beta[i];
      std::vector<unsigned> moved = beta;
      moved[i] = target;
      std::sort(moved.rbegin(), moved.rend());
      Partition smaller;
      for (std::size_t j = 0; j < len; ++j) {
        unsigned const part = moved[j] - static_cast<unsigned>(len - 1 - j);
        if (part > 0)
          smaller.push_back(part);
      }
      std::int64_t const v = eval(smaller, next + 1);
      total += between % 2 ? -v : v;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<std::size_t> mu_;
  std::size_t first_unit_ = 0;
  std::map<std::pair<Partition, std::size_t>, std::int64_t> memo_;
};

std::vector<std::size_t> block_cycle_type(Perm const &g, std::size_t from, std::size_t to)
{
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t s = from; s < to; ++s) {
    if (seen[s])
      continue;
    std::size_t len = 0;
    for (std::size_t i = s; !seen[i]; i = g[i]) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::uint64_t two_part_of(Integer const &d)
{
  return static_cast<std::uint64_t>(p_part_value(d, 2).get_ui());
}

std::vector<ValueRow> collect(std::vector<std::pair<std::int64_t, std::uint64_t>> const &signed_values)
{
  std::map<std::pair<std::uint64_t, std::int64_t>, std::uint64_t> counts;
  for (auto const &[v, two] : signed_values)
    ++counts[{two, v < 0 ? -v : v}];
  std::vector<ValueRow> rows;
  for (auto const &[key, mult] : counts)
    rows.push_back({key.second, key.first, mult});
  return rows;
}

} // namespace

std::int64_t mn_value(Partition const &lambda, std::vector<std::size_t> const &mu)
{
  validate(lambda);
  if (size_of(lambda) != std::accumulate(mu.begin(), mu.end(), std::size_t{0}))
    throw InvalidArgument("mn_value: " + partition_str(lambda) + " and the cycle type have different sizes");
  return MurnaghanNakayama(mu).value(lambda);
}

Integer degree(Partition const &lambda)
{
  validate(lambda);
  unsigned const n = size_of(lambda);
  Integer num = 1;
  for (unsigned i = 2; i <= n; ++i)
    num *= i;
  Integer hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (unsigned j = 0; j < lambda[i]; ++j) {
      unsigned arm = lambda[i] - j - 1;
      unsigned leg = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k)
        ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return num / hooks;
}

std::string WreathLabel::str() const
{
  if (diagonal())
    return "{" + partition_str(alpha) + "}^" + std::to_string(extension);
  return "{" + partition_str(alpha) + "," + partition_str(beta) + "}";
}

std::vector<WreathLabel> wreath_labels(unsigned n)
{
  auto const parts = partitions(n);
  std::vector<WreathLabel> labels;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      labels.push_back({parts[i], parts[j], 0});
  }
  for (auto const &p : parts) {
    labels.push_back({p, {}, 0});
    labels.push_back({p, {}, 1});
  }
  return labels;
}

Integer wreath_degree(WreathLabel const &label)
{
  if (label.diagonal()) {
    Integer f = degree(label.alpha);
    return f * f;
  }
  return 2 * degree(label.alpha) * degree(label.beta);
}

std::int64_t wreath_value_at_base(WreathLabel const &label, std::vector<std::size_t> const &g1,
                                  std::vector<std::size_t> const &g2)
{
  if (label.diagonal())
    return mn_value(label.alpha, g1) * mn_value(label.alpha, g2);
  return mn_value(label.alpha, g1) * mn_value(label.beta, g2) + mn_value(label.alpha, g2) * mn_value(label.beta, g1);
}

std::int64_t wreath_value_at_base(WreathLabel const &label, Perm const &g)
{
  std::size_t const n = size_of(label.alpha);
  if (g.degree() != 2 * n)
    throw InvalidArgument("wreath_value_at_base: expected a permutation of degree " + std::to_string(2 * n));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if ((i < n) != (g[i] < n))
      throw InvalidArgument("wreath_value_at_base: " + g.str() + " is not in the base group");
  }
  return wreath_value_at_base(label, block_cycle_type(g, 0, n), block_cycle_type(g, n, 2 * n));
}

std::uint64_t Table1Report::nonvanishing() const
{
  std::uint64_t total = 0;
  for (auto const &r : symmetric)
    total += r.multiplicity;
  return total;
}

Table1Report table1_report(unsigned m)
{
  if (m < 1 || m > 12)
    throw InvalidArgument("table1_report: m must lie in 1..12");
  Table1Report report;
  report.m = m;

  std::vector<std::size_t> cycle(m + 1, 1);
  cycle[0] = m;
  MurnaghanNakayama big(cycle);
  for (auto const &lambda : partitions(2 * m)) {
    std::int64_t const v = big.value(lambda);
    if (v != 0)
      report.symmetric_signed.emplace_back(v, two_part_of(degree(lambda)));
  }

  std::vector<std::size_t> c_m{m};
  std::vector<std::size_t> id(m, 1);
  for (auto const &label : wreath_labels(m)) {
    std::int64_t const v = wreath_value_at_base(label, c_m, id);
    if (v != 0)
      report.wreath_signed.emplace_back(v, two_part_of(wreath_degree(label)));
  }

  report.symmetric = collect(report.symmetric_signed);
  report.wreath = collect(report.wreath_signed);
  std::sort(report.symmetric_signed.begin(), report.symmetric_signed.end());
  std::sort(report.wreath_signed.begin(), report.wreath_signed.end());
  return report;
}

nlohmann::json table1_to_json(Table1Report const &r)
{
  auto rows = [](std::vector<ValueRow> const &v) {
    nlohmann::json a = nlohmann::json::array();
    for (auto const &row : v)
      a.push_back({{"value", row.value}, {"two_part", row.two_part}, {"multiplicity", row.multiplicity}});
    return a;
  };
  std::string cycle = "(";
  for (unsigned i = 1; i <= r.m; ++i)
    cycle += (i > 1 ? "," : "") + std::to_string(i);
  cycle += ")";
  return {{"format", 1},
          {"group", "S:" + std::to_string(2 * r.m)},
          {"subgroup", "wr:S:" + std::to_string(r.m) + "~C:2"},
          {"element", cycle},
          {"symmetric", rows(r.symmetric)},
          {"wreath", rows(r.wreath)},
          {"nonvanishing", r.nonvanishing()},
          {"signs_equal", r.symmetric_signed == r.wreath_signed},
          {"verdict", r.equal() ? "equal" : "different"}};
}

std::string table1_csv(Table1Report const &r)
{
  std::ostringstream out;
  out << "value,2-part,multiplicity\n";
  for (auto const &row : r.symmetric)
    out << row.value << ',' << row.two_part << ',' << row.multiplicity << '\n';
  if (!r.equal()) {
    out << "# wreath side differs\n";
    for (auto const &row : r.wreath)
      out << row.value << ',' << row.two_part << ',' << row.multiplicity << '\n';
  }
  return out.str();
}

} // namespace pickylab
