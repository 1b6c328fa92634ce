#include "pickylab/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

#include "pickylab/errors.hpp"
#include "pickylab/numtheory.hpp"

namespace pickylab {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::size_t degree) : images_(degree)
{
  if (degree > std::numeric_limits<Point>::max())
    throw InvalidArgument("permutation degree too large");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> hit(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || hit[i])
      throw InvalidArgument("permutation images are not a bijection");
    hit[i] = true;
  }
}

namespace {

std::vector<std::vector<std::size_t>> parse_cycles(std::string_view text)
{
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("malformed permutation '" + std::string(text) + "': expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size())
        throw ParseError("malformed permutation '" + std::string(text) + "': unclosed cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        if (cycle.empty())
          throw ParseError("malformed permutation '" + std::string(text) + "': stray ','");
        ++i;
        skip_space();
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("malformed permutation '" + std::string(text) + "': expected a point");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > std::numeric_limits<Point>::max())
          throw ParseError("point out of range in '" + std::string(text) + "'");
        ++i;
      }
      if (v == 0)
        throw ParseError("points are numbered from 1 in '" + std::string(text) + "'");
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

} // namespace

std::size_t Perm::max_point(std::string_view text)
{
  std::size_t m = 0;
  for (auto const &cycle : parse_cycles(text)) {
    for (auto v : cycle)
      m = std::max(m, v);
  }
  return m;
}

Perm Perm::parse(std::string_view text, std::size_t degree)
{
  Perm p(degree);
  std::vector<bool> used(degree + 1, false);
  for (auto const &cycle : parse_cycles(text)) {
    for (auto v : cycle) {
      if (v > degree)
        throw ParseError("point " + std::to_string(v) + " exceeds degree " +
                         std::to_string(degree) + " in '" + std::string(text) + "'");
      if (used[v])
        throw ParseError("point " + std::to_string(v) + " repeated in '" + std::string(text) + "'");
      used[v] = true;
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      p.images_[cycle[j] - 1] = static_cast<Point>(cycle[(j + 1) % cycle.size()] - 1);
  }
  return p;
}

Perm Perm::operator*(Perm const &other) const
{
  if (other.degree() != degree())
    throw InvalidArgument("product of permutations of different degrees");
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[i] = other.images_[images_[i]];
  return r;
}

Perm Perm::inverse() const
{
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(std::int64_t e) const
{
  Perm r(degree());
  std::vector<bool> seen(degree(), false);
  std::vector<Point> cycle;
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start])
      continue;
    cycle.clear();
    for (Point i = static_cast<Point>(start); !seen[i]; i = images_[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    auto const len = static_cast<std::int64_t>(cycle.size());
    std::int64_t shift = ((e % len) + len) % len;
    for (std::int64_t j = 0; j < len; ++j)
      r.images_[cycle[j]] = cycle[(j + shift) % len];
  }
  return r;
}

Perm Perm::conjugate_by(Perm const &g) const
{
  // i^(g^-1 x g): the image of i^g under g^-1 x g is (i^x)^g
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

std::uint64_t Perm::order() const
{
  std::uint64_t o = 1;
  for (auto len : cycle_type())
    o = lcm_u64(o, len);
  return o;
}

std::vector<std::size_t> Perm::cycle_type() const
{
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start])
      continue;
    std::size_t len = 0;
    for (std::size_t i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::optional<Point> Perm::smallest_moved_point() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return static_cast<Point>(i);
  }
  return std::nullopt;
}

std::string Perm::str() const
{
  std::string s;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    s += '(';
    for (std::size_t i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      if (i != start)
        s += ',';
      s += std::to_string(i + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::size_t PermHash::operator()(Perm const &p) const noexcept
{
  std::uint64_t h = 1469598103934665603ull;
  for (auto i : p.images()) {
    h ^= i;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool is_p_element(Perm const &g, std::uint64_t p)
{
  std::uint64_t o = g.order();
  while (o % p == 0)
    o /= p;
  return o == 1;
}

Perm p_part(Perm const &g, std::uint64_t p)
{
  std::uint64_t const o = g.order();
  std::uint64_t const pa = ipow(p, valuation(o, p));
  std::uint64_t const rest = o / pa;
  if (pa == 1)
    return Perm(g.degree());
  // s = 1 mod p^a and s = 0 mod rest
  std::uint64_t const s = rest * modular::inverse(static_cast<std::int64_t>(rest % pa), pa);
  return g.pow(static_cast<std::int64_t>(s % o));
}

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
  : degree_(degree), generators_(std::move(generators))
{
  for (auto const &g : generators_) {
    if (g.degree() != degree_)
      throw InvalidArgument("generator " + g.str() + " has degree " + std::to_string(g.degree()) +
                            ", expected " + std::to_string(degree_));
  }
  for (auto const &g : generators_)
    add_generator(g);
  update_order();
}

void PermGroup::update_order()
{
  order_ = 1;
  for (auto const &level : levels_)
    order_ *= static_cast<unsigned long>(level.orbit.size());
}

std::uint64_t PermGroup::order_u64() const
{
  if (order_ > Integer("9223372036854775807"))
    throw ResourceError("group order " + order_.get_str() + " exceeds 63 bits");
  return order_.get_ui();
}

std::vector<Perm> PermGroup::strong_generators() const
{
  std::vector<Perm> result;
  for (auto const &level : levels_) {
    for (auto const &g : level.gens) {
      if (std::find(result.begin(), result.end(), g) == result.end())
        result.push_back(g);
    }
  }
  return result;
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> b;
  for (auto const &level : levels_)
    b.push_back(level.base);
  return b;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const
{
  std::vector<std::size_t> lens;
  for (auto const &level : levels_)
    lens.push_back(level.orbit.size());
  return lens;
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const
{
  for (std::size_t l = from; l < levels_.size(); ++l) {
    auto const &level = levels_[l];
    auto const idx = level.orbit_index[g[level.base]];
    if (idx < 0)
      return {std::move(g), l};
    g = g * level.transversal_inverse[static_cast<std::size_t>(idx)];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::add_to_level(std::size_t l, Perm const &g)
{
  auto &level = levels_[l];
  level.gens.push_back(g);
  std::size_t const old = level.orbit.size();
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    std::size_t const first_gen = idx < old ? level.gens.size() - 1 : 0;
    for (std::size_t s = first_gen; s < level.gens.size(); ++s) {
      Point const img = level.gens[s][level.orbit[idx]];
      if (level.orbit_index[img] >= 0)
        continue;
      level.orbit_index[img] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(img);
      Perm u = level.transversal[idx] * level.gens[s];
      level.transversal_inverse.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
      level.checked.push_back(0);
    }
  }
}

void PermGroup::schreier_sims(std::size_t start)
{
  auto i = static_cast<std::ptrdiff_t>(start);
  while (i >= 0) {
    auto const li = static_cast<std::size_t>(i);
    bool dropped = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !dropped; ++oi) {
      while (levels_[li].checked[oi] < levels_[li].gens.size()) {
        auto const &level = levels_[li];
        Perm const &s = level.gens[level.checked[oi]];
        Point const img = s[level.orbit[oi]];
        Perm h = level.transversal[oi] * s *
                 level.transversal_inverse[static_cast<std::size_t>(level.orbit_index[img])];
        ++levels_[li].checked[oi];

        auto [y, j] = sift(std::move(h), li + 1);
        if (y.is_identity())
          continue;
        if (j == levels_.size()) {
          Level fresh;
          fresh.base = *y.smallest_moved_point();
          fresh.orbit = {fresh.base};
          fresh.orbit_index.assign(degree_, -1);
          fresh.orbit_index[fresh.base] = 0;
          fresh.transversal = {Perm(degree_)};
          fresh.transversal_inverse = {Perm(degree_)};
          fresh.checked = {0};
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= j; ++l)
          add_to_level(l, y);
        i = static_cast<std::ptrdiff_t>(j);
        dropped = true;
        break;
      }
    }
    if (!dropped)
      --i;
  }
}

void PermGroup::add_generator(Perm const &g)
{
  if (g.is_identity() || contains(g))
    return;
  if (levels_.empty()) {
    Level first;
    first.base = *g.smallest_moved_point();
    first.orbit = {first.base};
    first.orbit_index.assign(degree_, -1);
    first.orbit_index[first.base] = 0;
    first.transversal = {Perm(degree_)};
    first.transversal_inverse = {Perm(degree_)};
    first.checked = {0};
    levels_.push_back(std::move(first));
  }
  add_to_level(0, g);
  schreier_sims(0);
}

bool PermGroup::contains(Perm const &g) const
{
  if (g.degree() != degree_)
    return false;
  return sift(g, 0).first.is_identity();
}

std::optional<std::uint64_t> PermGroup::try_rank(Perm const &g) const
{
  if (g.degree() != degree_)
    return std::nullopt;
  std::uint64_t r = 0;
  std::uint64_t weight = 1;
  Perm h = g;
  for (auto const &level : levels_) {
    auto const idx = level.orbit_index[h[level.base]];
    if (idx < 0)
      return std::nullopt;
    r += weight * static_cast<std::uint64_t>(idx);
    weight *= level.orbit.size();
    h = h * level.transversal_inverse[static_cast<std::size_t>(idx)];
  }
  if (!h.is_identity())
    return std::nullopt;
  return r;
}

std::uint64_t PermGroup::rank(Perm const &g) const
{
  auto r = try_rank(g);
  if (!r)
    throw InvalidArgument("rank: " + g.str() + " is not a group element");
  return *r;
}

Perm PermGroup::unrank(std::uint64_t r) const
{
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    digits[l] = r % levels_[l].orbit.size();
    r /= levels_[l].orbit.size();
  }
  if (r != 0)
    throw InvalidArgument("unrank: rank out of range");
  Perm g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;)
    g = g * levels_[l].transversal[digits[l]];
  return g;
}

void PermGroup::for_each_element(std::function<void(Perm const &)> const &visit) const
{
  if (levels_.empty()) {
    visit(Perm(degree_));
    return;
  }
  std::function<void(std::size_t, Perm const &)> descend = [&](std::size_t l, Perm const &prefix) {
    auto const &level = levels_[l];
    for (auto const &u : level.transversal) {
      Perm next = prefix * u;
      if (l == 0)
        visit(next);
      else
        descend(l - 1, next);
    }
  };
  descend(levels_.size() - 1, Perm(degree_));
}

std::vector<Perm> PermGroup::elements() const
{
  std::vector<Perm> result;
  result.reserve(order_u64());
  for_each_element([&](Perm const &g) { result.push_back(g); });
  return result;
}

PermGroup PermGroup::closure(Perm const &g) const
{
  PermGroup r(*this);
  if (contains(g))
    return r;
  r.generators_.push_back(g);
  r.add_generator(g);
  r.update_order();
  return r;
}

bool PermGroup::is_subgroup_of(PermGroup const &other) const
{
  if (degree_ != other.degree_)
    return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](Perm const &g) { return other.contains(g); });
}

bool PermGroup::is_abelian() const
{
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        return false;
    }
  }
  return true;
}

bool PermGroup::is_normalized_by(Perm const &g) const
{
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](Perm const &h) { return contains(h.conjugate_by(g)); });
}

bool PermGroup::is_normal_in(PermGroup const &other) const
{
  if (!is_subgroup_of(other))
    return false;
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](Perm const &g) { return is_normalized_by(g); });
}

bool operator==(PermGroup const &a, PermGroup const &b)
{
  return a.order_ == b.order_ && a.is_subgroup_of(b) && b.is_subgroup_of(a);
}

// ---------------------------------------------------------------- classes

namespace {

void require_enumerable(PermGroup const &g, Limits const &limits, char const *what)
{
  if (g.order() > Integer(std::to_string(limits.max_enumeration)))
    throw ResourceError(std::string(what) + ": group order " + g.order().get_str() +
                        " exceeds the enumeration bound " + std::to_string(limits.max_enumeration));
}

} // namespace

ConjugacyClasses::ConjugacyClasses(PermGroup group, Limits const &limits)
  : group_(std::move(group))
{
  require_enumerable(group_, limits, "conjugacy_classes");
  std::uint64_t const n = group_.order_u64();
  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
  class_of_rank_.assign(n, unassigned);

  std::vector<Perm> gens;
  for (auto const &g : group_.generators()) {
    if (!g.is_identity())
      gens.push_back(g);
  }

  std::vector<ConjugacyClass> found;
  std::deque<Perm> queue;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (class_of_rank_[r] != unassigned)
      continue;
    auto const id = static_cast<std::uint32_t>(found.size());
    ConjugacyClass cls;
    cls.representative = group_.unrank(r);
    cls.element_order = cls.representative.order();
    cls.size = 1;
    class_of_rank_[r] = id;
    queue.push_back(cls.representative);
    while (!queue.empty()) {
      Perm x = std::move(queue.front());
      queue.pop_front();
      for (auto const &s : gens) {
        Perm y = x.conjugate_by(s);
        std::uint64_t const ry = group_.rank(y);
        if (class_of_rank_[ry] != unassigned)
          continue;
        class_of_rank_[ry] = id;
        ++cls.size;
        if (y < cls.representative)
          cls.representative = y;
        queue.push_back(std::move(y));
      }
    }
    found.push_back(std::move(cls));
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto const &x = found[a];
    auto const &y = found[b];
    if (x.element_order != y.element_order)
      return x.element_order < y.element_order;
    if (x.size != y.size)
      return x.size < y.size;
    return x.representative < y.representative;
  });
  std::vector<std::uint32_t> relabel(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    relabel[order[i]] = static_cast<std::uint32_t>(i);
    classes_.push_back(std::move(found[order[i]]));
  }
  for (auto &c : class_of_rank_)
    c = relabel[c];
}

std::size_t ConjugacyClasses::class_of(Perm const &g) const
{
  return class_of_rank_[group_.rank(g)];
}

std::vector<std::uint64_t> ConjugacyClasses::members(std::size_t c) const
{
  std::vector<std::uint64_t> result;
  result.reserve(classes_[c].size);
  for (std::uint64_t r = 0; r < class_of_rank_.size(); ++r) {
    if (class_of_rank_[r] == c)
      result.push_back(r);
  }
  return result;
}

std::size_t ConjugacyClasses::power_class(std::size_t c, std::int64_t e) const
{
  return class_of(classes_[c].representative.pow(e));
}

std::vector<ConjugacyClass> conjugacy_classes(PermGroup const &g, Limits const &limits)
{
  return ConjugacyClasses(g, limits).classes();
}

// ---------------------------------------------------------------- subgroups

PermGroup subgroup_where(PermGroup const &g, std::function<bool(Perm const &)> const &pred,
                         Limits const &limits)
{
  require_enumerable(g, limits, "subgroup search");
  PermGroup h = PermGroup::trivial(g.degree());
  g.for_each_element([&](Perm const &e) {
    if (!h.contains(e) && pred(e))
      h = h.closure(e);
  });
  return h;
}

PermGroup centralizer(PermGroup const &g, Perm const &x, Limits const &limits)
{
  if (!g.contains(x))
    throw InvalidArgument("centralizer: " + x.str() + " is not in the group");
  return subgroup_where(g, [&](Perm const &e) { return e * x == x * e; }, limits);
}

PermGroup normalizer(PermGroup const &g, PermGroup const &h, Limits const &limits)
{
  if (!h.is_subgroup_of(g))
    throw InvalidArgument("normalizer: not a subgroup");
  if (h.is_normal_in(g))
    return g;
  return subgroup_where(g, [&](Perm const &e) { return h.is_normalized_by(e); }, limits);
}

PermGroup normal_closure(PermGroup const &k, PermGroup const &h)
{
  PermGroup n(h.degree(), h.generators());
  std::vector<Perm> pending = h.generators();
  for (std::size_t i = 0; i < pending.size(); ++i) {
    for (auto const &s : k.generators()) {
      Perm c = pending[i].conjugate_by(s);
      if (!n.contains(c)) {
        n = n.closure(c);
        pending.push_back(std::move(c));
      }
    }
  }
  return n;
}

PermGroup derived_subgroup(PermGroup const &g)
{
  std::vector<Perm> commutators;
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity())
        commutators.push_back(std::move(c));
    }
  }
  return normal_closure(g, PermGroup(g.degree(), std::move(commutators)));
}

DerivedSeries derived_series(PermGroup const &g)
{
  DerivedSeries series;
  series.terms.push_back(g);
  for (;;) {
    PermGroup const &current = series.terms.back();
    if (current.is_trivial()) {
      series.solvable = true;
      series.length = series.terms.size() - 1;
      return series;
    }
    PermGroup next = derived_subgroup(current);
    if (next.order() == current.order()) {
      series.solvable = false;
      series.length = series.terms.size() - 1;
      return series;
    }
    series.terms.push_back(std::move(next));
  }
}

std::size_t derived_length(PermGroup const &g)
{
  auto const series = derived_series(g);
  if (!series.solvable)
    throw InvalidArgument("derived_length: group is not solvable");
  return series.length;
}

// ---------------------------------------------------------------- Sylow

PermGroup sylow_subgroup(PermGroup const &g, std::uint64_t p, Limits const &limits)
{
  if (!is_prime(p))
    throw InvalidArgument("sylow_subgroup: " + std::to_string(p) + " is not prime");

  Integer target = 1;
  {
    Integer n = g.order();
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= static_cast<unsigned long>(p);
      target *= static_cast<unsigned long>(p);
    }
  }

  PermGroup q = PermGroup::trivial(g.degree());
  while (q.order() < target) {
    PermGroup const n = normalizer(g, q, limits);
    std::uint64_t const size = n.order_u64();
    bool grown = false;
    for (std::uint64_t r = 0; r < size && !grown; ++r) {
      Perm const e = n.unrank(r);
      if (q.contains(e))
        continue;
      Perm const ep = p_part(e, p);
      if (ep.is_identity() || q.contains(ep))
        continue;
      q = q.closure(ep);
      grown = true;
    }
    if (!grown)
      throw EngineError("sylow_subgroup: no p-element extends a non-Sylow p-subgroup");
  }
  return q;
}

SylowSystem sylow_system(PermGroup const &g, std::uint64_t p, Limits const &limits)
{
  SylowSystem sys;
  sys.prime = p;
  sys.sylow = sylow_subgroup(g, p, limits);
  sys.normalizer = normalizer(g, sys.sylow, limits);

  auto const elements = sys.sylow.elements();
  auto members_of = [&](Perm const &conj) {
    std::vector<std::uint64_t> m;
    m.reserve(elements.size());
    for (auto const &e : elements)
      m.push_back(g.rank(e.conjugate_by(conj)));
    std::sort(m.begin(), m.end());
    return m;
  };

  std::map<std::vector<std::uint64_t>, std::size_t> index;
  sys.conjugators.push_back(Perm(g.degree()));
  sys.members.push_back(members_of(sys.conjugators.front()));
  index.emplace(sys.members.front(), 0);
  for (std::size_t i = 0; i < sys.conjugators.size(); ++i) {
    for (auto const &s : g.generators()) {
      Perm c = sys.conjugators[i] * s;
      auto m = members_of(c);
      if (index.count(m))
        continue;
      index.emplace(m, sys.conjugators.size());
      sys.conjugators.push_back(std::move(c));
      sys.members.push_back(std::move(m));
    }
  }

  if (Integer(static_cast<unsigned long>(sys.count())) * sys.normalizer.order() != g.order())
    throw EngineError("sylow_system: number of Sylow subgroups is not [G : N_G(P)]");
  return sys;
}

std::uint64_t sylow_count_containing(SylowSystem const &sys, Perm const &x)
{
  if (!is_p_element(x, sys.prime))
    throw InvalidArgument("sylow_count_containing: " + x.str() + " is not a " +
                          std::to_string(sys.prime) + "-element");
  std::uint64_t count = 0;
  for (auto const &c : sys.conjugators) {
    // x lies in P^c iff c x c^-1 lies in P
    if (sys.sylow.contains(x.conjugate_by(c.inverse())))
      ++count;
  }
  return count;
}

std::uint64_t sylow_count_containing(PermGroup const &g, std::uint64_t p, Perm const &x,
                                     Limits const &limits)
{
  if (!g.contains(x))
    throw InvalidArgument("sylow_count_containing: " + x.str() + " is not in the group");
  if (!is_p_element(x, p))
    throw InvalidArgument("sylow_count_containing: " + x.str() + " is not a " +
                          std::to_string(p) + "-element");
  return sylow_count_containing(sylow_system(g, p, limits), x);
}

std::vector<Perm> p_elements(PermGroup const &g, std::uint64_t p, Limits const &limits)
{
  require_enumerable(g, limits, "p_elements");
  std::vector<Perm> result;
  g.for_each_element([&](Perm const &e) {
    if (is_p_element(e, p))
      result.push_back(e);
  });
  return result;
}

bool is_ti_sylow(SylowSystem const &sys, PermGroup const &g)
{
  auto const &p0 = sys.members.front();
  std::size_t const full = p0.size();

  bool ti = true;
  std::map<std::uint64_t, std::size_t> containing;
  for (auto const &m : sys.members) {
    std::vector<std::uint64_t> common;
    std::set_intersection(p0.begin(), p0.end(), m.begin(), m.end(), std::back_inserter(common));
    if (common.size() != 1 && common.size() != full)
      ti = false;
    for (auto r : common)
      ++containing[r];
  }

  // equivalently: every nontrivial element of P lies in no other Sylow subgroup
  std::uint64_t const identity = g.rank(Perm(g.degree()));
  bool all_picky = true;
  for (auto r : p0) {
    if (r != identity && containing[r] != 1)
      all_picky = false;
  }
  if (ti != all_picky)
    throw EngineError("is_ti_sylow: TI test disagrees with the picky-element characterization");
  return ti;
}

bool is_ti_sylow(PermGroup const &g, std::uint64_t p, Limits const &limits)
{
  return is_ti_sylow(sylow_system(g, p, limits), g);
}

} // namespace pickylab
