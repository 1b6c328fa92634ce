#include "pickylab/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pickylab/errors.hpp"
#include "pickylab/numtheory.hpp"

namespace pickylab {

// ---------------------------------------------------------------- table

CharacterTable::CharacterTable(std::shared_ptr<ConjugacyClasses const> classes,
                               std::vector<std::vector<Cyclotomic>> values)
  : classes_(std::move(classes)), values_(std::move(values))
{
  auto const &cls = classes_->classes();
  for (auto const &row : values_) {
    if (row.size() != cls.size())
      throw InvalidArgument("character table rows must have one value per class");
  }
  for (auto const &row : values_) {
    auto const &v = row.front();
    if (!v.is_rational() || v.to_rational() <= 0 || v.to_rational().get_den() != 1)
      throw EngineError("character degree is not a positive integer");
    degrees_.push_back(v.to_rational().get_num().get_ui());
  }

  for (auto const &c : cls)
    exponent_ = lcm_u64(exponent_, c.element_order);
  for (auto r : prime_divisors(exponent_)) {
    std::vector<std::size_t> map(cls.size());
    for (std::size_t j = 0; j < cls.size(); ++j)
      map[j] = classes_->power_class(j, static_cast<std::int64_t>(r));
    power_maps_.emplace(r, std::move(map));
  }
  inverse_.resize(cls.size());
  for (std::size_t j = 0; j < cls.size(); ++j)
    inverse_[j] = classes_->power_class(j, static_cast<std::int64_t>(cls[j].element_order) - 1);
}

std::vector<std::size_t> const &CharacterTable::power_map(std::uint64_t r) const
{
  auto it = power_maps_.find(r);
  if (it == power_maps_.end())
    throw InvalidArgument("no power map for " + std::to_string(r) + " (not a prime divisor of |G|)");
  return it->second;
}

void verify_orthogonality(CharacterTable const &t)
{
  auto const &cls = t.classes().classes();
  std::size_t const k = t.size();
  Integer const order = t.group().order();
  if (k != cls.size())
    throw EngineError("number of characters differs from the number of classes");

  for (std::size_t j = 0; j < k; ++j) {
    if (t.value(0, j) != Cyclotomic(1))
      throw EngineError("row 0 is not the principal character");
  }

  Integer sum_sq = 0;
  for (std::size_t i = 0; i < k; ++i) {
    sum_sq += Integer(static_cast<unsigned long>(t.degree(i))) * static_cast<unsigned long>(t.degree(i));
    if (!mpz_divisible_ui_p(order.get_mpz_t(), t.degree(i)))
      throw EngineError("character degree " + std::to_string(t.degree(i)) + " does not divide |G|");
  }
  if (sum_sq != order)
    throw EngineError("sum of squared degrees is not |G|");

  std::vector<std::vector<Cyclotomic>> conj(k);
  for (std::size_t i = 0; i < k; ++i) {
    conj[i].reserve(k);
    for (std::size_t j = 0; j < k; ++j)
      conj[i].push_back(t.value(i, j).conj());
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = i; l < k; ++l) {
      Cyclotomic s;
      for (std::size_t j = 0; j < k; ++j)
        s += Cyclotomic(Rational(static_cast<long>(cls[j].size))) * t.value(i, j) * conj[l][j];
      Cyclotomic const expected = i == l ? Cyclotomic(Rational(order)) : Cyclotomic();
      if (s != expected)
        throw EngineError("row orthogonality fails for characters " + std::to_string(i) + ", " +
                          std::to_string(l));
    }
  }

  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t m = j; m < k; ++m) {
      Cyclotomic s;
      for (std::size_t i = 0; i < k; ++i)
        s += t.value(i, j) * conj[i][m];
      Cyclotomic expected;
      if (j == m)
        expected = Cyclotomic(Rational(order / static_cast<unsigned long>(cls[j].size)));
      if (s != expected)
        throw EngineError("column orthogonality fails for classes " + std::to_string(j) + ", " +
                          std::to_string(m));
    }
  }
}

// ---------------------------------------------------------------- Dixon-Schneider

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

/// Row-reduces the rows of m in place (mod q) and drops zero rows.
/// Returns pivot columns.
std::vector<std::size_t> rref(Mat &m, std::uint64_t q)
{
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  std::size_t const cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[row]);
    std::uint64_t const inv = modular::inverse(static_cast<std::int64_t>(m[row][c]), q);
    for (auto &x : m[row])
      x = modular::mul(x, inv, q);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0)
        continue;
      std::uint64_t const f = m[r][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        m[r][cc] = modular::sub(m[r][cc], modular::mul(f, m[row][cc], q), q);
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Basis of the null space {v : a v = 0} of a square matrix.
Mat null_space(Mat a, std::uint64_t q)
{
  std::size_t const n = a.size();
  auto pivots = rref(a, q);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = modular::sub(0, a[r][free], q);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial det(xI - a), coefficients lowest degree first.
Vec characteristic_polynomial(Mat h, std::uint64_t q)
{
  std::size_t const n = h.size();
  // similarity transform to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0)
      ++i;
    if (i == n)
      continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto &row : h)
        std::swap(row[i], row[j + 1]);
    }
    std::uint64_t const inv = modular::inverse(static_cast<std::int64_t>(h[j + 1][j]), q);
    for (i = j + 2; i < n; ++i) {
      std::uint64_t const u = modular::mul(h[i][j], inv, q);
      if (u == 0)
        continue;
      for (std::size_t c = 0; c < n; ++c)
        h[i][c] = modular::sub(h[i][c], modular::mul(u, h[j + 1][c], q), q);
      for (std::size_t r = 0; r < n; ++r)
        h[r][j + 1] = modular::add(h[r][j + 1], modular::mul(u, h[r][i], q), q);
    }
  }

  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    // p_{m+1} = (x - h_mm) p_m - sum_{i<m} h_im (prod_{t=i+1..m} h_{t,t-1}) p_i
    Vec next(m + 2, 0);
    for (std::size_t d = 0; d <= m; ++d) {
      next[d + 1] = modular::add(next[d + 1], p[m][d], q);
      next[d] = modular::sub(next[d], modular::mul(h[m][m], p[m][d], q), q);
    }
    std::uint64_t prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod = modular::mul(prod, h[i + 1][i], q);
      if (prod == 0)
        break;
      std::uint64_t const f = modular::mul(h[i][m], prod, q);
      for (std::size_t d = 0; d < p[i].size(); ++d)
        next[d] = modular::sub(next[d], modular::mul(f, p[i][d], q), q);
    }
    p[m + 1] = std::move(next);
  }
  return p[n];
}

std::vector<std::uint64_t> roots(Vec const &poly, std::uint64_t q)
{
  std::vector<std::uint64_t> r;
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint64_t v = 0;
    for (std::size_t d = poly.size(); d-- > 0;)
      v = modular::add(modular::mul(v, x, q), poly[d], q);
    if (v == 0)
      r.push_back(x);
  }
  return r;
}

class ClassAlgebra
{
public:
  ClassAlgebra(ConjugacyClasses const &cc, std::uint64_t q) : cc_(cc), q_(q), matrices_(cc.size()) {}

  /// (M_i)_{jk} = #{(x, y) in C_i x C_j : xy = g_k}, reduced mod q.
  Mat const &matrix(std::size_t i)
  {
    if (!matrices_[i].empty())
      return matrices_[i];
    std::size_t const k = cc_.size();
    auto const &group = cc_.group();
    std::vector<std::vector<std::uint64_t>> counts(k, std::vector<std::uint64_t>(k, 0));
    auto const members = cc_.members(i);
    for (auto r : members) {
      Perm const xinv = group.unrank(r).inverse();
      for (std::size_t c = 0; c < k; ++c) {
        std::size_t const j = cc_.class_of(xinv * cc_[c].representative);
        ++counts[j][c];
      }
    }
    Mat m(k, Vec(k));
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t c = 0; c < k; ++c)
        m[j][c] = counts[j][c] % q_;
    }
    matrices_[i] = std::move(m);
    return matrices_[i];
  }

private:
  ConjugacyClasses const &cc_;
  std::uint64_t q_;
  std::vector<Mat> matrices_;
};

/// Splits subspace (rows = RREF basis) into common eigenspaces of m.
std::vector<Mat> split(Mat const &basis, std::vector<std::size_t> const &pivots, Mat const &m,
                       std::uint64_t q)
{
  std::size_t const dim = basis.size();
  std::size_t const k = m.size();
  // restriction: m b_s = sum_t a_ts b_t, and the coordinates of a vector
  // in an RREF basis are its entries at the pivot columns
  Mat a(dim, Vec(dim, 0));
  for (std::size_t s = 0; s < dim; ++s) {
    Vec image(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t c = 0; c < k; ++c)
        acc += static_cast<unsigned __int128>(m[j][c]) * basis[s][c];
      image[j] = static_cast<std::uint64_t>(acc % q);
    }
    for (std::size_t t = 0; t < dim; ++t)
      a[t][s] = image[pivots[t]];
  }

  auto const eigenvalues = roots(characteristic_polynomial(a, q), q);
  std::vector<Mat> parts;
  std::size_t total = 0;
  for (auto lambda : eigenvalues) {
    Mat shifted = a;
    for (std::size_t t = 0; t < dim; ++t)
      shifted[t][t] = modular::sub(shifted[t][t], lambda, q);
    Mat coords = null_space(std::move(shifted), q);
    Mat vectors;
    for (auto const &c : coords) {
      Vec v(k, 0);
      for (std::size_t s = 0; s < dim; ++s) {
        if (c[s] == 0)
          continue;
        for (std::size_t j = 0; j < k; ++j)
          v[j] = modular::add(v[j], modular::mul(c[s], basis[s][j], q), q);
      }
      vectors.push_back(std::move(v));
    }
    total += vectors.size();
    parts.push_back(std::move(vectors));
  }
  if (total != dim)
    throw EngineError("class multiplication matrix is not diagonalizable over the chosen prime field");
  return parts;
}

std::string row_key(std::vector<Cyclotomic> const &row)
{
  std::string key;
  for (auto const &v : row) {
    key += v.str();
    key += '|';
  }
  return key;
}

} // namespace

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent)
{
  for (std::uint64_t q = exponent + 1;; q += exponent) {
    if (q * q > 4 * order && is_prime(q))
      return q;
  }
}

CharacterTable character_table(PermGroup const &g, Limits const &limits)
{
  if (g.order() > Integer(std::to_string(limits.max_table_order)))
    throw ResourceError("character_table: |G| = " + g.order().get_str() + " exceeds the bound " +
                        std::to_string(limits.max_table_order) +
                        "; for symmetric groups and S_n wr C_2 use the symfast evaluator (table1)");
  return character_table(std::make_shared<ConjugacyClasses const>(g, limits), limits);
}

CharacterTable character_table(std::shared_ptr<ConjugacyClasses const> classes, Limits const &limits)
{
  auto const &cc = *classes;
  std::uint64_t const order = cc.group().order_u64();
  std::size_t const k = cc.size();
  if (order > limits.max_table_order || k > limits.max_table_classes)
    throw ResourceError("character_table: group of order " + std::to_string(order) + " with " +
                        std::to_string(k) + " classes exceeds the configured bounds" +
                        "; for symmetric groups and S_n wr C_2 use the symfast evaluator (table1)");

  std::uint64_t exponent = 1;
  for (auto const &c : cc.classes())
    exponent = lcm_u64(exponent, c.element_order);
  std::uint64_t const q = dixon_prime(order, exponent);

  // common eigenvectors of all class matrices
  ClassAlgebra algebra(cc, q);
  Mat full(k, Vec(k, 0));
  for (std::size_t j = 0; j < k; ++j)
    full[j][j] = 1;
  std::vector<Mat> pending{full};
  std::vector<Vec> eigenvectors;

  std::vector<std::size_t> by_size(k);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return cc[a].size < cc[b].size; });

  for (std::size_t i : by_size) {
    if (pending.empty())
      break;
    if (i == 0)
      continue;
    std::vector<Mat> next;
    for (auto &space : pending) {
      if (space.size() == 1) {
        eigenvectors.push_back(space.front());
        continue;
      }
      auto pivots = rref(space, q);
      for (auto &part : split(space, pivots, algebra.matrix(i), q)) {
        rref(part, q);
        if (part.size() == 1)
          eigenvectors.push_back(part.front());
        else
          next.push_back(std::move(part));
      }
    }
    pending = std::move(next);
  }
  for (auto &space : pending) {
    if (space.size() != 1)
      throw EngineError("class algebra eigenspaces did not split into lines");
    eigenvectors.push_back(space.front());
  }
  if (eigenvectors.size() != k)
    throw EngineError("found " + std::to_string(eigenvectors.size()) + " central characters, expected " +
                      std::to_string(k));

  // exponents of primitive roots in F_q compatible across divisors of the exponent
  std::uint64_t const big_root = modular::pow(modular::primitive_root(q), (q - 1) / exponent, q);
  auto const isqrt = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order))) + 1;

  std::vector<std::vector<Cyclotomic>> values;
  for (auto &w : eigenvectors) {
    if (w[0] == 0)
      throw EngineError("central character vanishes at the identity class");
    std::uint64_t const inv0 = modular::inverse(static_cast<std::int64_t>(w[0]), q);
    for (auto &x : w)
      x = modular::mul(x, inv0, q);

    // |G| / chi(1)^2 = sum_j w_j w_{j*} / |C_j|
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t const jinv = cc.power_class(j, static_cast<std::int64_t>(cc[j].element_order) - 1);
      std::uint64_t const size_inv = modular::inverse(static_cast<std::int64_t>(cc[j].size % q), q);
      s = modular::add(s, modular::mul(modular::mul(w[j], w[jinv], q), size_inv, q), q);
    }
    if (s == 0)
      throw EngineError("degree equation is singular modulo q");
    std::uint64_t const d2 = modular::mul(order % q, modular::inverse(static_cast<std::int64_t>(s), q), q);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= isqrt && d < q; ++d) {
      if (d * d % q == d2 && order % d == 0) {
        degree = d;
        break;
      }
    }
    if (degree == 0)
      throw EngineError("no admissible degree for a central character");

    // chi_j = w_j chi(1) / |C_j| mod q
    Vec chi(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t const size_inv = modular::inverse(static_cast<std::int64_t>(cc[j].size % q), q);
      chi[j] = modular::mul(modular::mul(w[j], degree, q), size_inv, q);
    }

    // lift: chi(g) = sum_l mu_l zeta_m^l, mu_l = (1/m) sum_t chi(g^t) z^{-lt}
    std::vector<Cyclotomic> row(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t const m = cc[j].element_order;
      std::uint64_t const z = modular::pow(big_root, exponent / m, q);
      std::uint64_t const zinv = modular::inverse(static_cast<std::int64_t>(z), q);
      std::uint64_t const minv = modular::inverse(static_cast<std::int64_t>(m % q), q);
      Vec powers(m);
      for (std::uint64_t t = 0; t < m; ++t)
        powers[t] = chi[cc.power_class(j, static_cast<std::int64_t>(t))];
      std::vector<std::pair<std::int64_t, Rational>> terms;
      std::uint64_t zl = 1; // z^{-l}
      for (std::uint64_t l = 0; l < m; ++l) {
        std::uint64_t acc = 0;
        std::uint64_t zlt = 1;
        for (std::uint64_t t = 0; t < m; ++t) {
          acc = modular::add(acc, modular::mul(powers[t], zlt, q), q);
          zlt = modular::mul(zlt, zl, q);
        }
        std::uint64_t const mu = modular::mul(acc, minv, q);
        if (mu > degree)
          throw EngineError("eigenvalue multiplicity exceeds the degree while lifting");
        if (mu != 0)
          terms.emplace_back(static_cast<std::int64_t>(l), Rational(static_cast<long>(mu)));
        zl = modular::mul(zl, zinv, q);
      }
      row[j] = Cyclotomic::from_exponents(static_cast<std::uint32_t>(m), terms);
    }
    values.push_back(std::move(row));
  }

  // principal first, then by degree and value strings
  std::vector<std::string> keys;
  for (auto const &row : values)
    keys.push_back(row_key(row));
  std::vector<std::size_t> perm(values.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto is_principal = [&](std::size_t i) {
    return std::all_of(values[i].begin(), values[i].end(), [](Cyclotomic const &v) { return v == Cyclotomic(1); });
  };
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    bool const pa = is_principal(a), pb = is_principal(b);
    if (pa != pb)
      return pa;
    auto const da = values[a][0].to_rational(), db = values[b][0].to_rational();
    if (da != db)
      return da < db;
    return keys[a] < keys[b];
  });
  std::vector<std::vector<Cyclotomic>> sorted;
  for (auto i : perm)
    sorted.push_back(std::move(values[i]));

  CharacterTable table(std::move(classes), std::move(sorted));
  verify_orthogonality(table);
  return table;
}

// ---------------------------------------------------------------- extractors

CharacterSet irr_all(CharacterTable const &t)
{
  CharacterSet s(t.size());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

CharacterSet irr_pprime(CharacterTable const &t, std::uint64_t p)
{
  CharacterSet s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degree(i) % p != 0)
      s.push_back(i);
  }
  return s;
}

CharacterSet irr_nonvanishing_at(CharacterTable const &t, Perm const &x)
{
  std::size_t const c = t.class_of(x);
  CharacterSet s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t.value(i, c).is_zero())
      s.push_back(i);
  }
  return s;
}

CharacterSet irr_nonvanishing_on(CharacterTable const &t, PermGroup const &s, bool exclude_identity)
{
  if (!s.is_subgroup_of(t.group()))
    throw InvalidArgument("irr_nonvanishing_on: not a subgroup");
  std::vector<bool> meets(t.size() == 0 ? 0 : t.classes().size(), false);
  s.for_each_element([&](Perm const &e) {
    if (exclude_identity && e.is_identity())
      return;
    meets[t.class_of(e)] = true;
  });
  CharacterSet result;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t c = 0; c < meets.size(); ++c) {
      if (meets[c] && !t.value(i, c).is_zero()) {
        result.push_back(i);
        break;
      }
    }
  }
  return result;
}

std::vector<std::uint64_t> cd(CharacterTable const &t)
{
  std::vector<std::uint64_t> d = t.degrees();
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::vector<std::uint64_t> cd_p(CharacterTable const &t, std::uint64_t p)
{
  std::vector<std::uint64_t> d;
  for (auto deg : t.degrees())
    d.push_back(ipow(p, valuation(deg, p)));
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

FieldFingerprint field_of_value(CharacterTable const &t, std::size_t chi, Perm const &x)
{
  return field_fingerprint(t.value_at(chi, x), static_cast<std::uint32_t>(x.order()));
}

nlohmann::json table_to_json(CharacterTable const &t)
{
  nlohmann::json classes = nlohmann::json::array();
  for (auto const &c : t.classes().classes()) {
    classes.push_back({{"representative", c.representative.str()},
                       {"size", c.size},
                       {"order", c.element_order}});
  }
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (auto const &v : t.row(i))
      row.push_back(v.str());
    values.push_back(std::move(row));
  }
  return {{"format", 1},
          {"order", t.group().order().get_str()},
          {"degree", t.group().degree()},
          {"classes", std::move(classes)},
          {"degrees", t.degrees()},
          {"values", std::move(values)}};
}

} // namespace pickylab
