#include "moonshine/monster.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "moonshine/modular.hpp"

namespace moonshine::monster {

using qseries::BiLaurentSeries;
using qseries::Coeff;
using qseries::Rectangle;

CoeffTable::CoeffTable(std::map<std::int64_t, mpz_class> values, std::string provenance)
: values_(std::move(values)), provenance_(std::move(provenance))
{
  if (values_.empty() || values_.begin()->first != -1)
    throw DatasetFormatError("coefficient table must start at n = -1");
  if (values_.begin()->second != 1)
    throw DatasetFormatError("coefficient table must have c(-1) = 1");
  std::int64_t expect = -1;
  for (const auto& [n, v] : values_) {
    if (n != expect++)
      throw DatasetFormatError("coefficient table has a gap before n = " + std::to_string(n));
  }
}

CoeffTable CoeffTable::from_series(const qseries::LaurentSeries& s, std::string provenance)
{
  std::map<std::int64_t, mpz_class> values;
  for (std::int64_t n = -1; n < s.trunc(); ++n) {
    Coeff c = s.coeff(n);
    if (c.get_den() != 1)
      throw DatasetFormatError("coefficient of q^" + std::to_string(n) + " is not an integer");
    values.emplace(n, c.get_num());
  }
  return CoeffTable(std::move(values), std::move(provenance));
}

const mpz_class& CoeffTable::at(std::int64_t n) const
{
  auto it = values_.find(n);
  if (it == values_.end())
    throw InsufficientData("coefficient table has no entry for n = " + std::to_string(n));
  return it->second;
}

CoeffTable CoeffTable::with_value(std::int64_t n, mpz_class v) const
{
  auto values = values_;
  values.at(n) = std::move(v);
  return CoeffTable(std::move(values), provenance_ + " (modified)");
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<std::int64_t, mpz_class>> parse_pairs(std::istream& in)
{
  std::vector<std::pair<std::int64_t, mpz_class>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#')
      continue;
    std::istringstream ls(line);
    std::int64_t index;
    std::string value, extra;
    if (!(ls >> index >> value) || (ls >> extra))
      throw DatasetFormatError("line " + std::to_string(lineno) + ": expected `index value`");
    mpz_class v;
    if (v.set_str(value, 10) != 0)
      throw DatasetFormatError("line " + std::to_string(lineno) + ": bad integer '" + value + "'");
    out.emplace_back(index, std::move(v));
  }
  return out;
}

} // namespace

CoeffTable parse_coeff_table(std::istream& in, std::string provenance)
{
  std::map<std::int64_t, mpz_class> values;
  for (auto& [n, v] : parse_pairs(in))
    if (!values.emplace(n, std::move(v)).second)
      throw DatasetFormatError("duplicate index " + std::to_string(n));
  return CoeffTable(std::move(values), std::move(provenance));
}

IrrepDims parse_irreps(std::istream& in, std::string provenance, const IrrepDims* base)
{
  std::map<std::int64_t, mpz_class> values;
  if (base)
    for (std::size_t i = 0; i < base->dims.size(); ++i)
      values[static_cast<std::int64_t>(i + 1)] = base->dims[i];
  std::set<std::int64_t> seen;
  for (auto& [n, v] : parse_pairs(in)) {
    if (!seen.insert(n).second)
      throw DatasetFormatError("duplicate index " + std::to_string(n));
    values[n] = std::move(v);
  }
  IrrepDims r{{}, std::move(provenance)};
  std::int64_t expect = 1;
  for (auto& [n, v] : values) {
    if (n != expect++)
      throw DatasetFormatError("irreducible dimensions must be indexed 1, 2, ... without gaps");
    if (r.dims.empty() ? v != 1 : v <= r.dims.back())
      throw DatasetFormatError("irreducible dimensions must start at 1 and increase strictly");
    r.dims.push_back(v);
  }
  return r;
}

CoeffTable embedded_coefficients()
{
  std::istringstream in{std::string(embedded_coefficients_text())};
  return parse_coeff_table(in, "embedded J~ head");
}

IrrepDims embedded_irreps()
{
  std::istringstream in{std::string(embedded_irreps_text())};
  return parse_irreps(in, "embedded monster irreducible dimensions head");
}

std::string format_dataset(std::string_view header, const std::map<std::int64_t, mpz_class>& values)
{
  std::ostringstream os;
  std::istringstream hs{std::string(header)};
  std::string line;
  while (std::getline(hs, line))
    os << "# " << line << '\n';
  for (const auto& [n, v] : values)
    os << n << ' ' << v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

std::string_view to_string(CheckStatus s)
{
  switch (s) {
  case CheckStatus::Pass: return "pass";
  case CheckStatus::Fail: return "fail";
  case CheckStatus::NotConfigured: return "not-configured";
  }
  return "?";
}

const std::vector<Decomposition>& thompson_identities()
{
  static const std::vector<Decomposition> ids{
      {{1, 1}, 0},
      {{1, 1, 1}, 0},
      {{2, 2, 1, 1}, 0},
      {{3, 3, 1, 2, 1}, 0},
      {{4, 5, 3, 2, 1, 1, 1}, 0},
  };
  return ids;
}

std::vector<IdentityResult> mckay_identity_check(const CoeffTable& c, const IrrepDims& r)
{
  const auto& ids = thompson_identities();
  const auto last = static_cast<std::int64_t>(ids.size()); // q^5 for c(6)
  if (!c.contains(last))
    throw InsufficientData("McKay-Thompson check needs J~ coefficients through q^" + std::to_string(last));

  std::vector<IdentityResult> out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    IdentityResult res;
    res.label = static_cast<int>(k) + 2;
    res.exponent = static_cast<std::int64_t>(k) + 1;
    res.lhs = c.at(res.exponent);
    res.decomposition = ids[k];
    res.decomposition.target = res.lhs;
    const auto& mult = ids[k].multiplicities;
    if (mult.size() > r.size()) {
      res.status = CheckStatus::NotConfigured;
    } else {
      mpz_class sum = 0;
      for (std::size_t i = 0; i < mult.size(); ++i)
        sum += mpz_class(static_cast<unsigned long>(mult[i])) * r.dims[i];
      res.status = sum == res.lhs ? CheckStatus::Pass : CheckStatus::Fail;
      res.rhs = std::move(sum);
    }
    out.push_back(std::move(res));
  }
  return out;
}

bool graded_dimension_check(const CoeffTable& c, std::span<const mpz_class> dims)
{
  for (std::size_t i = 0; i < dims.size(); ++i) {
    auto n = static_cast<std::int64_t>(i) - 1;
    if (!c.contains(n) || c.at(n) != dims[i])
      return false;
  }
  return true;
}

std::vector<Decomposition> decompose_bounded(const mpz_class& target, const IrrepDims& r,
                                             std::uint64_t max_mult, std::size_t max_parts,
                                             std::uint64_t node_budget)
{
  if (target < 0)
    throw std::invalid_argument("decompose_bounded: target must be nonnegative");
  if (max_mult < 1 || max_parts < 1)
    throw std::invalid_argument("decompose_bounded: bounds must be at least 1");
  if (max_parts > r.size())
    throw InsufficientData("decompose_bounded: only " + std::to_string(r.size()) +
                           " irreducible dimensions available");

  const mpz_class mm(static_cast<unsigned long>(max_mult));
  // reach[i] = largest value parts 0..i-1 can contribute
  std::vector<mpz_class> reach(max_parts + 1);
  for (std::size_t i = 0; i < max_parts; ++i)
    reach[i + 1] = reach[i] + mm * r.dims[i];

  std::vector<Decomposition> out;
  std::vector<std::uint64_t> mult(max_parts);
  std::uint64_t nodes = 0;

  auto dfs = [&](auto&& self, std::size_t level, const mpz_class& remaining) -> void {
    if (++nodes > node_budget)
      throw SearchSpaceTooLarge("decomposition search exceeded " + std::to_string(node_budget) + " nodes");
    if (level == 0) {
      if (remaining == 0)
        out.push_back({mult, target});
      return;
    }
    const std::size_t i = level - 1;
    mpz_class top = remaining / r.dims[i];
    std::uint64_t hi = top > mm ? max_mult : top.get_ui();
    for (std::uint64_t m = hi + 1; m-- > 0;) {
      mpz_class rest = remaining - mpz_class(static_cast<unsigned long>(m)) * r.dims[i];
      if (rest > reach[i])
        break; // smaller m only leaves more
      mult[i] = m;
      self(self, i, rest);
    }
    mult[i] = 0;
  };
  dfs(dfs, max_parts, target);
  return out;
}

// ---------------------------------------------------------------------------

KnzResult knz_verify(int order, const CoeffTable& c)
{
  if (order < 0)
    throw std::invalid_argument("knz_verify: order must be nonnegative");
  const int top = order + 1;
  if (!c.contains(std::max<std::int64_t>(order, std::int64_t(top) * top)))
    throw InsufficientCoefficients("knz_verify needs c(n) through n = " + std::to_string(top * top));

  const Rectangle work{-1, top, -1, top};
  const Rectangle box{-1, order, -1, order};

  // Apart from (1 - p q^-1), every factor has m >= 1 and n >= 0, so once that
  // factor is in, partial products only move up and truncation is exact.
  BiLaurentSeries lhs = BiLaurentSeries::monomial(work, 1, -1, 0);
  for (int n = -1; n <= top; ++n) {
    for (int m = 1; m <= top; ++m) {
      const std::int64_t k = std::int64_t(m) * n;
      if (k < -1)
        continue;
      const mpz_class& e = c.at(k);
      if (e == 0)
        continue;
      if (e < 0)
        throw std::invalid_argument("knz_verify: negative exponent c(" + std::to_string(k) + ")");
      auto factor = BiLaurentSeries::one(work) - BiLaurentSeries::monomial(work, 1, m, n);
      lhs = lhs * pow(factor, e);
    }
  }
  lhs = lhs.restricted(box);

  BiLaurentSeries rhs(box);
  for (int n = -1; n <= order; ++n) {
    rhs.add_term(n, 0, Coeff(c.at(n)));
    rhs.add_term(0, n, -Coeff(c.at(n)));
  }

  KnzResult res{lhs, rhs, lhs == rhs, {}};
  if (!res.equal) {
    std::set<BiLaurentSeries::Key> keys;
    for (const auto& [k, v] : lhs.terms())
      keys.insert(k);
    for (const auto& [k, v] : rhs.terms())
      keys.insert(k);
    for (const auto& [m, n] : keys) {
      Coeff a = lhs.coeff(m, n), b = rhs.coeff(m, n);
      if (a != b)
        res.mismatches.push_back({m, n, a, b});
    }
  }
  return res;
}

KnzResult knz_verify(int order, bool unnormalized_c0)
{
  if (order < 0)
    throw std::invalid_argument("knz_verify: order must be nonnegative");
  const std::int64_t top = order + 1;
  auto table = CoeffTable::from_series(modular::j_normalized(top * top + 1).series, "computed J~");
  if (unnormalized_c0)
    table = table.with_value(0, 744);
  return knz_verify(order, table);
}

// ---------------------------------------------------------------------------

const MonsterFacts& monster_facts()
{
  static const MonsterFacts facts{
      {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1},
       {23, 1}, {29, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}},
      194,
      172,
      163,
  };
  return facts;
}

mpz_class monster_order()
{
  mpz_class order = 1, pp;
  for (const auto& [p, e] : monster_facts().order_factorization) {
    mpz_ui_pow_ui(pp.get_mpz_t(), p, e);
    order *= pp;
  }
  return order;
}

} // namespace moonshine::monster
