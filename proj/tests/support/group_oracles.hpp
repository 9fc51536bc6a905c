#ifndef MOONSHINE_TESTS_GROUP_ORACLES_HPP
#define MOONSHINE_TESTS_GROUP_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "moonshine/groups.hpp"

namespace moonshine::testing {

using groups::Perm;

struct NamedGroup {
  std::string name;
  std::function<groups::PermGroup()> make;
  std::size_t order;
};

inline std::size_t factorial(std::size_t n)
{
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

/// Every group of order <= max_order from the cyclic, dihedral, alternating and symmetric families.
inline std::vector<NamedGroup> family_groups(std::size_t max_order)
{
  std::vector<NamedGroup> out;
  for (std::size_t n = 1; n <= max_order; ++n)
    out.push_back({"C" + std::to_string(n), [n] { return groups::make_cyclic(n); }, n});
  for (std::size_t n = 3; 2 * n <= max_order; ++n)
    out.push_back({"D" + std::to_string(n), [n] { return groups::make_dihedral(n); }, 2 * n});
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t s = factorial(n);
    std::size_t a = n < 2 ? 1 : s / 2;
    if (a <= max_order)
      out.push_back({"A" + std::to_string(n), [n] { return groups::make_alternating(n); }, a});
    if (s <= max_order)
      out.push_back({"S" + std::to_string(n), [n] { return groups::make_symmetric(n); }, s});
  }
  return out;
}

/// Prime factors of n with multiplicity, ascending.
inline std::vector<std::size_t> prime_factors(std::size_t n)
{
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

inline std::size_t divisor_count(std::size_t n)
{
  std::size_t c = 0;
  for (std::size_t d = 1; d <= n; ++d)
    c += n % d == 0;
  return c;
}

inline bool is_prime(std::size_t n)
{
  return n >= 2 && prime_factors(n).size() == 1;
}

/// Composition series of C_n: orderings of the prime factor multiset.
inline std::uint64_t cyclic_series_count(std::size_t n)
{
  auto f = prime_factors(n);
  std::uint64_t total = factorial(f.size());
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i])
      ++j;
    total /= factorial(j - i);
    i = j;
  }
  return total;
}

/// Conjugacy classes by direct conjugation, as sorted member sets.
inline std::set<groups::ElementSet> brute_classes(const groups::PermGroup& g)
{
  std::set<groups::ElementSet> out;
  for (const auto& x : g.elements()) {
    std::set<Perm> cls;
    for (const auto& y : g.elements())
      cls.insert(y * x * y.inverse());
    out.insert(groups::ElementSet(cls.begin(), cls.end()));
  }
  return out;
}

/// Normal subgroups by checking closure and conjugation on every union of classes.
inline std::set<groups::ElementSet> brute_normal_subgroups(const groups::PermGroup& g)
{
  auto cls = brute_classes(g);
  std::vector<groups::ElementSet> list(cls.begin(), cls.end());
  std::set<groups::ElementSet> out;
  const std::size_t k = list.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
    std::set<Perm> h;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1)
        h.insert(list[i].begin(), list[i].end());
    if (!h.count(Perm::identity(g.degree())))
      continue;
    bool closed = true;
    for (auto a = h.begin(); closed && a != h.end(); ++a)
      for (auto b = h.begin(); closed && b != h.end(); ++b)
        closed = h.count(*a * *b) > 0;
    if (closed)
      out.insert(groups::ElementSet(h.begin(), h.end()));
  }
  return out;
}

inline std::vector<std::size_t> factor_orders(const std::vector<groups::FactorDescriptor>& fs)
{
  std::vector<std::size_t> out;
  for (const auto& f : fs)
    out.push_back(f.order);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace moonshine::testing

#endif
