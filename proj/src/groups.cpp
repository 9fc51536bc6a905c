#include "moonshine/groups.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace moonshine::groups {

using Index = PermGroup::Index;
using IndexSet = std::vector<Index>; // sorted

namespace {

// Cayley table is built when |G|^2 * degree stays below this many operations.
constexpr std::size_t kTableBudget = 40'000'000;

} // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t element_cap)
: degree_(degree), generators_(std::move(generators)), cap_(element_cap)
{
  for (const auto& s : generators_)
    if (s.degree() != degree_)
      throw std::invalid_argument("PermGroup: generator degree mismatch");

  ElementSet found{Perm::identity(degree_)};
  std::unordered_map<Perm, Index, PermHash> seen{{found[0], 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& s : generators_) {
      Perm y = s * found[i];
      if (seen.contains(y))
        continue;
      if (found.size() >= cap_)
        throw CapExceeded("group order exceeds the element cap of " + std::to_string(cap_));
      seen.emplace(y, static_cast<Index>(found.size()));
      found.push_back(std::move(y));
    }
  }
  std::sort(found.begin(), found.end());
  elements_ = std::move(found);
  index_.reserve(elements_.size());
  for (Index i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], i);

  const std::size_t n = elements_.size();
  if (n * n * std::max<std::size_t>(degree_, 1) <= kTableBudget) {
    table_.resize(n * n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        table_[std::size_t(i) * n + j] = index_.at(elements_[i] * elements_[j]);
  }
  inverse_.resize(n);
  for (Index i = 0; i < n; ++i)
    inverse_[i] = index_.at(elements_[i].inverse());
  for (const auto& s : generators_)
    generator_indices_.push_back(index_.at(s));
}

std::optional<Index> PermGroup::index_of(const Perm& p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Index PermGroup::product(Index i, Index j) const
{
  if (!table_.empty())
    return table_[std::size_t(i) * elements_.size() + j];
  return index_.at(elements_[i] * elements_[j]);
}

// ---------------------------------------------------------------------------

PermGroup make_cyclic(std::size_t n, std::size_t element_cap)
{
  if (n == 0)
    throw std::invalid_argument("make_cyclic: n must be positive");
  std::vector<Perm> gens;
  if (n > 1) {
    std::vector<std::uint32_t> pts(n);
    for (std::uint32_t i = 0; i < n; ++i)
      pts[i] = i;
    gens.push_back(Perm::cycle(n, pts));
  }
  return PermGroup(n, std::move(gens), element_cap);
}

PermGroup make_dihedral(std::size_t n, std::size_t element_cap)
{
  if (n < 3)
    throw std::invalid_argument("make_dihedral: n must be at least 3");
  std::vector<std::uint32_t> rot(n), refl(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    refl[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return PermGroup(n, {Perm(rot), Perm(refl)}, element_cap);
}

PermGroup make_alternating(std::size_t n, std::size_t element_cap)
{
  if (n == 0)
    throw std::invalid_argument("make_alternating: n must be positive");
  std::vector<Perm> gens;
  for (std::uint32_t i = 2; i < n; ++i)
    gens.push_back(Perm::cycle(n, {0, 1, i}));
  return PermGroup(n, std::move(gens), element_cap);
}

PermGroup make_symmetric(std::size_t n, std::size_t element_cap)
{
  if (n == 0)
    throw std::invalid_argument("make_symmetric: n must be positive");
  std::vector<Perm> gens;
  for (std::uint32_t i = 0; i + 1 < n; ++i)
    gens.push_back(Perm::cycle(n, {i, i + 1}));
  return PermGroup(n, std::move(gens), element_cap);
}

// ---------------------------------------------------------------------------
// Index-level machinery. Subgroups of the ambient group are sorted index
// lists; membership tests go through byte masks of size |G|.

namespace {

struct Subgroup {
  IndexSet elements;
  IndexSet gens;
};

class Engine {
public:
  explicit Engine(const PermGroup& g) : g_(g) {}

  std::vector<char> mask(const IndexSet& s) const
  {
    std::vector<char> m(g_.order());
    for (auto i : s)
      m[i] = 1;
    return m;
  }

  Index conjugate(Index s, Index x) const
  {
    return g_.product(g_.product(s, x), g_.inverse(s));
  }

  IndexSet closure(const IndexSet& gens) const
  {
    std::vector<char> seen(g_.order());
    IndexSet out{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto s : gens) {
        Index y = g_.product(s, out[i]);
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Subgroup generated by `items`, with a small generating set picked greedily.
  Subgroup generated_by(const IndexSet& items) const
  {
    Subgroup h{{0}, {}};
    std::vector<char> in = mask(h.elements);
    for (auto x : items) {
      if (in[x])
        continue;
      h.gens.push_back(x);
      h.elements = closure(h.gens);
      in = mask(h.elements);
    }
    return h;
  }

  Subgroup whole() const
  {
    IndexSet all(g_.order());
    for (Index i = 0; i < all.size(); ++i)
      all[i] = i;
    return {all, g_.generator_indices()};
  }

  bool is_subgroup(const IndexSet& s) const
  {
    return !s.empty() && generated_by(s).elements == s;
  }

  std::vector<IndexSet> classes(const Subgroup& h) const
  {
    std::vector<char> done(g_.order());
    std::vector<IndexSet> out;
    for (auto x : h.elements) {
      if (done[x])
        continue;
      IndexSet orbit{x};
      done[x] = 1;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (auto s : h.gens) {
          Index y = conjugate(s, orbit[i]);
          if (!done[y]) {
            done[y] = 1;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      out.push_back(std::move(orbit));
    }
    return out;
  }

  bool normalizes(const IndexSet& conjugators, const Subgroup& n) const
  {
    auto in = mask(n.elements);
    for (auto s : conjugators)
      for (auto t : n.gens)
        if (!in[conjugate(s, t)])
          return false;
    return true;
  }

  /*
   * Every normal subgroup is the join of the normal closures of the classes
   * it contains, so joining class closures one at a time starting from the
   * trivial subgroup reaches all of them.
   */
  std::vector<Subgroup> normal_subgroups(const Subgroup& h) const
  {
    auto cls = classes(h);
    std::vector<Subgroup> closures;
    closures.reserve(cls.size());
    for (const auto& c : cls)
      closures.push_back(generated_by(c));

    std::vector<Subgroup> found{{{0}, {}}};
    std::set<IndexSet> seen{found[0].elements};
    for (std::size_t qi = 0; qi < found.size(); ++qi) {
      auto in = mask(found[qi].elements);
      for (std::size_t k = 0; k < cls.size(); ++k) {
        if (in[cls[k].front()])
          continue;
        IndexSet gens = found[qi].gens;
        gens.insert(gens.end(), closures[k].gens.begin(), closures[k].gens.end());
        Subgroup m{closure(gens), {}};
        if (!seen.insert(m.elements).second)
          continue;
        m.gens = generated_by(gens).gens;
        found.push_back(std::move(m));
      }
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.elements.size() != b.elements.size())
        return a.elements.size() < b.elements.size();
      return a.elements < b.elements;
    });
    return found;
  }

  bool quotient_abelian(const Subgroup& h, const IndexSet& n) const
  {
    auto in = mask(n);
    for (auto a : h.gens)
      for (auto b : h.gens) {
        Index comm = g_.product(g_.product(a, b), g_.product(g_.inverse(a), g_.inverse(b)));
        if (!in[comm])
          return false;
      }
    return true;
  }

  FactorDescriptor factor(const Subgroup& h, const IndexSet& n) const
  {
    return {h.elements.size() / n.size(), quotient_abelian(h, n), true};
  }

  // Normal subgroups of h that are maximal among the proper ones.
  std::vector<const Subgroup*> maximal_normals(const Subgroup& h,
                                               const std::vector<Subgroup>& normals) const
  {
    std::vector<const Subgroup*> out;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (normals[i].elements.size() == h.elements.size())
        continue;
      bool maximal = true;
      for (std::size_t j = 0; j < normals.size() && maximal; ++j) {
        const auto& big = normals[j].elements;
        if (big.size() <= normals[i].elements.size() || big.size() == h.elements.size())
          continue;
        if (std::includes(big.begin(), big.end(), normals[i].elements.begin(), normals[i].elements.end()))
          maximal = false;
      }
      if (maximal)
        out.push_back(&normals[i]);
    }
    return out;
  }

  IndexSet to_indices(const ElementSet& s) const
  {
    IndexSet out;
    out.reserve(s.size());
    for (const auto& p : s) {
      auto i = g_.index_of(p);
      if (!i)
        throw NotASubgroup("element " + p.cycle_notation() + " is not in the group");
      out.push_back(*i);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ElementSet to_elements(const IndexSet& s) const
  {
    ElementSet out;
    out.reserve(s.size());
    for (auto i : s)
      out.push_back(g_.element(i));
    return out;
  }

  Subgroup as_subgroup(const ElementSet& s) const
  {
    IndexSet idx = to_indices(s);
    Subgroup h = generated_by(idx);
    if (h.elements != idx)
      throw NotASubgroup("element set is not closed under multiplication");
    return h;
  }

  const PermGroup& group() const { return g_; }

private:
  const PermGroup& g_;
};

} // namespace

// ---------------------------------------------------------------------------

bool is_abelian(const PermGroup& g)
{
  const auto& gens = g.generator_indices();
  for (auto a : gens)
    for (auto b : gens)
      if (g.product(a, b) != g.product(b, a))
        return false;
  return true;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& g)
{
  Engine e(g);
  std::vector<ConjClass> out;
  for (const auto& c : e.classes(e.whole()))
    out.push_back({g.element(c.front()), e.to_elements(c)});
  return out;
}

bool is_normal(const ElementSet& h, const PermGroup& g)
{
  Engine e(g);
  Subgroup sub = e.as_subgroup(h);
  return e.normalizes(g.generator_indices(), sub);
}

std::vector<ElementSet> normal_subgroups(const PermGroup& g)
{
  Engine e(g);
  std::vector<ElementSet> out;
  for (const auto& n : e.normal_subgroups(e.whole()))
    out.push_back(e.to_elements(n.elements));
  return out;
}

std::vector<ElementSet> normal_subgroups_by_class_unions(const PermGroup& g, std::size_t max_classes)
{
  Engine e(g);
  auto cls = e.classes(e.whole());
  if (cls.size() > max_classes)
    throw TooManyClasses(std::to_string(cls.size()) + " conjugacy classes exceed the limit of " +
                         std::to_string(max_classes));
  std::vector<IndexSet> found;
  const std::size_t rest = cls.size() - 1; // class 0 is {e}
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rest); ++bits) {
    std::size_t size = 1;
    for (std::size_t k = 0; k < rest; ++k)
      if (bits >> k & 1)
        size += cls[k + 1].size();
    if (g.order() % size != 0)
      continue;
    IndexSet u = cls[0];
    for (std::size_t k = 0; k < rest; ++k)
      if (bits >> k & 1)
        u.insert(u.end(), cls[k + 1].begin(), cls[k + 1].end());
    std::sort(u.begin(), u.end());
    if (e.is_subgroup(u))
      found.push_back(std::move(u));
  }
  std::sort(found.begin(), found.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<ElementSet> out;
  for (const auto& s : found)
    out.push_back(e.to_elements(s));
  return out;
}

PermGroup quotient_group(const PermGroup& g, const ElementSet& n)
{
  Engine e(g);
  Subgroup sub = e.as_subgroup(n);
  if (!e.normalizes(g.generator_indices(), sub))
    throw NotNormal("subgroup is not normal");

  constexpr std::uint32_t unset = ~0u;
  std::vector<std::uint32_t> coset(g.order(), unset);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (coset[x] != unset)
      continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto y : sub.elements)
      coset[g.product(x, y)] = id;
  }
  std::vector<Perm> gens;
  for (auto s : g.generator_indices()) {
    std::vector<std::uint32_t> images(reps.size());
    for (std::size_t j = 0; j < reps.size(); ++j)
      images[j] = coset[g.product(s, reps[j])];
    gens.emplace_back(std::move(images));
  }
  return PermGroup(reps.size(), std::move(gens), g.element_cap());
}

bool is_simple(const PermGroup& g)
{
  Engine e(g);
  return e.normal_subgroups(e.whole()).size() == 2;
}

SubgroupChain composition_series(const PermGroup& g)
{
  Engine e(g);
  std::vector<IndexSet> terms;
  Subgroup current = e.whole();
  terms.push_back(current.elements);
  while (current.elements.size() > 1) {
    auto normals = e.normal_subgroups(current);
    // Sorted by size then lexicographically: the last proper entry of the
    // largest size class is wanted, so step back to the first of that size.
    std::size_t i = normals.size() - 2;
    while (i > 0 && normals[i - 1].elements.size() == normals[i].elements.size())
      --i;
    current = std::move(normals[i]);
    terms.push_back(current.elements);
  }
  std::reverse(terms.begin(), terms.end());

  SubgroupChain chain;
  for (const auto& t : terms)
    chain.terms.push_back(e.to_elements(t));
  series_factors(g, chain);
  return chain;
}

std::vector<FactorDescriptor> series_factors(const PermGroup& g, const SubgroupChain& chain)
{
  Engine e(g);
  if (chain.terms.empty() || chain.terms.front().size() != 1 || chain.terms.back().size() != g.order())
    throw std::invalid_argument("chain must run from the trivial subgroup to the whole group");
  std::vector<Subgroup> subs;
  for (const auto& t : chain.terms)
    subs.push_back(e.as_subgroup(t));
  std::vector<FactorDescriptor> out;
  for (std::size_t i = 1; i < subs.size(); ++i) {
    const auto& lower = subs[i - 1];
    const auto& upper = subs[i];
    if (!std::includes(upper.elements.begin(), upper.elements.end(),
                       lower.elements.begin(), lower.elements.end()) ||
        lower.elements.size() == upper.elements.size() ||
        !e.normalizes(upper.gens, lower))
      throw std::invalid_argument("chain term " + std::to_string(i - 1) +
                                  " is not a proper normal subgroup of its successor");
    auto normals = e.normal_subgroups(upper);
    for (const auto& n : normals) {
      if (n.elements.size() > lower.elements.size() && n.elements.size() < upper.elements.size() &&
          std::includes(n.elements.begin(), n.elements.end(), lower.elements.begin(), lower.elements.end()))
        throw std::invalid_argument("factor " + std::to_string(i) + " of the chain is not simple");
    }
    out.push_back(e.factor(upper, lower.elements));
  }
  return out;
}

std::vector<FactorDescriptor> jordan_holder_factors(const PermGroup& g)
{
  auto factors = series_factors(g, composition_series(g));
  for (const auto& f : factors)
    if (f.order >= kFactorOrderLimit)
      throw OrderTooLarge("composition factor of order " + std::to_string(f.order) +
                          " is too large to identify by order");
  std::sort(factors.begin(), factors.end());
  return factors;
}

SeriesCensus all_composition_series(const PermGroup& g)
{
  Engine e(g);
  std::map<IndexSet, SeriesCensus> memo;

  auto visit = [&](auto&& self, const Subgroup& h) -> const SeriesCensus& {
    if (auto it = memo.find(h.elements); it != memo.end())
      return it->second;
    SeriesCensus census;
    if (h.elements.size() == 1) {
      census.series_count = 1;
      census.factor_multisets.insert(std::vector<FactorDescriptor>{});
    } else {
      auto normals = e.normal_subgroups(h);
      for (const Subgroup* n : e.maximal_normals(h, normals)) {
        FactorDescriptor f = e.factor(h, n->elements);
        const SeriesCensus& below = self(self, *n);
        census.series_count += below.series_count;
        for (auto ms : below.factor_multisets) {
          ms.insert(std::upper_bound(ms.begin(), ms.end(), f), f);
          census.factor_multisets.insert(std::move(ms));
        }
      }
    }
    return memo.emplace(h.elements, std::move(census)).first->second;
  };
  return visit(visit, e.whole());
}

// ---------------------------------------------------------------------------

ClassFunction trivial_character(std::size_t class_count)
{
  return {std::vector<mpq_class>(class_count, mpq_class(1))};
}

ClassFunction class_indicator(std::size_t class_count, std::size_t k)
{
  if (k >= class_count)
    throw ClassMismatch("class index out of range");
  ClassFunction f{std::vector<mpq_class>(class_count)};
  f.values[k] = 1;
  return f;
}

ClassFunction permutation_character(const PermGroup& g)
{
  ClassFunction f;
  for (const auto& c : conjugacy_classes(g))
    f.values.emplace_back(static_cast<unsigned long>(c.representative.fixed_points()));
  return f;
}

mpq_class class_fn_inner(const ClassFunction& phi, const ClassFunction& psi,
                         std::span<const ConjClass> classes)
{
  if (phi.values.size() != classes.size() || psi.values.size() != classes.size())
    throw ClassMismatch("class function is not defined on exactly the group's classes");
  mpq_class sum = 0;
  std::size_t order = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    auto size = classes[k].members.size();
    order += size;
    sum += mpq_class(static_cast<unsigned long>(size)) * phi.values[k] * psi.values[k];
  }
  return sum / mpq_class(static_cast<unsigned long>(order));
}

mpq_class class_fn_inner(const ClassFunction& phi, const ClassFunction& psi, const PermGroup& g)
{
  auto classes = conjugacy_classes(g);
  return class_fn_inner(phi, psi, classes);
}

} // namespace moonshine::groups
