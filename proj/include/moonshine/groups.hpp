#ifndef MOONSHINE_GROUPS_HPP
#define MOONSHINE_GROUPS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "moonshine/perm.hpp"

namespace moonshine::groups {

inline constexpr std::size_t kDefaultElementCap = 100000;

/// Simple groups below this order are determined by (order, abelian).
inline constexpr std::size_t kFactorOrderLimit = 20160;

class CapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

class NotASubgroup : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotNormal : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class TooManyClasses : public std::length_error {
public:
  using std::length_error::length_error;
};

class OrderTooLarge : public std::length_error {
public:
  using std::length_error::length_error;
};

class ClassMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free list of group elements.
using ElementSet = std::vector<Perm>;

/*
 * Finite permutation group, fully enumerated at construction. Elements are
 * kept in ascending order, so index 0 is the identity and a sorted list of
 * indices orders the same way as the corresponding ElementSet.
 */
class PermGroup {
public:
  using Index = std::uint32_t;

  /// Throws CapExceeded if the closure of `generators` exceeds element_cap.
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::size_t element_cap = kDefaultElementCap);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  const ElementSet& elements() const { return elements_; }
  std::size_t element_cap() const { return cap_; }

  std::optional<Index> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  const Perm& element(Index i) const { return elements_[i]; }

  Index product(Index i, Index j) const;
  Index inverse(Index i) const { return inverse_[i]; }
  const std::vector<Index>& generator_indices() const { return generator_indices_; }

private:
  std::size_t degree_;
  std::vector<Perm> generators_;
  std::size_t cap_;
  ElementSet elements_;
  std::unordered_map<Perm, Index, PermHash> index_;
  std::vector<Index> table_; // row-major Cayley table, empty for large groups
  std::vector<Index> inverse_;
  std::vector<Index> generator_indices_;
};

PermGroup make_cyclic(std::size_t n, std::size_t element_cap = kDefaultElementCap);
/// Symmetries of the regular n-gon, n >= 3; order 2n.
PermGroup make_dihedral(std::size_t n, std::size_t element_cap = kDefaultElementCap);
PermGroup make_alternating(std::size_t n, std::size_t element_cap = kDefaultElementCap);
PermGroup make_symmetric(std::size_t n, std::size_t element_cap = kDefaultElementCap);

inline const ElementSet& enumerate(const PermGroup& g) { return g.elements(); }

bool is_abelian(const PermGroup& g);

struct ConjClass {
  Perm representative; // smallest member
  ElementSet members;
};

/// Classes ordered by representative; the identity class comes first.
std::vector<ConjClass> conjugacy_classes(const PermGroup& g);

/// Throws NotASubgroup unless h is a subgroup of g.
bool is_normal(const ElementSet& h, const PermGroup& g);

/// All normal subgroups, ordered by size and then lexicographically.
std::vector<ElementSet> normal_subgroups(const PermGroup& g);

/// Same result by brute force over unions of conjugacy classes; throws
/// TooManyClasses above max_classes.
std::vector<ElementSet> normal_subgroups_by_class_unions(const PermGroup& g,
                                                         std::size_t max_classes = 20);

/// Action of g's generators on the left cosets of n. Throws NotNormal.
PermGroup quotient_group(const PermGroup& g, const ElementSet& n);

bool is_simple(const PermGroup& g);

struct FactorDescriptor {
  std::size_t order = 0;
  bool is_abelian = false;
  bool is_simple = false;

  friend auto operator<=>(const FactorDescriptor&, const FactorDescriptor&) = default;
};

/// terms.front() is the trivial subgroup, terms.back() the whole group.
struct SubgroupChain {
  std::vector<ElementSet> terms;
};

SubgroupChain composition_series(const PermGroup& g);

/*
 * Checks that `chain` is a composition series of g and returns its factors
 * from the bottom up. Throws std::invalid_argument (or NotASubgroup) when a
 * term is not a subgroup, not normal in its successor, or the quotient is not
 * simple.
 */
std::vector<FactorDescriptor> series_factors(const PermGroup& g, const SubgroupChain& chain);

/// Sorted factor multiset. Throws OrderTooLarge for factors of order >= 20160.
std::vector<FactorDescriptor> jordan_holder_factors(const PermGroup& g);

/// Every composition series of g, summarized.
struct SeriesCensus {
  std::uint64_t series_count = 0;
  std::set<std::vector<FactorDescriptor>> factor_multisets; // each sorted
};

SeriesCensus all_composition_series(const PermGroup& g);

// ---------------------------------------------------------------------------
// Rational class functions

struct ClassFunction {
  std::vector<mpq_class> values; // indexed like conjugacy_classes()
};

ClassFunction trivial_character(std::size_t class_count);
ClassFunction class_indicator(std::size_t class_count, std::size_t k);

/// Fixed-point count of the natural action, one value per class.
ClassFunction permutation_character(const PermGroup& g);

/// (1/|G|) sum_C |C| phi(C) psi(C). Throws ClassMismatch.
mpq_class class_fn_inner(const ClassFunction& phi, const ClassFunction& psi,
                         std::span<const ConjClass> classes);
mpq_class class_fn_inner(const ClassFunction& phi, const ClassFunction& psi, const PermGroup& g);

} // namespace moonshine::groups

#endif
