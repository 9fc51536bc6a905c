#ifndef MOONSHINE_MONSTER_HPP
#define MOONSHINE_MONSTER_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "moonshine/qseries.hpp"

namespace moonshine::monster {

class InsufficientData : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientCoefficients : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SearchSpaceTooLarge : public std::length_error {
public:
  using std::length_error::length_error;
};

class DatasetFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Integer coefficients c(n) on a contiguous range of exponents starting at -1.
class CoeffTable {
public:
  CoeffTable(std::map<std::int64_t, mpz_class> values, std::string provenance);

  /// From an integral Laurent series known from q^-1 onward.
  static CoeffTable from_series(const qseries::LaurentSeries& s, std::string provenance);

  bool contains(std::int64_t n) const { return values_.contains(n); }
  /// Throws InsufficientData when n is outside the table.
  const mpz_class& at(std::int64_t n) const;
  std::int64_t last_index() const { return values_.rbegin()->first; }
  const std::map<std::int64_t, mpz_class>& values() const { return values_; }
  const std::string& provenance() const { return provenance_; }

  /// Copy with one entry replaced (used for negative controls).
  CoeffTable with_value(std::int64_t n, mpz_class v) const;

private:
  std::map<std::int64_t, mpz_class> values_;
  std::string provenance_;
};

/// Irreducible dimensions r_1, r_2, ... (dims[0] is r_1).
struct IrrepDims {
  std::vector<mpz_class> dims;
  std::string provenance;

  std::size_t size() const { return dims.size(); }
  /// 1-based access.
  const mpz_class& r(std::size_t i) const { return dims.at(i - 1); }
};

// ---------------------------------------------------------------------------
// Shipped datasets. Plain text, one `index value` pair per line, '#' comments.

std::string_view embedded_coefficients_text();
std::string_view embedded_irreps_text();

CoeffTable embedded_coefficients(); // J - 744, exponents -1..4
IrrepDims embedded_irreps();        // r_1..r_5

CoeffTable parse_coeff_table(std::istream& in, std::string provenance);

/*
 * Reads `index value` lines with 1-based indices. Entries in `in` replace or
 * extend those of `base`; the merged list must have no gaps, start at r_1 = 1
 * and increase strictly.
 */
IrrepDims parse_irreps(std::istream& in, std::string provenance, const IrrepDims* base = nullptr);

std::string format_dataset(std::string_view header, const std::map<std::int64_t, mpz_class>& values);

// ---------------------------------------------------------------------------

struct Decomposition {
  std::vector<std::uint64_t> multiplicities; // m_i pairs with r_i
  mpz_class target;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class CheckStatus { Pass, Fail, NotConfigured };

std::string_view to_string(CheckStatus s);

struct IdentityResult {
  int label;            // k in "c(k) = ...", as the identity is traditionally numbered
  std::int64_t exponent; // exponent of q in J~ holding the left-hand side
  mpz_class lhs;
  Decomposition decomposition;
  std::optional<mpz_class> rhs; // empty when NotConfigured
  CheckStatus status;
};

/// The five classical identities: c(2) = r1 + r2, ..., c(6) = 4r1 + ... + r7.
const std::vector<Decomposition>& thompson_identities();

/*
 * Evaluates every identity. The k-th left-hand side is the J~ coefficient of
 * q^(k-1). Identities referencing r_i beyond `r` report NotConfigured.
 * Throws InsufficientData if `c` stops before q^5.
 */
std::vector<IdentityResult> mckay_identity_check(const CoeffTable& c, const IrrepDims& r);

/// dims[i] is claimed as the dimension in degree i - 1.
bool graded_dimension_check(const CoeffTable& c, std::span<const mpz_class> dims);

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/*
 * All (m_1..m_k), 0 <= m_i <= max_mult, k = max_parts, with sum m_i r_i =
 * target. Depth-first from r_k down to r_1 with larger multiplicities first.
 */
std::vector<Decomposition> decompose_bounded(const mpz_class& target, const IrrepDims& r,
                                             std::uint64_t max_mult, std::size_t max_parts,
                                             std::uint64_t node_budget = kDefaultNodeBudget);

// ---------------------------------------------------------------------------

struct KnzMismatch {
  int p_exp;
  int q_exp;
  qseries::Coeff lhs;
  qseries::Coeff rhs;
};

struct KnzResult {
  qseries::BiLaurentSeries lhs;
  qseries::BiLaurentSeries rhs;
  bool equal;
  std::vector<KnzMismatch> mismatches;
};

/*
 * p^-1 prod_{m>0, n} (1 - p^m q^n)^{c(mn)} against J(p) - J(q) on exponents
 * [-1, order] in both variables. `c` must cover exponents up to (order+1)^2.
 */
KnzResult knz_verify(int order, const CoeffTable& c);

/// Uses J~ (c(0) = 0) or, with unnormalized_c0, c(0) = 744 in the exponents.
KnzResult knz_verify(int order, bool unnormalized_c0 = false);

// ---------------------------------------------------------------------------

struct PrimePower {
  unsigned prime;
  unsigned exponent;
};

struct MonsterFacts {
  std::vector<PrimePower> order_factorization;
  unsigned conjugacy_classes;
  unsigned distinct_mckay_thompson_series;
  unsigned span_dimension;
};

const MonsterFacts& monster_facts();
mpz_class monster_order();

} // namespace moonshine::monster

#endif
