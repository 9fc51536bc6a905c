#ifndef MOONSHINE_QSERIES_HPP
#define MOONSHINE_QSERIES_HPP

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace moonshine::qseries {

/// Exact rational coefficient. gmp keeps mpq_class values canonical
/// (lowest terms, positive denominator) after every arithmetic operation.
using Coeff = mpq_class;

/// Query at or past the truncation order: the coefficient is unknown, not zero.
class UnknownCoefficient : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class ZeroLeadingCoefficient : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class RectangleMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/*
 * Truncated Laurent series  sum_{e = valuation}^{trunc - 1} c_e q^e + O(q^trunc).
 *
 * Dense storage: coeffs_[i] is the coefficient of q^(valuation_ + i), and the
 * vector always spans the full window up to trunc - 1. The coefficient at the
 * valuation is nonzero; the zero series keeps no coefficients and reports
 * valuation() == trunc().
 */
class LaurentSeries {
public:
  static LaurentSeries zero(std::int64_t trunc);
  static LaurentSeries constant(const Coeff& c, std::int64_t trunc);
  static LaurentSeries monomial(const Coeff& c, std::int64_t exponent, std::int64_t trunc);

  /// coeffs[i] is the coefficient of q^(valuation + i); missing entries up to
  /// trunc are zero. Throws std::invalid_argument if coeffs reach past trunc.
  static LaurentSeries from_coeffs(std::int64_t valuation, std::vector<Coeff> coeffs,
                                   std::int64_t trunc);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t valuation() const { return valuation_; }
  std::int64_t trunc() const { return trunc_; }

  /// Throws UnknownCoefficient for e >= trunc().
  Coeff coeff(std::int64_t e) const;

  /// Coefficients from valuation() to trunc() - 1.
  std::span<const Coeff> coefficients() const { return coeffs_; }

  bool is_integral() const;

  /// Same series with fewer known terms. new_trunc must not exceed trunc().
  LaurentSeries truncated(std::int64_t new_trunc) const;

  /// Multiplication by q^k.
  LaurentSeries shifted(std::int64_t k) const;

  LaurentSeries operator-() const;

  /// Equality of value and precision.
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
  LaurentSeries(std::int64_t valuation, std::vector<Coeff> coeffs, std::int64_t trunc);
  void canonicalize();

  std::int64_t valuation_ = 0;
  std::vector<Coeff> coeffs_;
  std::int64_t trunc_ = 0;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scale(const LaurentSeries& a, const Coeff& c);

/// Cauchy product. The result is known up to
/// min(a.trunc + b.valuation, b.trunc + a.valuation).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse of a unit times q^v. Known on the same relative
/// window as the input, so the result has trunc = a.trunc - 2 a.valuation.
LaurentSeries invert(const LaurentSeries& a);

LaurentSeries pow(const LaurentSeries& a, std::int64_t e);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }

/// True when a and b agree on every exponent known to both.
bool agree_on_common_window(const LaurentSeries& a, const LaurentSeries& b);

std::string to_string(const LaurentSeries& a);

// ---------------------------------------------------------------------------
// Two-variable series in p and q.

/// Closed exponent box [p_min, p_max] x [q_min, q_max].
struct Rectangle {
  int p_min = 0;
  int p_max = 0;
  int q_min = 0;
  int q_max = 0;

  bool contains(int m, int n) const
  { return m >= p_min && m <= p_max && n >= q_min && n <= q_max; }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// Sparse sum of c_{m,n} p^m q^n truncated to a rectangle. Only nonzero terms
/// are stored, and every stored key lies inside the rectangle.
class BiLaurentSeries {
public:
  using Key = std::pair<int, int>;

  explicit BiLaurentSeries(Rectangle rect) : rect_(rect) {}

  static BiLaurentSeries one(Rectangle rect);
  static BiLaurentSeries monomial(Rectangle rect, const Coeff& c, int m, int n);

  const Rectangle& rectangle() const { return rect_; }
  const std::map<Key, Coeff>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Throws UnknownCoefficient outside the rectangle.
  Coeff coeff(int m, int n) const;

  /// Adds c p^m q^n; silently discarded outside the rectangle.
  void add_term(int m, int n, const Coeff& c);

  /// Drops everything outside `inner`, which must sit inside rectangle().
  BiLaurentSeries restricted(Rectangle inner) const;

  /// Exchanges the roles of p and q.
  BiLaurentSeries swapped() const;

  BiLaurentSeries operator-() const;

  friend bool operator==(const BiLaurentSeries&, const BiLaurentSeries&) = default;

private:
  Rectangle rect_;
  std::map<Key, Coeff> terms_;
};

BiLaurentSeries add(const BiLaurentSeries& a, const BiLaurentSeries& b);
BiLaurentSeries sub(const BiLaurentSeries& a, const BiLaurentSeries& b);
BiLaurentSeries mul(const BiLaurentSeries& a, const BiLaurentSeries& b);
BiLaurentSeries pow(const BiLaurentSeries& a, const mpz_class& e);

inline BiLaurentSeries operator+(const BiLaurentSeries& a, const BiLaurentSeries& b) { return add(a, b); }
inline BiLaurentSeries operator-(const BiLaurentSeries& a, const BiLaurentSeries& b) { return sub(a, b); }
inline BiLaurentSeries operator*(const BiLaurentSeries& a, const BiLaurentSeries& b) { return mul(a, b); }

std::string to_string(const BiLaurentSeries& a);

} // namespace moonshine::qseries

#endif
