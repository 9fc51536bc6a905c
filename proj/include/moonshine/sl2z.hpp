#ifndef MOONSHINE_SL2Z_HPP
#define MOONSHINE_SL2Z_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace moonshine::sl2z {

using Integer = mpz_class;
using Rational = mpq_class;

class InvalidMatrix : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotInUpperHalfPlane : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateBasis : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Gaussian rational re + im*i.
struct ComplexQ {
  Rational re;
  Rational im;

  friend bool operator==(const ComplexQ&, const ComplexQ&) = default;
};

ComplexQ operator*(const ComplexQ& a, const ComplexQ& b);
ComplexQ operator/(const ComplexQ& a, const ComplexQ& b);

/// tau = x + iy with y > 0.
class UpperHalfPoint {
public:
  UpperHalfPoint(Rational x, Rational y);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  Rational norm2() const { return x_ * x_ + y_ * y_; }

  friend bool operator==(const UpperHalfPoint&, const UpperHalfPoint&) = default;

private:
  Rational x_;
  Rational y_;
};

/// Integer matrix (a b; c d) with ad - bc = 1.
class Mat2Z {
public:
  Mat2Z(Integer a, Integer b, Integer c, Integer d);

  static Mat2Z identity() { return {1, 0, 0, 1}; }
  static Mat2Z S() { return {0, -1, 1, 0}; }
  static Mat2Z T() { return {1, 1, 0, 1}; }
  static Mat2Z T_power(const Integer& k) { return {1, k, 0, 1}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Mat2Z inverse() const { return {d_, -b_, -c_, a_}; }
  Mat2Z operator-() const { return {-a_, -b_, -c_, -d_}; }
  friend Mat2Z operator*(const Mat2Z& l, const Mat2Z& r);
  friend bool operator==(const Mat2Z&, const Mat2Z&) = default;

private:
  Integer a_, b_, c_, d_;
};

/// Element of PSL2(Z), stored as the representative of {M, -M} with c > 0,
/// or c = 0 and a > 0.
class PSLElement {
public:
  explicit PSLElement(const Mat2Z& m);
  PSLElement() : PSLElement(Mat2Z::identity()) {}

  const Mat2Z& matrix() const { return m_; }
  bool is_identity() const { return m_ == Mat2Z::identity(); }
  PSLElement inverse() const { return PSLElement(m_.inverse()); }

  friend PSLElement operator*(const PSLElement& l, const PSLElement& r)
  { return PSLElement(l.m_ * r.m_); }
  friend bool operator==(const PSLElement&, const PSLElement&) = default;

private:
  Mat2Z m_;
};

/*
 * Word in S, T and T^-1, stored run-length encoded: each syllable is either S
 * or a power T^k with k != 0 (k copies of T, or |k| copies of T^-1).
 * Letters read left to right in matrix-product order.
 */
class GeneratorWord {
public:
  struct Syllable {
    enum class Kind { S, T } kind;
    Integer power; // 1 for S

    friend bool operator==(const Syllable&, const Syllable&) = default;
  };

  void append_S();
  void append_T(const Integer& k);
  void append(const GeneratorWord& w);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Number of S, T and T^-1 letters.
  Integer letter_count() const;

  Mat2Z evaluate() const;
  std::string to_string() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

private:
  std::vector<Syllable> syllables_;
};

UpperHalfPoint moebius(const Mat2Z& m, const UpperHalfPoint& tau);
inline UpperHalfPoint moebius(const PSLElement& m, const UpperHalfPoint& tau)
{ return moebius(m.matrix(), tau); }

/// |tau| >= 1 and -1/2 <= Re(tau) <= 1/2.
bool in_fundamental_domain(const UpperHalfPoint& tau);

struct Reduction {
  UpperHalfPoint point;
  PSLElement transform; // moebius(transform, input) == point
  GeneratorWord word;   // evaluates to transform in PSL
};

Reduction reduce_to_fundamental(const UpperHalfPoint& tau);

/// Some M with moebius(M, tau1) == tau2, if the points are in one orbit.
std::optional<PSLElement> tau_equivalent(const UpperHalfPoint& tau1, const UpperHalfPoint& tau2);

/// Word whose product equals m up to sign.
GeneratorWord word_decompose(const PSLElement& m);

/// Basis (w1, w2) of a lattice in C; w1/w2 must not be real.
class LatticeBasis {
public:
  LatticeBasis(ComplexQ w1, ComplexQ w2);

  const ComplexQ& w1() const { return w1_; }
  const ComplexQ& w2() const { return w2_; }

private:
  ComplexQ w1_;
  ComplexQ w2_;
};

/// w1/w2 when it lies in the upper half plane, otherwise w2/w1.
UpperHalfPoint tau_from_basis(const LatticeBasis& basis);

/// Plain integer 2x2 matrix; the determinant may be -1.
struct IntMatrix2 {
  Integer a, b, c, d;

  Integer det() const { return a * d - b * c; }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/*
 * Expresses b2 in terms of b1: W1 = A w1 + B w2, W2 = C w1 + D w2. Returns
 * (A B; C D) when it is integral with determinant +-1, i.e. when both bases
 * span the same lattice.
 */
std::optional<IntMatrix2> lattice_same(const LatticeBasis& b1, const LatticeBasis& b2);

std::string to_string(const Rational& q); // always "num/den"

} // namespace moonshine::sl2z

#endif
