#include "moonshine/sl2z.hpp"

#include <sstream>

namespace moonshine::sl2z {

ComplexQ operator*(const ComplexQ& a, const ComplexQ& b)
{
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexQ operator/(const ComplexQ& a, const ComplexQ& b)
{
  Rational n = b.re * b.re + b.im * b.im;
  if (sgn(n) == 0)
    throw std::domain_error("division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

UpperHalfPoint::UpperHalfPoint(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y))
{
  if (sgn(y_) <= 0)
    throw NotInUpperHalfPlane("imaginary part must be positive");
}

Mat2Z::Mat2Z(Integer a, Integer b, Integer c, Integer d)
: a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
  if (a_ * d_ - b_ * c_ != 1)
    throw InvalidMatrix("matrix does not have determinant 1");
}

Mat2Z operator*(const Mat2Z& l, const Mat2Z& r)
{
  return {l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
          l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_};
}

PSLElement::PSLElement(const Mat2Z& m) : m_(m)
{
  if (sgn(m_.c()) < 0 || (sgn(m_.c()) == 0 && sgn(m_.a()) < 0))
    m_ = -m_;
}

// ---------------------------------------------------------------------------

void GeneratorWord::append_S()
{
  syllables_.push_back({Syllable::Kind::S, 1});
}

void GeneratorWord::append_T(const Integer& k)
{
  if (k == 0)
    return;
  if (!syllables_.empty() && syllables_.back().kind == Syllable::Kind::T) {
    syllables_.back().power += k;
    if (syllables_.back().power == 0)
      syllables_.pop_back();
    return;
  }
  syllables_.push_back({Syllable::Kind::T, k});
}

void GeneratorWord::append(const GeneratorWord& w)
{
  for (const auto& s : w.syllables_) {
    if (s.kind == Syllable::Kind::S)
      append_S();
    else
      append_T(s.power);
  }
}

Integer GeneratorWord::letter_count() const
{
  Integer n = 0;
  for (const auto& s : syllables_)
    n += abs(s.power);
  return n;
}

Mat2Z GeneratorWord::evaluate() const
{
  Mat2Z m = Mat2Z::identity();
  for (const auto& s : syllables_)
    m = m * (s.kind == Syllable::Kind::S ? Mat2Z::S() : Mat2Z::T_power(s.power));
  return m;
}

std::string GeneratorWord::to_string() const
{
  if (syllables_.empty())
    return "id";
  std::ostringstream os;
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (i)
      os << ' ';
    const auto& s = syllables_[i];
    if (s.kind == Syllable::Kind::S)
      os << 'S';
    else if (s.power == 1)
      os << 'T';
    else
      os << "T^" << s.power;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

UpperHalfPoint moebius(const Mat2Z& m, const UpperHalfPoint& tau)
{
  // (a tau + b) / (c tau + d); Im = y / |c tau + d|^2 since det = 1.
  ComplexQ num{m.a() * tau.x() + m.b(), m.a() * tau.y()};
  ComplexQ den{m.c() * tau.x() + m.d(), m.c() * tau.y()};
  ComplexQ z = num / den;
  return {z.re, z.im};
}

bool in_fundamental_domain(const UpperHalfPoint& tau)
{
  static const Rational half(1, 2);
  return tau.norm2() >= 1 && tau.x() >= -half && tau.x() <= half;
}

namespace {

Integer floor_of(const Rational& q)
{
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Applies g on the left of the running transform and records it in the word.
struct Reducer {
  Reducer(Rational x0, Rational y0, Mat2Z m0 = Mat2Z::identity())
  : x(std::move(x0)), y(std::move(y0)), m(std::move(m0))
  {}

  Rational x, y;
  Mat2Z m;
  std::vector<GeneratorWord::Syllable> steps; // in application order

  void translate(const Integer& k)
  {
    if (k == 0)
      return;
    x += k;
    m = Mat2Z::T_power(k) * m;
    steps.push_back({GeneratorWord::Syllable::Kind::T, k});
  }

  void invert()
  {
    Rational n = x * x + y * y;
    x = -x / n;
    y = y / n;
    m = Mat2Z::S() * m;
    steps.push_back({GeneratorWord::Syllable::Kind::S, 1});
  }

  Reduction finish() const
  {
    GeneratorWord w;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      if (it->kind == GeneratorWord::Syllable::Kind::S)
        w.append_S();
      else
        w.append_T(it->power);
    }
    return {UpperHalfPoint(x, y), PSLElement(m), std::move(w)};
  }
};

} // namespace

Reduction reduce_to_fundamental(const UpperHalfPoint& tau)
{
  static const Rational half(1, 2);
  Reducer r(tau.x(), tau.y());
  for (;;) {
    // x + k in [-1/2, 1/2)
    r.translate(-floor_of(r.x + half));
    if (r.x * r.x + r.y * r.y < 1)
      r.invert();
    else
      break;
  }
  return r.finish();
}

namespace {

// Picks one representative for the boundary identifications of the closed
// domain: Re = 1/2 goes to Re = -1/2, and the arc |tau| = 1 to Re <= 0.
Reduction canonical_reduction(const UpperHalfPoint& tau)
{
  static const Rational half(1, 2);
  Reduction red = reduce_to_fundamental(tau);
  Reducer r(red.point.x(), red.point.y(), red.transform.matrix());
  if (r.x == half)
    r.translate(-1);
  if (r.x * r.x + r.y * r.y == 1 && sgn(r.x) > 0)
    r.invert();
  return {UpperHalfPoint(r.x, r.y), PSLElement(r.m), {}};
}

} // namespace

std::optional<PSLElement> tau_equivalent(const UpperHalfPoint& tau1, const UpperHalfPoint& tau2)
{
  Reduction r1 = canonical_reduction(tau1);
  Reduction r2 = canonical_reduction(tau2);
  if (!(r1.point == r2.point))
    return std::nullopt;
  return r2.transform.inverse() * r1.transform;
}

GeneratorWord word_decompose(const PSLElement& m)
{
  // Peel M = T^k S M' with |c'| < |c| until M' is upper triangular.
  GeneratorWord w;
  Integer a = m.matrix().a(), b = m.matrix().b();
  Integer c = m.matrix().c(), d = m.matrix().d();
  Integer k;
  while (c != 0) {
    mpz_fdiv_q(k.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    w.append_T(k);
    Integer a1 = a - k * c;
    Integer b1 = b - k * d;
    w.append_S();
    // S^-1 (a1 b1; c d) = (c d; -a1 -b1)
    a = c;
    b = d;
    c = -a1;
    d = -b1;
  }
  // (a b; 0 a) with a = +-1 is +-T^(ab)
  w.append_T(a * b);
  return w;
}

// ---------------------------------------------------------------------------

LatticeBasis::LatticeBasis(ComplexQ w1, ComplexQ w2) : w1_(std::move(w1)), w2_(std::move(w2))
{
  // Im(w1 * conj(w2)) = 0 iff w1/w2 is real (or a vector vanishes).
  if (sgn(w1_.im * w2_.re - w1_.re * w2_.im) == 0)
    throw DegenerateBasis("lattice basis vectors are linearly dependent over R");
}

UpperHalfPoint tau_from_basis(const LatticeBasis& basis)
{
  ComplexQ z = basis.w1() / basis.w2();
  if (sgn(z.im) > 0)
    return {z.re, z.im};
  ComplexQ s = basis.w2() / basis.w1();
  return {s.re, s.im};
}

std::optional<IntMatrix2> lattice_same(const LatticeBasis& b1, const LatticeBasis& b2)
{
  // Solve [Re w1 Re w2; Im w1 Im w2] [x; y] = [Re W; Im W] by Cramer's rule.
  const ComplexQ& w1 = b1.w1();
  const ComplexQ& w2 = b1.w2();
  Rational det = w1.re * w2.im - w2.re * w1.im;
  auto solve = [&](const ComplexQ& W) {
    Rational x = (W.re * w2.im - w2.re * W.im) / det;
    Rational y = (w1.re * W.im - W.re * w1.im) / det;
    return std::pair{x, y};
  };
  auto [A, B] = solve(b2.w1());
  auto [C, D] = solve(b2.w2());
  for (const Rational* q : {&A, &B, &C, &D})
    if (q->get_den() != 1)
      return std::nullopt;
  IntMatrix2 m{A.get_num(), B.get_num(), C.get_num(), D.get_num()};
  if (abs(m.det()) != 1)
    return std::nullopt;
  return m;
}

std::string to_string(const Rational& q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace moonshine::sl2z
