#include "moonshine/qseries.hpp"

#include <sstream>

namespace moonshine::qseries {

BiLaurentSeries BiLaurentSeries::one(Rectangle rect)
{
  return monomial(rect, 1, 0, 0);
}

BiLaurentSeries BiLaurentSeries::monomial(Rectangle rect, const Coeff& c, int m, int n)
{
  BiLaurentSeries r(rect);
  r.add_term(m, n, c);
  return r;
}

Coeff BiLaurentSeries::coeff(int m, int n) const
{
  if (!rect_.contains(m, n))
    throw UnknownCoefficient("coefficient of p^" + std::to_string(m) + " q^" + std::to_string(n) +
                             " lies outside the truncation rectangle");
  auto it = terms_.find({m, n});
  return it == terms_.end() ? Coeff(0) : it->second;
}

void BiLaurentSeries::add_term(int m, int n, const Coeff& c)
{
  if (!rect_.contains(m, n) || sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace({m, n}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

BiLaurentSeries BiLaurentSeries::restricted(Rectangle inner) const
{
  if (inner.p_min < rect_.p_min || inner.p_max > rect_.p_max ||
      inner.q_min < rect_.q_min || inner.q_max > rect_.q_max)
    throw RectangleMismatch("restriction rectangle is not contained in the series rectangle");
  BiLaurentSeries r(inner);
  for (const auto& [key, c] : terms_)
    if (inner.contains(key.first, key.second))
      r.terms_.emplace(key, c);
  return r;
}

BiLaurentSeries BiLaurentSeries::swapped() const
{
  BiLaurentSeries r(Rectangle{rect_.q_min, rect_.q_max, rect_.p_min, rect_.p_max});
  for (const auto& [key, c] : terms_)
    r.terms_.emplace(Key{key.second, key.first}, c);
  return r;
}

BiLaurentSeries BiLaurentSeries::operator-() const
{
  BiLaurentSeries r = *this;
  for (auto& [key, c] : r.terms_)
    c = -c;
  return r;
}

namespace {

void require_same_rectangle(const BiLaurentSeries& a, const BiLaurentSeries& b)
{
  if (!(a.rectangle() == b.rectangle()))
    throw RectangleMismatch("operands have different truncation rectangles");
}

} // namespace

BiLaurentSeries add(const BiLaurentSeries& a, const BiLaurentSeries& b)
{
  require_same_rectangle(a, b);
  BiLaurentSeries r = a;
  for (const auto& [key, c] : b.terms())
    r.add_term(key.first, key.second, c);
  return r;
}

BiLaurentSeries sub(const BiLaurentSeries& a, const BiLaurentSeries& b)
{
  return add(a, -b);
}

BiLaurentSeries mul(const BiLaurentSeries& a, const BiLaurentSeries& b)
{
  require_same_rectangle(a, b);
  const Rectangle& rect = a.rectangle();
  BiLaurentSeries r(rect);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      int m = ka.first + kb.first;
      int n = ka.second + kb.second;
      if (rect.contains(m, n))
        r.add_term(m, n, ca * cb);
    }
  }
  return r;
}

BiLaurentSeries pow(const BiLaurentSeries& a, const mpz_class& e)
{
  if (e < 0)
    throw std::invalid_argument("BiLaurentSeries pow: negative exponent");
  BiLaurentSeries result = BiLaurentSeries::one(a.rectangle());
  BiLaurentSeries base = a;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t()))
      result = mul(result, base);
    k >>= 1;
    if (k > 0)
      base = mul(base, base);
  }
  return result;
}

std::string to_string(const BiLaurentSeries& a)
{
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : a.terms()) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c << ")*p^" << key.first << "*q^" << key.second;
  }
  if (first)
    os << "0";
  return os.str();
}

} // namespace moonshine::qseries
