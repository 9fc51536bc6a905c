#include "moonshine/qseries.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace moonshine::qseries {

namespace {

bool all_integral(std::span<const Coeff> cs)
{
  return std::all_of(cs.begin(), cs.end(), [](const Coeff& c) { return c.get_den() == 1; });
}

} // namespace

LaurentSeries::LaurentSeries(std::int64_t valuation, std::vector<Coeff> coeffs, std::int64_t trunc)
: valuation_(valuation), coeffs_(std::move(coeffs)), trunc_(trunc)
{
  canonicalize();
}

void LaurentSeries::canonicalize()
{
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return sgn(c) != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    valuation_ = trunc_;
    return;
  }
  valuation_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

LaurentSeries LaurentSeries::zero(std::int64_t trunc)
{
  return LaurentSeries(trunc, {}, trunc);
}

LaurentSeries LaurentSeries::constant(const Coeff& c, std::int64_t trunc)
{
  return monomial(c, 0, trunc);
}

LaurentSeries LaurentSeries::monomial(const Coeff& c, std::int64_t exponent, std::int64_t trunc)
{
  if (exponent >= trunc)
    return zero(trunc);
  std::vector<Coeff> cs(static_cast<std::size_t>(trunc - exponent));
  cs[0] = c;
  return LaurentSeries(exponent, std::move(cs), trunc);
}

LaurentSeries LaurentSeries::from_coeffs(std::int64_t valuation, std::vector<Coeff> coeffs,
                                         std::int64_t trunc)
{
  if (valuation >= trunc) {
    if (std::any_of(coeffs.begin(), coeffs.end(), [](const Coeff& c) { return sgn(c) != 0; }))
      throw std::invalid_argument("from_coeffs: coefficients past the truncation order");
    return zero(trunc);
  }
  auto width = static_cast<std::size_t>(trunc - valuation);
  if (coeffs.size() > width)
    throw std::invalid_argument("from_coeffs: coefficients past the truncation order");
  coeffs.resize(width);
  return LaurentSeries(valuation, std::move(coeffs), trunc);
}

Coeff LaurentSeries::coeff(std::int64_t e) const
{
  if (e >= trunc_)
    throw UnknownCoefficient("coefficient of q^" + std::to_string(e) +
                             " is beyond the truncation order " + std::to_string(trunc_));
  if (e < valuation_)
    return 0;
  return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

bool LaurentSeries::is_integral() const
{
  return all_integral(coeffs_);
}

LaurentSeries LaurentSeries::truncated(std::int64_t new_trunc) const
{
  if (new_trunc > trunc_)
    throw UnknownCoefficient("cannot extend a series past its truncation order");
  if (new_trunc <= valuation_)
    return zero(new_trunc);
  std::vector<Coeff> cs(coeffs_.begin(), coeffs_.begin() + (new_trunc - valuation_));
  return LaurentSeries(valuation_, std::move(cs), new_trunc);
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const
{
  LaurentSeries r = *this;
  r.valuation_ += k;
  r.trunc_ += k;
  return r;
}

LaurentSeries LaurentSeries::operator-() const
{
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b)
{
  std::int64_t trunc = std::min(a.trunc(), b.trunc());
  std::int64_t val = std::min(a.valuation(), b.valuation());
  if (val >= trunc)
    return LaurentSeries::zero(trunc);
  std::vector<Coeff> cs(static_cast<std::size_t>(trunc - val));
  for (std::int64_t e = val; e < trunc; ++e)
    cs[e - val] = a.coeff(e) + b.coeff(e);
  return LaurentSeries::from_coeffs(val, std::move(cs), trunc);
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b)
{
  return add(a, -b);
}

LaurentSeries scale(const LaurentSeries& a, const Coeff& c)
{
  if (a.is_zero())
    return a;
  std::vector<Coeff> cs(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : cs)
    x *= c;
  return LaurentSeries::from_coeffs(a.valuation(), std::move(cs), a.trunc());
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b)
{
  // For a zero operand valuation() == trunc(), i.e. the operand is O(q^trunc).
  std::int64_t val = a.valuation() + b.valuation();
  std::int64_t trunc = std::min(a.trunc() + b.valuation(), b.trunc() + a.valuation());
  if (a.is_zero() || b.is_zero() || val >= trunc)
    return LaurentSeries::zero(trunc);

  auto n = static_cast<std::size_t>(trunc - val);
  auto ac = a.coefficients();
  auto bc = b.coefficients();
  std::vector<Coeff> cs(n);

  if (a.is_integral() && b.is_integral()) {
    std::vector<mpz_class> acc(n);
    for (std::size_t i = 0; i < n && i < ac.size(); ++i) {
      const mpz_class& ai = ac[i].get_num();
      if (ai == 0)
        continue;
      std::size_t lim = std::min(bc.size(), n - i);
      for (std::size_t j = 0; j < lim; ++j)
        mpz_addmul(acc[i + j].get_mpz_t(), ai.get_mpz_t(), bc[j].get_num_mpz_t());
    }
    for (std::size_t k = 0; k < n; ++k)
      cs[k] = Coeff(acc[k]);
  } else {
    for (std::size_t i = 0; i < n && i < ac.size(); ++i) {
      if (sgn(ac[i]) == 0)
        continue;
      std::size_t lim = std::min(bc.size(), n - i);
      for (std::size_t j = 0; j < lim; ++j)
        cs[i + j] += ac[i] * bc[j];
    }
  }
  return LaurentSeries::from_coeffs(val, std::move(cs), trunc);
}

LaurentSeries invert(const LaurentSeries& a)
{
  if (a.is_zero())
    throw ZeroLeadingCoefficient("cannot invert a series that is zero up to its truncation order");

  auto u = a.coefficients();
  std::int64_t v = a.valuation();
  auto n = u.size();
  std::vector<Coeff> out(n);

  if (a.is_integral() && abs(u[0]) == 1) {
    // Leading coefficient is a unit of Z, so the inverse stays integral.
    const int lead = sgn(u[0]);
    std::vector<mpz_class> b(n);
    b[0] = lead;
    mpz_class acc;
    for (std::size_t k = 1; k < n; ++k) {
      acc = 0;
      for (std::size_t i = 1; i <= k; ++i)
        mpz_addmul(acc.get_mpz_t(), u[i].get_num_mpz_t(), b[k - i].get_mpz_t());
      b[k] = lead > 0 ? mpz_class(-acc) : acc;
    }
    for (std::size_t k = 0; k < n; ++k)
      out[k] = Coeff(b[k]);
  } else {
    Coeff inv0 = 1 / u[0];
    out[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
      Coeff acc = 0;
      for (std::size_t i = 1; i <= k; ++i)
        acc += u[i] * out[k - i];
      out[k] = -inv0 * acc;
    }
  }
  return LaurentSeries::from_coeffs(-v, std::move(out), a.trunc() - 2 * v);
}

LaurentSeries pow(const LaurentSeries& a, std::int64_t e)
{
  if (e < 0)
    return pow(invert(a), -e);
  if (e == 0) {
    if (a.is_zero())
      throw ZeroLeadingCoefficient("zeroth power of a series that is zero up to its truncation order");
    return LaurentSeries::constant(1, a.trunc() - a.valuation());
  }
  std::optional<LaurentSeries> result;
  LaurentSeries base = a;
  for (auto k = static_cast<std::uint64_t>(e);;) {
    if (k & 1)
      result = result ? mul(*result, base) : base;
    k >>= 1;
    if (!k)
      break;
    base = mul(base, base);
  }
  return *result;
}

bool agree_on_common_window(const LaurentSeries& a, const LaurentSeries& b)
{
  std::int64_t trunc = std::min(a.trunc(), b.trunc());
  std::int64_t lo = std::min(a.valuation(), b.valuation());
  for (std::int64_t e = lo; e < trunc; ++e)
    if (a.coeff(e) != b.coeff(e))
      return false;
  return true;
}

std::string to_string(const LaurentSeries& a)
{
  std::ostringstream os;
  bool first = true;
  auto cs = a.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (sgn(cs[i]) == 0)
      continue;
    if (!first)
      os << (sgn(cs[i]) < 0 ? " - " : " + ");
    else if (sgn(cs[i]) < 0)
      os << "-";
    first = false;
    os << abs(cs[i]) << "*q^" << a.valuation() + static_cast<std::int64_t>(i);
  }
  if (first)
    os << "0";
  os << " + O(q^" << a.trunc() << ")";
  return os.str();
}

} // namespace moonshine::qseries
